// Elements of Hom(wedge^k V, g), stored on strictly increasing index tuples.
#pragma once

#include "rota/combinatorics.hpp"
#include "rota/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace rota {

using Tuple = std::vector<int>;

class AltMap {
public:
    AltMap() = default;
    AltMap(int arity, int dim_v, int dim_g) : arity_(arity), dim_v_(dim_v), dim_g_(dim_g)
    {
        if (arity < 0 || dim_v < 0 || dim_g < 0)
            throw Error("AltMap: negative arity or dimension");
    }

    int arity() const { return arity_; }
    int dim_v() const { return dim_v_; }
    int dim_g() const { return dim_g_; }

    /// Stores `value` on the increasing tuple `args`. Zero values are not kept.
    void set(const Tuple& args, const Vec& value)
    {
        check_key(args);
        if (static_cast<int>(value.size()) != dim_g_)
            throw Error("AltMap: value has wrong dimension");
        if (rota::is_zero(value))
            values_.erase(args);
        else
            values_[args] = value;
    }

    /// Value on an increasing tuple (zero if not stored).
    Vec get(const Tuple& args) const
    {
        auto it = values_.find(args);
        return it == values_.end() ? zero_vec(dim_g_) : it->second;
    }

    const std::map<Tuple, Vec>& values() const { return values_; }

    bool is_zero() const { return values_.empty(); }

    AltMap& operator+=(const AltMap& o)
    {
        same_space(o);
        for (const auto& [k, v] : o.values_)
            set(k, get(k) + v);
        return *this;
    }
    AltMap& operator-=(const AltMap& o)
    {
        same_space(o);
        for (const auto& [k, v] : o.values_)
            set(k, get(k) - v);
        return *this;
    }
    friend AltMap operator+(AltMap a, const AltMap& b) { return a += b; }
    friend AltMap operator-(AltMap a, const AltMap& b) { return a -= b; }
    friend AltMap operator*(const Rational& c, AltMap a)
    {
        if (c == 0)
            return AltMap(a.arity_, a.dim_v_, a.dim_g_);
        for (auto& [k, v] : a.values_)
            v = c * v;
        return a;
    }

    friend bool operator==(const AltMap& a, const AltMap& b)
    {
        return a.arity_ == b.arity_ && a.dim_v_ == b.dim_v_ && a.dim_g_ == b.dim_g_ && a.values_ == b.values_;
    }

    void same_space(const AltMap& o) const
    {
        if (arity_ != o.arity_ || dim_v_ != o.dim_v_ || dim_g_ != o.dim_g_)
            throw Error("AltMap: space or arity mismatch");
    }

private:
    void check_key(const Tuple& args) const
    {
        if (static_cast<int>(args.size()) != arity_)
            throw Error("AltMap: tuple length differs from arity");
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] < 0 || args[i] >= dim_v_)
                throw Error("AltMap: index out of range");
            if (i > 0 && args[i - 1] >= args[i])
                throw Error("AltMap: stored tuples must be strictly increasing");
        }
    }

    int arity_ = 0;
    int dim_v_ = 0;
    int dim_g_ = 0;
    std::map<Tuple, Vec> values_;
};

/// Antisymmetric extension: f(u_{p(1)},...) = sign(p) f(u_1,...); zero on repeats.
inline Vec eval_alt(const AltMap& f, Tuple args)
{
    if (static_cast<int>(args.size()) != f.arity())
        throw Error("eval_alt: expected " + std::to_string(f.arity()) + " arguments, got " +
                    std::to_string(args.size()));
    for (int a : args)
        if (a < 0 || a >= f.dim_v())
            throw Error("eval_alt: index out of range");
    int s = sort_alternating(args);
    if (s == 0)
        return zero_vec(f.dim_g());
    Vec v = f.get(args);
    if (s < 0)
        for (auto& x : v)
            x = -x;
    return v;
}

/// f(w, u_2, ..., u_k) with a general vector w in the first slot.
inline Vec eval_alt_first(const AltMap& f, const Vec& w, const Tuple& rest)
{
    Vec out = zero_vec(f.dim_g());
    Tuple args(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), args.begin() + 1);
    for (int a = 0; a < static_cast<int>(w.size()); ++a) {
        if (w[a] == 0)
            continue;
        args[0] = a;
        axpy(out, w[a], eval_alt(f, args));
    }
    return out;
}

/// The arity-0 map holding a single element of g.
inline AltMap constant_alt(int dim_v, const Vec& x)
{
    AltMap f(0, dim_v, static_cast<int>(x.size()));
    f.set({}, x);
    return f;
}

} // namespace rota
