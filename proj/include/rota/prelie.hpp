// Pre-Lie algebras, Hom(wedge^k V (x) V, V) with the Matsushima-Nijenhuis
// bracket, and the map sending C*(V,g) into it.
#pragma once

#include "rota/alt_map.hpp"
#include "rota/deformation.hpp"
#include "rota/lie.hpp"
#include "rota/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rota {

/// e_i . e_j = sum_k mu[i][j][k] e_k
struct PreLieProduct {
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> mu;

    PreLieProduct() = default;
    explicit PreLieProduct(std::vector<std::string> names) : basis(std::move(names))
    {
        const std::size_t n = basis.size();
        mu.assign(n, std::vector<Vec>(n, zero_vec(n)));
    }

    std::size_t dim() const { return basis.size(); }

    Vec product(const Vec& x, const Vec& y) const
    {
        Vec out = zero_vec(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                if (y[j] != 0)
                    axpy(out, x[i] * y[j], mu[i][j]);
        }
        return out;
    }

    void check_shape() const
    {
        if (mu.size() != dim())
            throw Error("pre-Lie constants: wrong number of rows");
        for (const auto& row : mu) {
            if (row.size() != dim())
                throw Error("pre-Lie constants: ragged second index");
            for (const auto& v : row)
                if (v.size() != dim())
                    throw Error("pre-Lie constants: ragged third index");
        }
    }

    friend bool operator==(const PreLieProduct& a, const PreLieProduct& b) { return a.mu == b.mu; }
};

/// Left-symmetry (x.y).z - x.(y.z) = (y.x).z - y.(x.z) on all basis triples.
inline Report check_prelie(const PreLieProduct& P)
{
    P.check_shape();
    const std::size_t n = P.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = unit_vec(n, k);
                Vec r = P.product(P.mu[i][j], ek) - P.product(unit_vec(n, i), P.mu[j][k]) -
                        P.product(P.mu[j][i], ek) + P.product(unit_vec(n, j), P.mu[i][k]);
                if (!is_zero(r))
                    return Report::fail("left-symmetry", 3, {{int(i), int(j), int(k)}, r,
                        "(x.y).z - x.(y.z) - (y.x).z + y.(x.z) != 0"});
            }
    return Report::ok("left-symmetry", 3);
}

/// Element of Hom(wedge^k V (x) V, V): antisymmetric in the first k slots,
/// the last slot is free. Keys are (increasing k-tuple, last index).
class HookedMap {
public:
    using Key = std::pair<Tuple, int>;

    HookedMap() = default;
    HookedMap(int arity, int dim) : arity_(arity), dim_(dim)
    {
        if (arity < 0 || dim < 0)
            throw Error("HookedMap: negative arity or dimension");
    }

    int arity() const { return arity_; }
    int dim() const { return dim_; }

    void set(const Tuple& args, int last, const Vec& value)
    {
        if (static_cast<int>(args.size()) != arity_ || last < 0 || last >= dim_)
            throw Error("HookedMap: bad key");
        for (std::size_t i = 0; i < args.size(); ++i)
            if (args[i] < 0 || args[i] >= dim_ || (i > 0 && args[i - 1] >= args[i]))
                throw Error("HookedMap: antisymmetric block must be strictly increasing and in range");
        if (static_cast<int>(value.size()) != dim_)
            throw Error("HookedMap: value has wrong dimension");
        if (rota::is_zero(value))
            values_.erase({args, last});
        else
            values_[{args, last}] = value;
    }

    Vec get(const Tuple& args, int last) const
    {
        auto it = values_.find({args, last});
        return it == values_.end() ? zero_vec(dim_) : it->second;
    }

    const std::map<Key, Vec>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    HookedMap& operator+=(const HookedMap& o)
    {
        same_space(o);
        for (const auto& [k, v] : o.values_)
            set(k.first, k.second, get(k.first, k.second) + v);
        return *this;
    }
    HookedMap& operator-=(const HookedMap& o)
    {
        same_space(o);
        for (const auto& [k, v] : o.values_)
            set(k.first, k.second, get(k.first, k.second) - v);
        return *this;
    }
    friend HookedMap operator+(HookedMap a, const HookedMap& b) { return a += b; }
    friend HookedMap operator-(HookedMap a, const HookedMap& b) { return a -= b; }
    friend HookedMap operator*(const Rational& c, HookedMap a)
    {
        if (c == 0)
            return HookedMap(a.arity_, a.dim_);
        for (auto& [k, v] : a.values_)
            v = c * v;
        return a;
    }
    friend bool operator==(const HookedMap& a, const HookedMap& b)
    {
        return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.values_ == b.values_;
    }

    void same_space(const HookedMap& o) const
    {
        if (arity_ != o.arity_ || dim_ != o.dim_)
            throw Error("HookedMap: space or arity mismatch");
    }

private:
    int arity_ = 0;
    int dim_ = 0;
    std::map<Key, Vec> values_;
};

/// alpha(u_1..u_k, u_{k+1}); signs route only through the first k arguments.
inline Vec eval_hooked(const HookedMap& a, Tuple args, int last)
{
    if (static_cast<int>(args.size()) != a.arity())
        throw Error("eval_hooked: arity mismatch");
    int s = sort_alternating(args);
    if (s == 0)
        return zero_vec(a.dim());
    Vec v = a.get(args, last);
    return s > 0 ? v : Rational(-1) * v;
}

/// alpha(w, u_2..u_k, last) with a vector w in the first slot.
inline Vec eval_hooked_first(const HookedMap& a, const Vec& w, const Tuple& rest, int last)
{
    Vec out = zero_vec(a.dim());
    Tuple args(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), args.begin() + 1);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 0)
            continue;
        args[0] = i;
        axpy(out, w[i], eval_hooked(a, args, last));
    }
    return out;
}

/// alpha(u_1..u_k, w) with a vector w in the last slot.
inline Vec eval_hooked_last(const HookedMap& a, const Tuple& args, const Vec& w)
{
    Vec out = zero_vec(a.dim());
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != 0)
            axpy(out, w[i], eval_hooked(a, args, i));
    return out;
}

/// (alpha o beta)(u_1..u_{m+n+1}) for alpha of arity n, beta of arity m:
///   sum_{S(m,1,n-1)} (-1)^s alpha(beta(u_s1..u_s(m+1)), u_s(m+2)..u_s(m+n), u_{m+n+1})
/// + (-1)^{mn} sum_{S(n,m)} (-1)^s alpha(u_s1..u_sn, beta(u_s(n+1)..u_s(m+n), u_{m+n+1})).
/// The final argument is never permuted.
inline HookedMap circ(const HookedMap& alpha, const HookedMap& beta)
{
    if (alpha.dim() != beta.dim())
        throw Error("circ: maps live on different spaces");
    const int n = alpha.arity();
    const int m = beta.arity();
    const int d = alpha.dim();
    const int smn = minus_one_pow(m * n);
    HookedMap out(n + m, d);
    const auto first = unshuffles({m, 1, n - 1});
    const auto second = unshuffles({n, m});
    for (const auto& u : increasing_tuples(d, n + m))
        for (int z = 0; z < d; ++z) {
            Vec acc = zero_vec(d);
            for (const auto& s : first) {
                Vec w = eval_hooked(beta, pick(u, s, 0, m), u[s[m]]);
                if (is_zero(w))
                    continue;
                axpy(acc, Rational(sign(s)), eval_hooked_first(alpha, w, pick(u, s, m + 1, m + n), z));
            }
            for (const auto& s : second) {
                Vec w = eval_hooked(beta, pick(u, s, n, n + m), z);
                if (is_zero(w))
                    continue;
                axpy(acc, Rational(smn * sign(s)), eval_hooked_last(alpha, pick(u, s, 0, n), w));
            }
            out.set(u, z, acc);
        }
    return out;
}

/// [alpha,beta]^C = alpha o beta - (-1)^{mn} beta o alpha.
inline HookedMap mn_bracket(const HookedMap& alpha, const HookedMap& beta)
{
    const int smn = minus_one_pow(alpha.arity() * beta.arity());
    return circ(alpha, beta) - Rational(smn) * circ(beta, alpha);
}

/// The 1-ary hooked map u (x) v |-> u . v.
inline HookedMap to_hooked(const PreLieProduct& P)
{
    const int n = static_cast<int>(P.dim());
    HookedMap a(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.set({i}, j, P.mu[i][j]);
    return a;
}

inline PreLieProduct to_prelie(const HookedMap& a, std::vector<std::string> names = {})
{
    if (a.arity() != 1)
        throw Error("to_prelie: expected a 1-ary hooked map");
    if (names.empty())
        for (int i = 0; i < a.dim(); ++i)
            names.push_back("e" + std::to_string(i + 1));
    PreLieProduct P(std::move(names));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            P.mu[i][j] = a.get({i}, j);
    return P;
}

/// Phi(f)(u_1..u_k, u_{k+1}) = rho(f(u_1..u_k)) u_{k+1}.
inline HookedMap phi(const AltMap& f, const Representation& R)
{
    if (f.dim_v() != static_cast<int>(R.space_dim) || f.dim_g() != static_cast<int>(R.action.size()))
        throw Error("phi: map does not match the representation");
    const int d = f.dim_v();
    HookedMap out(f.arity(), d);
    for (const auto& [args, x] : f.values())
        for (int z = 0; z < d; ++z)
            out.set(args, z, R.act_basis(x, z));
    return out;
}

/// Phi([[f,g]]) == [Phi f, Phi g]^C, exactly.
inline bool check_phi_homomorphism(const AltMap& f, const AltMap& g, const Representation& R, const LieAlgebra& L,
                                   int arity_max = kDefaultArityMax)
{
    return phi(courant_bracket(f, g, L, R, arity_max), R) == mn_bracket(phi(f, R), phi(g, R));
}

/// u ._T v = rho(Tu) v. Requires T to be an O-operator unless `unchecked`.
inline PreLieProduct induce_prelie(const LinearOperator& T, const LieAlgebra& L, const Representation& R,
                                   bool unchecked = false)
{
    check_operator_shape(L, R, T);
    if (!unchecked && !is_oop(L, R, T))
        throw Error("induce_prelie: T is not an O-operator");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < R.space_dim; ++i)
        names.push_back("v" + std::to_string(i + 1));
    PreLieProduct P(std::move(names));
    for (std::size_t i = 0; i < R.space_dim; ++i) {
        Vec ti = T.apply_basis(i);
        for (std::size_t j = 0; j < R.space_dim; ++j)
            P.mu[i][j] = R.act_basis(ti, j);
    }
    return P;
}

/// Groups O-operators by exact equality of their induced products (fibers of
/// Phi restricted to O-operators). Classes list input indices in order of first
/// appearance. The grouping is basis-dependent: no change of basis is applied.
inline std::vector<std::vector<std::size_t>> fiber_classes(const std::vector<LinearOperator>& ops, const LieAlgebra& L,
                                                           const Representation& R)
{
    std::vector<PreLieProduct> reps;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!is_oop(L, R, ops[i]))
            throw Error("fiber_classes: operator " + std::to_string(i) + " is not an O-operator");
        PreLieProduct P = induce_prelie(ops[i], L, R, true);
        std::size_t c = 0;
        while (c < reps.size() && !(reps[c] == P))
            ++c;
        if (c == reps.size()) {
            reps.push_back(std::move(P));
            classes.emplace_back();
        }
        classes[c].push_back(i);
    }
    return classes;
}

} // namespace rota
