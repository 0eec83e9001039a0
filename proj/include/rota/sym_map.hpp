// Graded-symmetric multilinear maps S^i(V) -> W, stored on canonical words.
#pragma once

#include "rota/combinatorics.hpp"
#include "rota/scalar.hpp"

#include <map>
#include <memory>
#include <span>
#include <vector>

namespace rota {

using Word = std::vector<int>;

inline int word_degree(const Word& w, std::span<const int> gen_degrees)
{
    int d = 0;
    for (int i : w)
        d += gen_degrees[i];
    return d;
}

/// A weight-i component. `Value` is Vec (maps into g) or Matrix (maps into gl(V)).
/// Evaluation on any tuple is the Koszul sign of its sorting permutation times
/// the value stored on the sorted (canonical) word.
template <class Value>
class GradedSymMap {
public:
    GradedSymMap() = default;
    GradedSymMap(int weight, std::vector<int> gen_degrees, Value zero)
        : weight_(weight), gen_degrees_(std::move(gen_degrees)), zero_(std::move(zero))
    {
        if (weight < 0)
            throw Error("GradedSymMap: negative weight");
    }

    int weight() const { return weight_; }
    const std::vector<int>& gen_degrees() const { return gen_degrees_; }
    const Value& zero() const { return zero_; }
    const std::map<Word, Value>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// Stores `value` on a canonical word; zero values are dropped.
    void set(const Word& w, const Value& value)
    {
        check_canonical(w);
        if (rota::is_zero(value))
            values_.erase(w);
        else
            values_[w] = value;
    }

    const Value& get(const Word& w) const
    {
        auto it = values_.find(w);
        return it == values_.end() ? zero_ : it->second;
    }

    /// Koszul-signed symmetric extension; zero on words repeating an odd generator.
    Value eval(Word args) const
    {
        if (static_cast<int>(args.size()) != weight_)
            throw Error("eval_sym: expected " + std::to_string(weight_) + " arguments, got " +
                        std::to_string(args.size()));
        for (int a : args)
            if (a < 0 || a >= static_cast<int>(gen_degrees_.size()))
                throw Error("eval_sym: index out of range");
        int s = sort_graded(args, gen_degrees_);
        if (s == 0)
            return zero_;
        auto it = values_.find(args);
        if (it == values_.end())
            return zero_;
        if (s > 0)
            return it->second;
        Value v = it->second;
        v *= Rational(-1);
        return v;
    }

    /// f(w, rest...) with a general vector w in the first slot.
    Value eval_first(const Vec& w, const Word& rest) const
    {
        Value out = zero_;
        Word args(rest.size() + 1);
        std::copy(rest.begin(), rest.end(), args.begin() + 1);
        for (int a = 0; a < static_cast<int>(w.size()); ++a) {
            if (w[a] == 0)
                continue;
            args[0] = a;
            axpy(out, w[a], eval(args));
        }
        return out;
    }

    GradedSymMap& operator+=(const GradedSymMap& o)
    {
        for (const auto& [w, v] : o.values_) {
            Value s = get(w);
            s += v;
            set(w, s);
        }
        return *this;
    }
    GradedSymMap& operator-=(const GradedSymMap& o)
    {
        for (const auto& [w, v] : o.values_) {
            Value s = get(w);
            s -= v;
            set(w, s);
        }
        return *this;
    }
    GradedSymMap& operator*=(const Rational& c)
    {
        if (c == 0)
            values_.clear();
        for (auto& [w, v] : values_)
            v *= c;
        return *this;
    }

    friend bool operator==(const GradedSymMap& a, const GradedSymMap& b)
    {
        return a.weight_ == b.weight_ && a.gen_degrees_ == b.gen_degrees_ && a.values_ == b.values_;
    }

private:
    void check_canonical(const Word& w) const
    {
        if (static_cast<int>(w.size()) != weight_)
            throw Error("GradedSymMap: word length differs from weight");
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= static_cast<int>(gen_degrees_.size()))
                throw Error("GradedSymMap: index out of range");
            if (i > 0 && (w[i - 1] > w[i] || (w[i - 1] == w[i] && is_odd(gen_degrees_[w[i]]))))
                throw Error("GradedSymMap: word is not canonical");
        }
    }

    int weight_ = 0;
    std::vector<int> gen_degrees_;
    Value zero_;
    std::map<Word, Value> values_;
};

/// f = sum_i f_i in Hom^degree(S(V), W), components f_0..f_N (beyond N: zero).
template <class Value>
class SymCochain {
public:
    SymCochain() = default;
    SymCochain(int degree, int truncation, std::vector<int> gen_degrees, Value zero) : degree_(degree)
    {
        if (truncation < 0)
            throw Error("SymCochain: negative truncation");
        for (int i = 0; i <= truncation; ++i)
            comps_.emplace_back(i, gen_degrees, zero);
    }

    int degree() const { return degree_; }
    int truncation() const { return static_cast<int>(comps_.size()) - 1; }
    const std::vector<int>& gen_degrees() const { return comps_.front().gen_degrees(); }
    const Value& zero() const { return comps_.front().zero(); }

    GradedSymMap<Value>& component(int i) { return comps_.at(i); }

    /// Component of weight i; an empty map beyond the truncation.
    const GradedSymMap<Value>& component(int i) const
    {
        if (i < static_cast<int>(comps_.size()))
            return comps_[i];
        if (!beyond_ || beyond_->weight() != i)
            beyond_ = std::make_shared<GradedSymMap<Value>>(i, gen_degrees(), zero());
        return *beyond_;
    }

    bool is_zero() const
    {
        for (const auto& c : comps_)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool is_zero_to(int p_max) const
    {
        for (int i = 0; i <= std::min(p_max, truncation()); ++i)
            if (!comps_[i].is_zero())
                return false;
        return true;
    }

    SymCochain& operator+=(const SymCochain& o)
    {
        grow(o.truncation());
        for (int i = 0; i <= o.truncation(); ++i)
            comps_[i] += o.comps_[i];
        return *this;
    }
    SymCochain& operator-=(const SymCochain& o)
    {
        grow(o.truncation());
        for (int i = 0; i <= o.truncation(); ++i)
            comps_[i] -= o.comps_[i];
        return *this;
    }
    SymCochain& operator*=(const Rational& c)
    {
        for (auto& comp : comps_)
            comp *= c;
        return *this;
    }
    friend SymCochain operator+(SymCochain a, const SymCochain& b) { return a += b; }
    friend SymCochain operator-(SymCochain a, const SymCochain& b) { return a -= b; }
    friend SymCochain operator*(const Rational& c, SymCochain a) { return a *= c; }

    /// Equal on every weight up to p_max (missing components count as zero).
    bool equal_to(const SymCochain& o, int p_max) const
    {
        for (int i = 0; i <= p_max; ++i)
            if (!(component(i).values() == o.component(i).values()))
                return false;
        return true;
    }

    void grow(int truncation)
    {
        while (this->truncation() < truncation)
            comps_.emplace_back(static_cast<int>(comps_.size()), gen_degrees(), zero());
    }

    /// Drops components above `truncation`.
    void truncate(int truncation)
    {
        if (truncation < this->truncation())
            comps_.resize(truncation + 1);
    }

private:
    int degree_ = 0;
    std::vector<GradedSymMap<Value>> comps_;
    mutable std::shared_ptr<GradedSymMap<Value>> beyond_;
};

} // namespace rota
