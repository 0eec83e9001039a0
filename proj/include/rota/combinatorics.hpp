// Permutations, unshuffles, permutation parity and Koszul signs.
//
// Permutations are stored in one-line notation, 0-based: p[i] is the image of i.
// A sum over an (i_1,...,i_k)-unshuffle sigma reads the arguments in the order
// v_{sigma(0)}, ..., v_{sigma(n-1)}; within each block the images increase.
#pragma once

#include "rota/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace rota {

using Permutation = std::vector<int>;
using DegreeVector = std::vector<int>;

inline bool is_permutation(std::span<const int> p)
{
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

inline Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// (p o q)(i) = p(q(i)).
inline Permutation compose(std::span<const int> p, std::span<const int> q)
{
    if (p.size() != q.size())
        throw Error("compose: size mismatch");
    Permutation r(p.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

inline Permutation inverse(std::span<const int> p)
{
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<int>(i);
    return r;
}

/// Parity of p as +1 or -1 (inversion count).
inline int sign(std::span<const int> p)
{
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

inline bool is_odd(int degree) { return degree % 2 != 0; }

/// Koszul sign eps(p; v_0..v_{n-1}) defined by
///   v_0 . ... . v_{n-1} = eps * v_{p(0)} . ... . v_{p(n-1)}
/// in the graded-symmetric algebra, degs[i] being the degree of v_i.
/// Computed by bubble-sorting the reordered sequence back to the identity,
/// one factor (-1)^{d_a d_b} per adjacent swap.
inline int koszul_sign(std::span<const int> p, std::span<const int> degs)
{
    if (p.size() != degs.size())
        throw Error("koszul_sign: permutation and degree vector differ in length");
    std::vector<int> seq(p.begin(), p.end());
    int s = 1;
    for (std::size_t pass = 0; pass + 1 < seq.size(); ++pass)
        for (std::size_t j = 0; j + 1 < seq.size() - pass; ++j)
            if (seq[j] > seq[j + 1]) {
                if (is_odd(degs[seq[j]]) && is_odd(degs[seq[j + 1]]))
                    s = -s;
                std::swap(seq[j], seq[j + 1]);
            }
    return s;
}

/// All (shape[0], ..., shape[k-1])-unshuffles of n = sum(shape) letters.
/// Zero parts are dropped. A negative part yields no permutations (an empty sum).
inline std::vector<Permutation> unshuffles(std::span<const int> shape)
{
    int n = 0;
    for (int part : shape) {
        if (part < 0)
            return {};
        n += part;
    }
    std::vector<Permutation> out;
    // block[i] = block index of letter i; enumerate all block assignments with
    // the prescribed sizes, then read the letters block by block.
    std::vector<int> remaining(shape.begin(), shape.end());
    std::vector<int> block(n, 0);
    auto emit = [&] {
        Permutation p;
        p.reserve(n);
        for (std::size_t b = 0; b < shape.size(); ++b)
            for (int i = 0; i < n; ++i)
                if (block[i] == static_cast<int>(b))
                    p.push_back(i);
        out.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter == n) {
            emit();
            return;
        }
        for (std::size_t b = 0; b < remaining.size(); ++b) {
            if (remaining[b] == 0)
                continue;
            --remaining[b];
            block[letter] = static_cast<int>(b);
            self(self, letter + 1);
            ++remaining[b];
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Permutation> unshuffles(std::initializer_list<int> shape)
{
    return unshuffles(std::span<const int>(shape.begin(), shape.size()));
}

/// n! / (i_1! ... i_k!)
inline std::size_t multinomial(std::span<const int> shape)
{
    std::size_t result = 1;
    int total = 0;
    for (int part : shape) {
        for (int j = 1; j <= part; ++j) {
            ++total;
            result = result * static_cast<std::size_t>(total) / static_cast<std::size_t>(j);
        }
    }
    return result;
}

/// Sorts `indices` ascending and returns the sign accumulated by adjacent swaps,
/// where swapping two entries contributes sign_of_swap(a, b).
/// Returns 0 if reject(a, b) holds for two equal adjacent entries after sorting.
template <class SwapSign, class RejectRepeat>
int sort_with_sign(std::vector<int>& indices, SwapSign sign_of_swap, RejectRepeat reject)
{
    int s = 1;
    for (std::size_t pass = 0; pass + 1 < indices.size(); ++pass)
        for (std::size_t j = 0; j + 1 < indices.size() - pass; ++j)
            if (indices[j] > indices[j + 1]) {
                s *= sign_of_swap(indices[j], indices[j + 1]);
                std::swap(indices[j], indices[j + 1]);
            }
    for (std::size_t j = 0; j + 1 < indices.size(); ++j)
        if (indices[j] == indices[j + 1] && reject(indices[j]))
            return 0;
    return s;
}

/// Sorting sign for antisymmetric arguments; 0 on a repeated index.
inline int sort_alternating(std::vector<int>& indices)
{
    return sort_with_sign(indices, [](int, int) { return -1; }, [](int) { return true; });
}

/// Sorting sign for graded-symmetric arguments with generator degrees `degree_of`;
/// 0 when an odd generator repeats.
inline int sort_graded(std::vector<int>& indices, std::span<const int> degree_of)
{
    return sort_with_sign(
        indices,
        [&](int a, int b) { return is_odd(degree_of[a]) && is_odd(degree_of[b]) ? -1 : 1; },
        [&](int a) { return is_odd(degree_of[a]); });
}

/// All strictly increasing k-tuples over {0..n-1}.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Canonical words of weight k: weakly increasing index sequences over
/// {0..n-1} in which no odd-degree generator appears twice.
inline std::vector<std::vector<int>> canonical_words(std::span<const int> degree_of, int k)
{
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(degree_of.size());
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, is_odd(degree_of[i]) ? i + 1 : i);
            cur.pop_back();
        }
    };
    if (k >= 0)
        rec(rec, 0);
    return out;
}

/// Picks entries of `items` in the order given by `p`, restricted to [from, to).
template <class T>
std::vector<T> pick(const std::vector<T>& items, std::span<const int> p, std::size_t from, std::size_t to)
{
    std::vector<T> out;
    out.reserve(to - from);
    for (std::size_t i = from; i < to; ++i)
        out.push_back(items[p[i]]);
    return out;
}

} // namespace rota
