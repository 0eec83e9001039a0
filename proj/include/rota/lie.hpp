// Finite-dimensional Lie algebras by structure constants, matrix
// representations, and the Rota-Baxter / O-operator identities.
#pragma once

#include "rota/alt_map.hpp"
#include "rota/report.hpp"
#include "rota/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace rota {

/// [e_i, e_j] = sum_k c[i][j][k] e_k. Construction does not validate;
/// use check_lie.
struct LieAlgebra {
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> c;

    LieAlgebra() = default;

    /// Abelian algebra on the given basis; fill constants with set_bracket.
    explicit LieAlgebra(std::vector<std::string> names) : basis(std::move(names))
    {
        const std::size_t n = basis.size();
        c.assign(n, std::vector<Vec>(n, zero_vec(n)));
    }

    std::size_t dim() const { return basis.size(); }

    /// Sets [e_i,e_j] = value and [e_j,e_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const Vec& value)
    {
        c.at(i).at(j) = value;
        c.at(j).at(i) = Rational(-1) * value;
    }

    Vec bracket(const Vec& x, const Vec& y) const
    {
        Vec out = zero_vec(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                if (y[j] != 0)
                    axpy(out, x[i] * y[j], c[i][j]);
        }
        return out;
    }

    void check_shape() const
    {
        const std::size_t n = dim();
        if (c.size() != n)
            throw Error("structure constants: expected " + std::to_string(n) + " rows");
        for (const auto& row : c) {
            if (row.size() != n)
                throw Error("structure constants: ragged second index");
            for (const auto& v : row)
                if (v.size() != n)
                    throw Error("structure constants: ragged third index");
        }
    }
};

/// rho(e_i) acting on a space of dimension space_dim.
struct Representation {
    std::size_t space_dim = 0;
    std::vector<Matrix> action;

    Matrix rho(const Vec& x) const { return combine(action, x, space_dim, space_dim); }

    Vec act(const Vec& x, const Vec& v) const
    {
        Vec out = zero_vec(space_dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                axpy(out, x[i], action[i] * v);
        return out;
    }

    /// rho(x) applied to the basis vector e_j.
    Vec act_basis(const Vec& x, std::size_t j) const
    {
        Vec out = zero_vec(space_dim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                for (std::size_t r = 0; r < space_dim; ++r)
                    if (action[i](r, j) != 0)
                        out[r] += x[i] * action[i](r, j);
        return out;
    }

    void check_shape(const LieAlgebra& L) const
    {
        if (action.size() != L.dim())
            throw Error("representation: expected one matrix per Lie basis element");
        for (const auto& m : action)
            if (m.rows() != space_dim || m.cols() != space_dim)
                throw Error("representation: matrix shape differs from space dimension");
    }
};

enum class Space { V, G };

/// A linear map between the module V and the algebra g (or g to g).
struct LinearOperator {
    Matrix matrix;
    Space domain = Space::V;
    Space codomain = Space::G;

    Vec apply(const Vec& v) const { return matrix * v; }
    Vec apply_basis(std::size_t j) const { return matrix.column(j); }

    friend bool operator==(const LinearOperator& a, const LinearOperator& b) { return a.matrix == b.matrix; }
};

struct LieCheck {
    Report antisymmetry;
    Report jacobi;
    bool ok() const { return antisymmetry.pass && jacobi.pass; }
};

inline LieCheck check_lie(const LieAlgebra& L)
{
    L.check_shape();
    const std::size_t n = L.dim();
    LieCheck out{Report::ok("antisymmetry", 2), Report::ok("jacobi", 3)};
    for (std::size_t i = 0; i < n && out.antisymmetry.pass; ++i)
        for (std::size_t j = 0; j < n && out.antisymmetry.pass; ++j) {
            Vec r = L.c[i][j] + L.c[j][i];
            if (!is_zero(r))
                for (std::size_t k = 0; k < n; ++k)
                    if (r[k] != 0) {
                        out.antisymmetry = Report::fail("antisymmetry", 2,
                            {{int(i), int(j), int(k)}, {r[k]}, "c[i][j][k] + c[j][i][k] != 0"});
                        break;
                    }
        }
    for (std::size_t i = 0; i < n && out.jacobi.pass; ++i)
        for (std::size_t j = 0; j < n && out.jacobi.pass; ++j)
            for (std::size_t k = 0; k < n && out.jacobi.pass; ++k) {
                Vec r = L.bracket(L.c[i][j], unit_vec(n, k)) + L.bracket(L.c[j][k], unit_vec(n, i)) +
                        L.bracket(L.c[k][i], unit_vec(n, j));
                if (!is_zero(r))
                    out.jacobi = Report::fail("jacobi", 3, {{int(i), int(j), int(k)}, r,
                        "[[e_i,e_j],e_k] + cyclic != 0"});
            }
    return out;
}

/// rho([e_i,e_j]) = [rho(e_i), rho(e_j)] for all i < j.
inline Report check_representation(const LieAlgebra& L, const Representation& R)
{
    L.check_shape();
    R.check_shape(L);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Matrix lhs = R.rho(L.c[i][j]);
            Matrix rhs = R.action[i] * R.action[j] - R.action[j] * R.action[i];
            Matrix r = lhs - rhs;
            if (!r.is_zero())
                return Report::fail("representation", 2, {{int(i), int(j)}, r.data(),
                    "rho([e_i,e_j]) - [rho(e_i),rho(e_j)] != 0"});
        }
    return Report::ok("representation", 2);
}

/// ad(e_i)_{kj} = c[i][j][k].
inline Representation adjoint(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    Representation R{n, std::vector<Matrix>(n, Matrix(n, n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                R.action[i](k, j) = L.c[i][j][k];
    return R;
}

inline void check_operator_shape(const LieAlgebra& L, const Representation& R, const LinearOperator& T)
{
    if (T.matrix.rows() != L.dim() || T.matrix.cols() != R.space_dim)
        throw Error("operator: expected a " + std::to_string(L.dim()) + "x" + std::to_string(R.space_dim) +
                    " matrix V -> g");
}

/// D(u,v) = [Tu,Tv] - T(rho(Tu)v - rho(Tv)u) on basis pairs. T is an
/// O-operator iff D vanishes.
inline AltMap oop_defect(const LieAlgebra& L, const Representation& R, const LinearOperator& T)
{
    R.check_shape(L);
    check_operator_shape(L, R, T);
    const int dv = static_cast<int>(R.space_dim);
    AltMap D(2, dv, static_cast<int>(L.dim()));
    for (int u = 0; u < dv; ++u)
        for (int v = u + 1; v < dv; ++v) {
            Vec tu = T.apply_basis(u);
            Vec tv = T.apply_basis(v);
            Vec inner = R.act_basis(tu, v) - R.act_basis(tv, u);
            D.set({u, v}, L.bracket(tu, tv) - T.apply(inner));
        }
    return D;
}

inline bool is_oop(const LieAlgebra& L, const Representation& R, const LinearOperator& T)
{
    return oop_defect(L, R, T).is_zero();
}

/// [Px,Py] = P([Px,y] + [x,Py]), i.e. an O-operator for the adjoint representation.
inline bool is_rota_baxter(const LieAlgebra& L, const LinearOperator& P)
{
    if (P.matrix.rows() != L.dim() || P.matrix.cols() != L.dim())
        throw Error("Rota-Baxter operator must be a square matrix on g");
    return oop_defect(L, adjoint(L), P).is_zero();
}

struct SearchOptions {
    std::uint64_t cap = 5'000'000;
    unsigned threads = 1;
};

/// Every T: V -> g with entries drawn from `grid` that is an O-operator for R.
/// Results are in lexicographic order of the candidate index, independent of
/// the thread count.
inline std::vector<LinearOperator> search_oop(const LieAlgebra& L, const Representation& R,
                                              const std::vector<Rational>& grid, SearchOptions opts = {})
{
    if (grid.empty())
        throw Error("search: empty grid");
    const std::size_t rows = L.dim();
    const std::size_t cols = R.space_dim;
    const std::size_t entries = rows * cols;
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < entries; ++e) {
        if (total > opts.cap / grid.size())
            throw Error("search: " + std::to_string(grid.size()) + "^" + std::to_string(entries) +
                        " candidates exceed the cap of " + std::to_string(opts.cap));
        total *= grid.size();
    }
    auto candidate = [&](std::uint64_t index) {
        LinearOperator T{Matrix(rows, cols), Space::V, Space::G};
        for (std::size_t e = entries; e-- > 0;) {
            T.matrix(e / cols, e % cols) = grid[index % grid.size()];
            index /= grid.size();
        }
        return T;
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(total)));
    std::vector<std::vector<std::pair<std::uint64_t, LinearOperator>>> found(workers);
    auto work = [&](unsigned w) {
        for (std::uint64_t idx = w; idx < total; idx += workers) {
            LinearOperator T = candidate(idx);
            if (is_oop(L, R, T))
                found[w].emplace_back(idx, std::move(T));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    std::vector<std::pair<std::uint64_t, LinearOperator>> merged;
    for (auto& part : found)
        for (auto& item : part)
            merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LinearOperator> out;
    out.reserve(merged.size());
    for (auto& item : merged)
        out.push_back(std::move(item.second));
    return out;
}

/// Rota-Baxter operators (weight 0) on L with entries from `grid`.
inline std::vector<LinearOperator> search_rbo(const LieAlgebra& L, const std::vector<Rational>& grid,
                                              SearchOptions opts = {})
{
    auto ops = search_oop(L, adjoint(L), grid, opts);
    for (auto& op : ops)
        op.domain = Space::G;
    return ops;
}

/// The 1-ary AltMap carried by T.
inline AltMap to_alt(const LinearOperator& T)
{
    AltMap f(1, static_cast<int>(T.matrix.cols()), static_cast<int>(T.matrix.rows()));
    for (int j = 0; j < static_cast<int>(T.matrix.cols()); ++j)
        f.set({j}, T.matrix.column(j));
    return f;
}

inline LinearOperator to_operator(const AltMap& f)
{
    if (f.arity() != 1)
        throw Error("expected a 1-ary map");
    LinearOperator T{Matrix(f.dim_g(), f.dim_v()), Space::V, Space::G};
    for (int j = 0; j < f.dim_v(); ++j) {
        Vec col = f.get({j});
        for (int i = 0; i < f.dim_g(); ++i)
            T.matrix(i, j) = col[i];
    }
    return T;
}

} // namespace rota
