// Z-graded vector spaces, symmetric graded Lie algebras (degree-1 bracket,
// graded symmetric, graded Leibniz), their differentials and representations.
//
// Conventions:
//  - a matrix sending degree p to degree q is homogeneous of degree q - p;
//  - gl(V) carries the graded commutator [A,B] = AB - (-1)^{|A||B|} BA, and
//    its desuspension the bracket {s^-1 A, s^-1 B} = (-1)^{|A|} s^-1 [A,B];
//  - a representation rho has degree 1 and s^-1 o rho must preserve brackets:
//      rho([x,y]) = (-1)^{x+1} (rho(x)rho(y) - (-1)^{(x+1)(y+1)} rho(y)rho(x));
//  - an ordinary Lie algebra and its modules sit in degree -1.
#pragma once

#include "rota/combinatorics.hpp"
#include "rota/deformation.hpp"
#include "rota/lie.hpp"
#include "rota/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rota {

struct GradedVectorSpace {
    std::vector<std::string> names;
    std::vector<int> degrees;

    std::size_t dim() const { return names.size(); }

    friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;
};

/// sV (shift = +1) or s^-1 V (shift = -1): same basis, degrees moved by shift.
inline GradedVectorSpace suspend(const GradedVectorSpace& V, int shift)
{
    if (shift != 1 && shift != -1)
        throw Error("suspend: shift must be +1 or -1");
    GradedVectorSpace out = V;
    for (auto& d : out.degrees)
        d += shift;
    return out;
}

/// Degree shared by the nonzero coordinates of v, or nullopt for zero or mixed vectors.
inline std::optional<int> homogeneous_degree(const Vec& v, const GradedVectorSpace& V)
{
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (deg && *deg != V.degrees[i])
            return std::nullopt;
        deg = V.degrees[i];
    }
    return deg;
}

/// First entry (row, col) of M violating degree-`d` homogeneity from `src` to `dst`.
inline std::optional<std::pair<int, int>> degree_violation(const Matrix& M, int d, const GradedVectorSpace& src,
                                                           const GradedVectorSpace& dst)
{
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (M(r, c) != 0 && dst.degrees[r] - src.degrees[c] != d)
                return std::make_pair(int(r), int(c));
    return std::nullopt;
}

/// Graded commutator AB - (-1)^{ab} BA in gl(V).
inline Matrix graded_commutator(const Matrix& A, int a, const Matrix& B, int b)
{
    return A * B - Rational(minus_one_pow(a * b)) * (B * A);
}

/// Symmetric graded Lie algebra: [e_i, e_j] = sum_k b[i][j][k] e_k.
struct SGLA {
    GradedVectorSpace space;
    std::vector<std::vector<Vec>> b;

    SGLA() = default;
    explicit SGLA(GradedVectorSpace s) : space(std::move(s))
    {
        const std::size_t n = space.dim();
        b.assign(n, std::vector<Vec>(n, zero_vec(n)));
    }

    std::size_t dim() const { return space.dim(); }
    int degree(std::size_t i) const { return space.degrees[i]; }

    /// Sets [e_i,e_j] and, through graded symmetry, [e_j,e_i].
    void set_bracket(std::size_t i, std::size_t j, const Vec& value)
    {
        b.at(i).at(j) = value;
        b.at(j).at(i) = Rational(minus_one_pow(degree(i) * degree(j))) * value;
    }

    Vec bracket(const Vec& x, const Vec& y) const
    {
        Vec out = zero_vec(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < dim(); ++j)
                if (y[j] != 0)
                    axpy(out, x[i] * y[j], b[i][j]);
        }
        return out;
    }

    void check_shape() const
    {
        if (space.degrees.size() != space.names.size())
            throw Error("graded space: one degree per basis element required");
        if (b.size() != dim())
            throw Error("sgLa constants: wrong number of rows");
        for (const auto& row : b) {
            if (row.size() != dim())
                throw Error("sgLa constants: ragged second index");
            for (const auto& v : row)
                if (v.size() != dim())
                    throw Error("sgLa constants: ragged third index");
        }
    }
};

/// [x,[y,z]] - (-1)^{x+1}[[x,y],z] - (-1)^{(x+1)(y+1)}[y,[x,z]] on basis elements.
inline Vec leibniz_residual(const SGLA& g, std::size_t i, std::size_t j, std::size_t k)
{
    const int x = g.degree(i);
    const int y = g.degree(j);
    const std::size_t n = g.dim();
    Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
    return g.bracket(ei, g.b[j][k]) - Rational(minus_one_pow(x + 1)) * g.bracket(g.b[i][j], ek) -
           Rational(minus_one_pow((x + 1) * (y + 1))) * g.bracket(ej, g.b[i][k]);
}

struct SglaCheck {
    Report degree;
    Report symmetry;
    Report leibniz;
    /// False when degree homogeneity failed and the identities were not evaluated.
    bool identities_checked = true;
    bool ok() const { return degree.pass && symmetry.pass && leibniz.pass && identities_checked; }
};

inline SglaCheck check_sgla(const SGLA& g)
{
    g.check_shape();
    const std::size_t n = g.dim();
    SglaCheck out{Report::ok("degree-1 bracket", 2), Report::ok("graded symmetry", 2), Report::ok("graded Leibniz", 3)};
    for (std::size_t i = 0; i < n && out.degree.pass; ++i)
        for (std::size_t j = 0; j < n && out.degree.pass; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.b[i][j][k] != 0 && g.degree(k) != g.degree(i) + g.degree(j) + 1) {
                    out.degree = Report::fail("degree-1 bracket", 2, {{int(i), int(j), int(k)}, {g.b[i][j][k]},
                        "deg(e_k) != deg(e_i) + deg(e_j) + 1"});
                    break;
                }
    if (!out.degree.pass) {
        out.identities_checked = false;
        return out;
    }
    for (std::size_t i = 0; i < n && out.symmetry.pass; ++i)
        for (std::size_t j = 0; j < n && out.symmetry.pass; ++j) {
            Vec r = g.b[i][j] - Rational(minus_one_pow(g.degree(i) * g.degree(j))) * g.b[j][i];
            if (!is_zero(r))
                out.symmetry = Report::fail("graded symmetry", 2, {{int(i), int(j)}, r,
                    "[x,y] - (-1)^{xy}[y,x] != 0"});
        }
    for (std::size_t i = 0; i < n && out.leibniz.pass; ++i)
        for (std::size_t j = 0; j < n && out.leibniz.pass; ++j)
            for (std::size_t k = 0; k < n && out.leibniz.pass; ++k) {
                Vec r = leibniz_residual(g, i, j, k);
                if (!is_zero(r))
                    out.leibniz = Report::fail("graded Leibniz", 3, {{int(i), int(j), int(k)}, r,
                        "[x,[y,z]] - (-1)^{x+1}[[x,y],z] - (-1)^{(x+1)(y+1)}[y,[x,z]] != 0"});
            }
    return out;
}

/// The Lie algebra placed in degree -1, where graded symmetry is antisymmetry
/// and the Leibniz rule is the Jacobi identity.
inline SGLA from_lie(const LieAlgebra& L)
{
    SGLA g(GradedVectorSpace{L.basis, std::vector<int>(L.dim(), -1)});
    g.b = L.c;
    return g;
}

/// d of degree 1 with d^2 = 0 and d[x,y] = -[dx,y] - (-1)^x [x,dy].
struct SdglaCheck {
    Report square_zero;
    Report compatibility;
    bool ok() const { return square_zero.pass && compatibility.pass; }
};

inline SdglaCheck check_sdgla(const SGLA& g, const Matrix& d)
{
    g.check_shape();
    const std::size_t n = g.dim();
    if (d.rows() != n || d.cols() != n)
        throw Error("check_sdgla: differential must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (auto bad = degree_violation(d, 1, g.space, g.space))
        throw Error("check_sdgla: differential is not homogeneous of degree 1 (entry " +
                    std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1) + ")");
    SdglaCheck out{Report::ok("d^2 = 0", 1), Report::ok("d compatible with bracket", 2)};
    Matrix dd = d * d;
    for (std::size_t c = 0; c < n && out.square_zero.pass; ++c) {
        Vec col = dd.column(c);
        if (!is_zero(col))
            out.square_zero = Report::fail("d^2 = 0", 1, {{int(c)}, col, "d(d(e_i)) != 0"});
    }
    for (std::size_t i = 0; i < n && out.compatibility.pass; ++i)
        for (std::size_t j = 0; j < n && out.compatibility.pass; ++j) {
            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
            Vec r = d * g.b[i][j] + g.bracket(d.column(i), ej) +
                    Rational(minus_one_pow(g.degree(i))) * g.bracket(ei, d.column(j));
            if (!is_zero(r))
                out.compatibility = Report::fail("d compatible with bracket", 2, {{int(i), int(j)}, r,
                    "d[x,y] + [dx,y] + (-1)^x [x,dy] != 0"});
        }
    return out;
}

/// rho(e_i) is a degree deg(e_i)+1 matrix on the graded module.
struct GradedRepresentation {
    GradedVectorSpace module;
    std::vector<Matrix> action;

    std::size_t dim() const { return module.dim(); }
    int degree(std::size_t i) const { return module.degrees[i]; }

    Matrix rho(const Vec& x) const { return combine(action, x, dim(), dim()); }

    Vec act_basis(const Vec& x, std::size_t j) const
    {
        Vec out = zero_vec(dim());
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                for (std::size_t r = 0; r < dim(); ++r)
                    if (action[i](r, j) != 0)
                        out[r] += x[i] * action[i](r, j);
        return out;
    }

    Vec act(const Vec& x, const Vec& v) const
    {
        Vec out = zero_vec(dim());
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                axpy(out, v[j], act_basis(x, j));
        return out;
    }

    void check_shape(const SGLA& g) const
    {
        if (action.size() != g.dim())
            throw Error("graded representation: expected one matrix per sgLa basis element");
        for (const auto& m : action)
            if (m.rows() != dim() || m.cols() != dim())
                throw Error("graded representation: matrix shape differs from module dimension");
    }
};

struct GradedRepCheck {
    Report degree;
    Report homomorphism;
    bool ok() const { return degree.pass && homomorphism.pass; }
};

inline GradedRepCheck check_graded_rep(const SGLA& g, const GradedRepresentation& R)
{
    g.check_shape();
    R.check_shape(g);
    GradedRepCheck out{Report::ok("degree-1 action", 1), Report::ok("s^-1 rho homomorphism", 2)};
    for (std::size_t i = 0; i < g.dim() && out.degree.pass; ++i)
        if (auto bad = degree_violation(R.action[i], g.degree(i) + 1, R.module, R.module))
            out.degree = Report::fail("degree-1 action", 1, {{int(i), bad->first, bad->second},
                {R.action[i](bad->first, bad->second)}, "rho(e_i) entry outside degree deg(e_i)+1"});
    if (!out.degree.pass)
        return out;
    for (std::size_t i = 0; i < g.dim() && out.homomorphism.pass; ++i)
        for (std::size_t j = 0; j < g.dim() && out.homomorphism.pass; ++j) {
            const int a = g.degree(i) + 1;
            const int b = g.degree(j) + 1;
            Matrix rhs = Rational(minus_one_pow(a)) * graded_commutator(R.action[i], a, R.action[j], b);
            Matrix r = R.rho(g.b[i][j]) - rhs;
            if (!r.is_zero())
                out.homomorphism = Report::fail("s^-1 rho homomorphism", 2, {{int(i), int(j)}, r.data(),
                    "rho([x,y]) - (-1)^{x+1}[rho x, rho y] != 0"});
        }
    return out;
}

/// An ordinary representation placed in degree -1.
inline GradedRepresentation embed_representation(const Representation& R, const std::vector<std::string>& names = {})
{
    GradedRepresentation out;
    for (std::size_t i = 0; i < R.space_dim; ++i)
        out.module.names.push_back(i < names.size() ? names[i] : "v" + std::to_string(i + 1));
    out.module.degrees.assign(R.space_dim, -1);
    out.action = R.action;
    return out;
}

/// ad(x)(y) = [x,y]_g, of degree deg(x) + 1.
inline GradedRepresentation graded_adjoint(const SGLA& g)
{
    const std::size_t n = g.dim();
    GradedRepresentation R{g.space, std::vector<Matrix>(n, Matrix(n, n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                R.action[i](k, j) = g.b[i][j][k];
    return R;
}

/// s^-1 gl(W) with its tautological representation on W: the basis element
/// s^-1 E_ab (E_ab sends w_b to w_a) has degree deg(w_a) - deg(w_b) - 1.
inline std::pair<SGLA, GradedRepresentation> desuspended_gl(const GradedVectorSpace& W)
{
    const std::size_t n = W.dim();
    GradedVectorSpace space;
    std::vector<Matrix> units;
    std::vector<int> gl_degree;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            space.names.push_back("E_" + W.names[a] + "_" + W.names[b]);
            gl_degree.push_back(W.degrees[a] - W.degrees[b]);
            space.degrees.push_back(gl_degree.back() - 1);
            Matrix e(n, n);
            e(a, b) = 1;
            units.push_back(std::move(e));
        }
    SGLA g(space);
    for (std::size_t p = 0; p < n * n; ++p)
        for (std::size_t q = 0; q < n * n; ++q) {
            Matrix c = Rational(minus_one_pow(gl_degree[p])) *
                       graded_commutator(units[p], gl_degree[p], units[q], gl_degree[q]);
            Vec v = zero_vec(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    v[a * n + b] = c(a, b);
            g.b[p][q] = v;
        }
    return {g, GradedRepresentation{W, units}};
}

} // namespace rota
