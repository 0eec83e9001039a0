// Homotopy O-operators on symmetric graded Lie algebras.
//
// C*(V,g) = sum_n Hom^n(S(V), g) carries the degree-1 bracket [[f,g]] below,
// which makes sC*(V,g) a graded Lie algebra. For f of degree m and h of degree
// n, on homogeneous v_1..v_p (all sums over unshuffles sigma, eps = Koszul sign):
//
//   [[f,h]]_p = c * ( - sum_{l} sum_{S(l,1,p-l-1)} eps f_{p-l}(rho(h_l(v..)) v, v..)
//                     + (-1)^{(m+1)(n+1)} sum_{k} sum_{S(k,1,p-k-1)} eps h_{p-k}(rho(f_k(v..)) v, v..)
//                     - sum_{k} sum_{S(k,p-k)} (-1)^{n(v_s1+..+v_sk)+m+1} eps [f_k(v..), h_{p-k}(v..)] )
//
// with c = kCourantSign, the same normalization as the ungraded bracket.
//
// Hom(S(V), gl(V)) carries the graded Matsushima-Nijenhuis bracket
//   [a,b]^c = a o b - (-1)^{|a||b|} b o a,
//   (a o b)_p(v..) = sum_{l} sum_{S(l,1,p-l-1)} eps a_{p-l}(b_l(v..) v, v..)
//                  + sum_{k} sum_{S(k,p-k)} (-1)^{|b|(v_s1+..+v_sk)} eps a_k(v..) b_{p-k}(v..),
// where b_l(v..) v is a matrix applied to a vector and a_k(v..) b_{p-k}(v..)
// is a matrix product. Psi(f) = rho o f maps [[.,.]] onto [.,.]^c.
#pragma once

#include "rota/combinatorics.hpp"
#include "rota/deformation.hpp"
#include "rota/graded.hpp"
#include "rota/lie.hpp"
#include "rota/prelie.hpp"
#include "rota/report.hpp"
#include "rota/sym_map.hpp"

#include <array>
#include <random>

namespace rota {

/// Maps S(V) -> g.
using GCochain = SymCochain<Vec>;
/// Maps S(V) -> gl(V).
using GlCochain = SymCochain<Matrix>;
/// A degree-0 GCochain; T_0 is the element Omega of g^0.
using HomotopyOperator = GCochain;

inline constexpr int kDefaultPMax = 4;
/// Largest weight any homotopy computation will enumerate.
inline constexpr int kWeightCap = 8;

inline void check_weight_bound(int p_max, const char* who)
{
    if (p_max < 0 || p_max > kWeightCap)
        throw Error(std::string(who) + ": order " + std::to_string(p_max) + " outside 0.." +
                    std::to_string(kWeightCap));
}

inline GCochain make_gcochain(int degree, int truncation, const SGLA& g, const GradedRepresentation& R)
{
    return GCochain(degree, truncation, R.module.degrees, zero_vec(g.dim()));
}

inline GlCochain make_glcochain(int degree, int truncation, const GradedVectorSpace& V)
{
    return GlCochain(degree, truncation, V.degrees, Matrix(V.dim(), V.dim()));
}

inline std::vector<int> letter_degrees(const Word& w, std::span<const int> gen_degrees)
{
    std::vector<int> out;
    out.reserve(w.size());
    for (int i : w)
        out.push_back(gen_degrees[i]);
    return out;
}

inline void check_cochain(const GCochain& f, const SGLA& g, const GradedRepresentation& R, const char* who)
{
    if (f.gen_degrees() != R.module.degrees)
        throw Error(std::string(who) + ": map arguments do not match the module");
    if (f.zero().size() != g.dim())
        throw Error(std::string(who) + ": map values do not match the sgLa");
}

/// First stored value that is not homogeneous of degree deg(word) + map degree.
inline std::optional<Witness> degree_violation(const GCochain& f, const SGLA& g)
{
    for (int i = 0; i <= f.truncation(); ++i)
        for (const auto& [w, v] : f.component(i).values()) {
            auto d = homogeneous_degree(v, g.space);
            if (!d || *d != word_degree(w, f.gen_degrees()) + f.degree())
                return Witness{w, v, "value not homogeneous of degree deg(word) + " + std::to_string(f.degree())};
        }
    return std::nullopt;
}

inline std::optional<Witness> degree_violation(const GlCochain& f, const GradedVectorSpace& V)
{
    for (int i = 0; i <= f.truncation(); ++i)
        for (const auto& [w, M] : f.component(i).values())
            if (rota::degree_violation(M, word_degree(w, f.gen_degrees()) + f.degree(), V, V))
                return Witness{w, M.data(),
                               "matrix not homogeneous of degree deg(word) + " + std::to_string(f.degree())};
    return std::nullopt;
}

/// Validates a homotopy O-operator candidate: shape and degree-0 homogeneity.
inline void check_homotopy_operator(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R)
{
    check_cochain(T, g, R, "homotopy operator");
    if (T.degree() != 0)
        throw Error("homotopy operator: map degree must be 0");
    if (auto w = degree_violation(T, g))
        throw Error("homotopy operator: component of weight " + std::to_string(w->args.size()) +
                    " is not degree-0 homogeneous");
}

namespace detail {

struct Unshuffle {
    Permutation perm;
    int eps;
};

inline std::vector<Unshuffle> signed_unshuffles(std::initializer_list<int> shape, const std::vector<int>& degs)
{
    std::vector<Unshuffle> out;
    for (auto& s : unshuffles(shape)) {
        int e = koszul_sign(s, degs);
        out.push_back({std::move(s), e});
    }
    return out;
}

inline int degree_sum(const std::vector<int>& degs, const Permutation& s, int from, int to)
{
    int d = 0;
    for (int i = from; i < to; ++i)
        d += degs[s[i]];
    return d;
}

/// sum_{S(l,1,p-l-1)} eps outer_{p-l}(rho(inner_l(v..)) v, v..) over all l, scaled by coeff.
inline void insertion_sum(const GCochain& outer, const GCochain& inner, const GradedRepresentation& R,
                          const Word& w, const std::vector<int>& degs, const Rational& coeff, Vec& acc)
{
    const int p = static_cast<int>(w.size());
    for (int l = 0; l < p; ++l) {
        const auto& in = inner.component(l);
        const auto& out = outer.component(p - l);
        if (in.is_zero() || out.is_zero())
            continue;
        for (const auto& [s, eps] : signed_unshuffles({l, 1, p - l - 1}, degs)) {
            Vec x = in.eval(pick(w, s, 0, l));
            if (is_zero(x))
                continue;
            Vec y = out.eval_first(R.act_basis(x, w[s[l]]), pick(w, s, l + 1, p));
            axpy(acc, coeff * eps, y);
        }
    }
}

} // namespace detail

/// [[f,h]] on every weight p <= p_max.
inline GCochain graded_bracket(const GCochain& f, const GCochain& h, const SGLA& g, const GradedRepresentation& R,
                               int p_max = kDefaultPMax)
{
    check_weight_bound(p_max, "graded_bracket");
    check_cochain(f, g, R, "graded_bracket");
    check_cochain(h, g, R, "graded_bracket");
    const int m = f.degree();
    const int n = h.degree();
    const Rational c = kCourantSign;
    GCochain out = make_gcochain(m + n + 1, p_max, g, R);
    for (int p = 0; p <= p_max; ++p)
        for (const auto& w : canonical_words(R.module.degrees, p)) {
            const auto degs = letter_degrees(w, R.module.degrees);
            Vec acc = zero_vec(g.dim());
            detail::insertion_sum(f, h, R, w, degs, -c, acc);
            detail::insertion_sum(h, f, R, w, degs, c * minus_one_pow((m + 1) * (n + 1)), acc);
            for (int k = 0; k <= p; ++k) {
                const auto& fk = f.component(k);
                const auto& hl = h.component(p - k);
                if (fk.is_zero() || hl.is_zero())
                    continue;
                for (const auto& [s, eps] : detail::signed_unshuffles({k, p - k}, degs)) {
                    Vec x = fk.eval(pick(w, s, 0, k));
                    if (is_zero(x))
                        continue;
                    Vec y = hl.eval(pick(w, s, k, p));
                    if (is_zero(y))
                        continue;
                    int sg = minus_one_pow(n * detail::degree_sum(degs, s, 0, k) + m + 1) * eps;
                    axpy(acc, -c * sg, g.bracket(x, y));
                }
            }
            out.component(p).set(w, acc);
        }
    return out;
}

/// Per-weight defect of the generalized Rota-Baxter identities, for p <= p_max:
///   (1/2) sum_{S(k,p-k)} eps [T_k(v..), T_{p-k}(v..)] - sum_{S(l,1,p-l-1)} eps T_{p-l}(rho(T_l(v..)) v, v..).
/// At p = 0 this is (1/2)[Omega,Omega]; in the ungraded case it is the O-operator defect.
inline GCochain homotopy_oop_residual(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                                      int p_max = kDefaultPMax)
{
    check_weight_bound(p_max, "homotopy_oop_residual");
    check_homotopy_operator(T, g, R);
    GCochain out = make_gcochain(1, p_max, g, R);
    for (int p = 0; p <= p_max; ++p)
        for (const auto& w : canonical_words(R.module.degrees, p)) {
            const auto degs = letter_degrees(w, R.module.degrees);
            Vec acc = zero_vec(g.dim());
            detail::insertion_sum(T, T, R, w, degs, Rational(-1), acc);
            for (int k = 0; k <= p; ++k) {
                const auto& a = T.component(k);
                const auto& b = T.component(p - k);
                if (a.is_zero() || b.is_zero())
                    continue;
                for (const auto& [s, eps] : detail::signed_unshuffles({k, p - k}, degs)) {
                    Vec x = a.eval(pick(w, s, 0, k));
                    Vec y = b.eval(pick(w, s, k, p));
                    if (is_zero(x) || is_zero(y))
                        continue;
                    axpy(acc, Rational(eps, 2), g.bracket(x, y));
                }
            }
            out.component(p).set(w, acc);
        }
    return out;
}

/// The first nonzero value of `f` up to weight p_max, as a failing report.
inline Report first_nonzero(const GCochain& f, const std::string& check, int p_max, const std::string& detail)
{
    for (int p = 0; p <= std::min(p_max, f.truncation()); ++p)
        if (!f.component(p).is_zero()) {
            const auto& [w, v] = *f.component(p).values().begin();
            return Report::fail(check, p_max, {w, v, detail + " at weight " + std::to_string(p)});
        }
    return Report::ok(check, p_max);
}

inline Report check_homotopy_oop(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                                 int p_max = kDefaultPMax)
{
    return first_nonzero(homotopy_oop_residual(T, g, R, p_max), "homotopy O-operator", p_max,
                         "generalized Rota-Baxter identity fails");
}

inline bool is_homotopy_oop(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                            int p_max = kDefaultPMax)
{
    return homotopy_oop_residual(T, g, R, p_max).is_zero_to(p_max);
}

/// Homotopy Rota-Baxter operator: homotopy O-operator for the adjoint representation.
inline Report check_homotopy_rbo(const HomotopyOperator& Rop, const SGLA& g, int p_max = kDefaultPMax)
{
    if (!check_sgla(g).ok())
        throw Error("check_homotopy_rbo: not a symmetric graded Lie algebra");
    Report r = check_homotopy_oop(Rop, g, graded_adjoint(g), p_max);
    r.check = "homotopy Rota-Baxter operator";
    return r;
}

inline bool is_homotopy_rbo(const HomotopyOperator& Rop, const SGLA& g, int p_max = kDefaultPMax)
{
    return check_homotopy_rbo(Rop, g, p_max).pass;
}

/// (1/2)[[T,T]] up to weight p_max.
inline GCochain mc_residual_homotopy(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                                     int p_max = kDefaultPMax)
{
    check_homotopy_operator(T, g, R);
    GCochain b = graded_bracket(T, T, g, R, p_max);
    b *= Rational(1, 2);
    return b;
}

inline bool mc_check_homotopy(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                              int p_max = kDefaultPMax)
{
    return mc_residual_homotopy(T, g, R, p_max).is_zero_to(p_max);
}

/// The identities for p = 0, 1, 2 written out by hand, next to the general formula.
struct LowIdentities {
    std::array<GradedSymMap<Vec>, 3> expanded;
    std::array<GradedSymMap<Vec>, 3> general;

    bool agree() const { return expanded == general; }
};

///  e0 = (1/2)[Omega,Omega]
///  e1(v1) = [Omega,T1 v1] - T1(rho(Omega) v1)
///  e2(v1,v2) = [T1 v1,T1 v2] + [Omega,T2(v1,v2)] - T1(rho(T1 v1) v2 + (-1)^{v1 v2} rho(T1 v2) v1)
///              - T2(rho(Omega) v1, v2) - (-1)^{v1 v2} T2(rho(Omega) v2, v1)
inline LowIdentities expand_low_identities(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R)
{
    check_homotopy_operator(T, g, R);
    if (T.truncation() < 2)
        throw Error("expand_low_identities: truncation must be at least 2");
    const auto& degs = R.module.degrees;
    const Vec omega = T.component(0).get({});
    const auto& T1 = T.component(1);
    const auto& T2 = T.component(2);
    const Matrix rho_omega = R.rho(omega);

    GCochain general = homotopy_oop_residual(T, g, R, 2);
    LowIdentities out;
    for (int p = 0; p < 3; ++p) {
        out.general[p] = general.component(p);
        out.expanded[p] = GradedSymMap<Vec>(p, degs, zero_vec(g.dim()));
    }
    out.expanded[0].set({}, Rational(1, 2) * g.bracket(omega, omega));
    for (const auto& w : canonical_words(degs, 1)) {
        Vec e = g.bracket(omega, T1.eval(w)) - T1.eval_first(rho_omega * unit_vec(R.dim(), w[0]), {});
        out.expanded[1].set(w, e);
    }
    for (const auto& w : canonical_words(degs, 2)) {
        const int v1 = w[0];
        const int v2 = w[1];
        const Rational s = minus_one_pow(degs[v1] * degs[v2]);
        const Vec t1 = T1.eval({v1});
        const Vec t2 = T1.eval({v2});
        Vec e = g.bracket(t1, t2) + g.bracket(omega, T2.eval({v1, v2}));
        e = e - T1.eval_first(R.act_basis(t1, v2) + s * R.act_basis(t2, v1), {});
        e = e - T2.eval_first(rho_omega * unit_vec(R.dim(), v1), {v2});
        e = e - s * T2.eval_first(rho_omega * unit_vec(R.dim(), v2), {v1});
        out.expanded[2].set(w, e);
    }
    return out;
}

/// Psi(f)_k = rho o f_k, of degree deg(f) + 1.
inline GlCochain psi(const GCochain& f, const SGLA& g, const GradedRepresentation& R)
{
    check_cochain(f, g, R, "psi");
    R.check_shape(g);
    GlCochain out = make_glcochain(f.degree() + 1, f.truncation(), R.module);
    for (int i = 0; i <= f.truncation(); ++i)
        for (const auto& [w, x] : f.component(i).values())
            out.component(i).set(w, R.rho(x));
    return out;
}

/// (a o b) up to weight p_max; see the header comment for the formula.
inline GlCochain gl_circ(const GlCochain& a, const GlCochain& b, const GradedVectorSpace& V, int p_max = kDefaultPMax)
{
    check_weight_bound(p_max, "gl_circ");
    if (a.gen_degrees() != V.degrees || b.gen_degrees() != V.degrees)
        throw Error("gl_circ: maps live on different spaces");
    GlCochain out = make_glcochain(a.degree() + b.degree(), p_max, V);
    const int n = static_cast<int>(V.dim());
    for (int p = 0; p <= p_max; ++p)
        for (const auto& w : canonical_words(V.degrees, p)) {
            const auto degs = letter_degrees(w, V.degrees);
            Matrix acc(n, n);
            for (int l = 0; l < p; ++l) {
                const auto& in = b.component(l);
                const auto& outer = a.component(p - l);
                if (in.is_zero() || outer.is_zero())
                    continue;
                for (const auto& [s, eps] : detail::signed_unshuffles({l, 1, p - l - 1}, degs)) {
                    Matrix x = in.eval(pick(w, s, 0, l));
                    if (x.is_zero())
                        continue;
                    axpy(acc, Rational(eps), outer.eval_first(x.column(w[s[l]]), pick(w, s, l + 1, p)));
                }
            }
            for (int k = 0; k <= p; ++k) {
                const auto& ak = a.component(k);
                const auto& bl = b.component(p - k);
                if (ak.is_zero() || bl.is_zero())
                    continue;
                for (const auto& [s, eps] : detail::signed_unshuffles({k, p - k}, degs)) {
                    Matrix x = ak.eval(pick(w, s, 0, k));
                    if (x.is_zero())
                        continue;
                    Matrix y = bl.eval(pick(w, s, k, p));
                    int sg = minus_one_pow(b.degree() * detail::degree_sum(degs, s, 0, k)) * eps;
                    axpy(acc, Rational(sg), x * y);
                }
            }
            out.component(p).set(w, acc);
        }
    return out;
}

/// [a,b]^c = a o b - (-1)^{|a||b|} b o a.
inline GlCochain gl_bracket(const GlCochain& a, const GlCochain& b, const GradedVectorSpace& V,
                            int p_max = kDefaultPMax)
{
    GlCochain out = gl_circ(a, b, V, p_max);
    GlCochain ba = gl_circ(b, a, V, p_max);
    ba *= Rational(minus_one_pow(a.degree() * b.degree()));
    out -= ba;
    return out;
}

/// Psi([[f,h]]) == [Psi f, Psi h]^c up to weight p_max.
inline bool check_psi_homomorphism(const GCochain& f, const GCochain& h, const SGLA& g, const GradedRepresentation& R,
                                   int p_max = kDefaultPMax)
{
    GlCochain lhs = psi(graded_bracket(f, h, g, R, p_max), g, R);
    GlCochain rhs = gl_bracket(psi(f, g, R), psi(h, g, R), R.module, p_max);
    return lhs.equal_to(rhs, p_max);
}

/// Operations m_k(v_1..v_k) = L_{k-1}(v_1..v_{k-1}) v_k for k = 1..truncation+1,
/// with L of degree 1.
struct PreLieInfinity {
    GradedVectorSpace space;
    GlCochain L;

    int truncation() const { return L.truncation() + 1; }

    /// m_k(args..., last) with basis arguments.
    Vec m(const Word& args, int last) const { return L.component(static_cast<int>(args.size())).eval(args).column(last); }

    /// m_k(w, args..., last) with a vector w in the first slot.
    Vec m_first(const Vec& w, const Word& rest, int last) const
    {
        return L.component(static_cast<int>(rest.size()) + 1).eval_first(w, rest).column(last);
    }

    /// m_k(args..., w) with a vector w in the last slot.
    Vec m_last(const Word& args, const Vec& w) const { return L.component(static_cast<int>(args.size())).eval(args) * w; }
};

struct PreLieInfinityCheck {
    Report degree;
    Report symmetry;
    Report coherence;
    bool ok() const { return degree.pass && symmetry.pass && coherence.pass; }
};

/// Clause (ii) residual on (v_1..v_{n-1} = w, v_n = last):
///   sum_{i+j=n+1, i>=1, j>=2} sum_{S(i-1,1,j-2)} eps m_j(m_i(v_s1..v_si), v_s(i+1)..v_s(n-1), v_n)
/// + sum_{i+j=n+1, i,j>=1} sum_{S(j-1,i-1)} (-1)^{v_s1+..+v_s(j-1)} eps m_j(v_s1..v_s(j-1), m_i(v_sj..v_s(n-1), v_n)).
inline Vec prelie_infinity_residual(const PreLieInfinity& P, const Word& w, int last)
{
    const int n = static_cast<int>(w.size()) + 1;
    const auto degs = letter_degrees(w, P.space.degrees);
    Vec acc = zero_vec(P.space.dim());
    for (int i = 1; i <= n - 1; ++i) {
        const int j = n + 1 - i;
        for (const auto& [s, eps] : detail::signed_unshuffles({i - 1, 1, j - 2}, degs)) {
            Vec x = P.m(pick(w, s, 0, i - 1), w[s[i - 1]]);
            if (is_zero(x))
                continue;
            axpy(acc, Rational(eps), P.m_first(x, pick(w, s, i, n - 1), last));
        }
    }
    for (int i = 1; i <= n; ++i) {
        const int j = n + 1 - i;
        for (const auto& [s, eps] : detail::signed_unshuffles({j - 1, i - 1}, degs)) {
            Vec x = P.m(pick(w, s, j - 1, n - 1), last);
            if (is_zero(x))
                continue;
            int sg = minus_one_pow(detail::degree_sum(degs, s, 0, j - 1)) * eps;
            axpy(acc, Rational(sg), P.m_last(pick(w, s, 0, j - 1), x));
        }
    }
    return acc;
}

/// Degree-1 homogeneity, clause (i) on random reorderings of every stored word,
/// and clause (ii) for 1 <= n <= n_max on all canonical words.
inline PreLieInfinityCheck check_prelie_infinity(const PreLieInfinity& P, int n_max = kDefaultPMax,
                                                 std::uint64_t seed = 0, int permutations_per_word = 4)
{
    if (n_max < 1 || n_max > kWeightCap + 1)
        throw Error("check_prelie_infinity: n_max " + std::to_string(n_max) + " outside 1.." +
                    std::to_string(kWeightCap + 1));
    if (P.L.gen_degrees() != P.space.degrees)
        throw Error("check_prelie_infinity: operations do not match the space");
    if (P.L.degree() != 1)
        throw Error("check_prelie_infinity: operations must have degree 1");
    PreLieInfinityCheck out{Report::ok("degree-1 operations", n_max), Report::ok("graded symmetry", n_max),
                            Report::ok("pre-Lie-infinity identity", n_max)};
    if (auto w = degree_violation(P.L, P.space)) {
        out.degree = Report::fail("degree-1 operations", n_max, *w);
        return out;
    }

    std::mt19937_64 rng(seed);
    for (int k = 0; k < n_max && out.symmetry.pass; ++k)
        for (const auto& [w, M] : P.L.component(k).values()) {
            const auto degs = letter_degrees(w, P.space.degrees);
            Permutation s = identity_permutation(w.size());
            for (int t = 0; t < permutations_per_word; ++t) {
                std::shuffle(s.begin(), s.end(), rng);
                Matrix lhs = P.L.component(k).eval(pick(w, s, 0, w.size()));
                Matrix rhs = Rational(koszul_sign(s, degs)) * M;
                if (!(lhs == rhs)) {
                    out.symmetry = Report::fail("graded symmetry", n_max, {pick(w, s, 0, w.size()),
                        (lhs - rhs).data(), "m_n(v_s1..v_s(n-1), v_n) != eps m_n(v_1..v_(n-1), v_n)"});
                    break;
                }
            }
            if (!out.symmetry.pass)
                break;
        }

    const int dim = static_cast<int>(P.space.dim());
    for (int n = 1; n <= n_max && out.coherence.pass; ++n)
        for (const auto& w : canonical_words(P.space.degrees, n - 1)) {
            for (int z = 0; z < dim; ++z) {
                Vec r = prelie_infinity_residual(P, w, z);
                if (!is_zero(r)) {
                    Word args = w;
                    args.push_back(z);
                    out.coherence = Report::fail("pre-Lie-infinity identity", n_max, {args, r,
                        "clause (ii) fails for n = " + std::to_string(n)});
                    break;
                }
            }
            if (!out.coherence.pass)
                break;
        }
    return out;
}

/// m_k(v_1..v_k) = rho(T_{k-1}(v_1..v_{k-1})) v_k for k <= N+1. Requires T to
/// be a homotopy O-operator to order p_max unless `unchecked`.
inline PreLieInfinity induce_prelie_infinity(const HomotopyOperator& T, const SGLA& g, const GradedRepresentation& R,
                                             int p_max = kDefaultPMax, bool unchecked = false)
{
    check_homotopy_operator(T, g, R);
    if (!unchecked && !is_homotopy_oop(T, g, R, p_max))
        throw Error("induce_prelie_infinity: T is not a homotopy O-operator to order " + std::to_string(p_max));
    return {R.module, psi(T, g, R)};
}

/// A 1-ary operator placed as T_1 of a homotopy operator over the degree -1 embedding.
inline HomotopyOperator embed_operator(const LinearOperator& T, const SGLA& g, const GradedRepresentation& R)
{
    HomotopyOperator out = make_gcochain(0, 1, g, R);
    for (std::size_t i = 0; i < T.matrix.cols(); ++i)
        out.component(1).set({int(i)}, T.apply_basis(i));
    return out;
}

/// A k-ary alternating map as the weight-k component of a degree k-1 cochain.
inline GCochain embed_alt(const AltMap& f, const SGLA& g, const GradedRepresentation& R)
{
    GCochain out = make_gcochain(f.arity() - 1, f.arity(), g, R);
    for (const auto& [t, v] : f.values())
        out.component(f.arity()).set(t, v);
    return out;
}

/// The weight-k component of an embedded cochain, read back as an alternating map.
inline AltMap to_alt(const GCochain& f, int arity)
{
    AltMap out(arity, static_cast<int>(f.gen_degrees().size()), static_cast<int>(f.zero().size()));
    for (const auto& [w, v] : f.component(arity).values())
        out.set(w, v);
    return out;
}

/// A hooked map of arity k as the weight-k component of a degree-k gl(V)-valued cochain.
inline GlCochain embed_hooked(const HookedMap& a, const GradedVectorSpace& V)
{
    GlCochain out = make_glcochain(a.arity(), a.arity(), V);
    for (const auto& t : increasing_tuples(a.dim(), a.arity())) {
        Matrix M(a.dim(), a.dim());
        for (int z = 0; z < a.dim(); ++z) {
            Vec col = a.get(t, z);
            for (int r = 0; r < a.dim(); ++r)
                M(r, z) = col[r];
        }
        out.component(a.arity()).set(t, M);
    }
    return out;
}

/// An ungraded pre-Lie product as the single operation m_2 on V in degree -1.
inline PreLieInfinity embed_prelie(const PreLieProduct& P)
{
    GradedVectorSpace V{P.basis, std::vector<int>(P.dim(), -1)};
    return {V, embed_hooked(to_hooked(P), V)};
}

/// m_2 of a pre-Lie-infinity structure as an ungraded product.
inline PreLieProduct to_prelie(const PreLieInfinity& P)
{
    const int n = static_cast<int>(P.space.dim());
    PreLieProduct out(P.space.names);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.mu[i][j] = P.m({i}, j);
    return out;
}

/// One free coefficient of a degree-0 cochain: (weight, word, g-basis index).
struct Slot {
    int weight;
    Word word;
    int target;
};

/// Coefficient positions allowed by degree-0 homogeneity up to weight N.
inline std::vector<Slot> homotopy_slots(const SGLA& g, const GradedRepresentation& R, int N)
{
    std::vector<Slot> out;
    for (int i = 0; i <= N; ++i)
        for (const auto& w : canonical_words(R.module.degrees, i))
            for (int a = 0; a < static_cast<int>(g.dim()); ++a)
                if (g.degree(a) == word_degree(w, R.module.degrees))
                    out.push_back({i, w, a});
    return out;
}

/// Every degree-0 T with components T_0..T_N and coefficients in `grid` that
/// satisfies the identities up to p_max, in lexicographic order of coefficients.
inline std::vector<HomotopyOperator> search_homotopy_oop(const SGLA& g, const GradedRepresentation& R,
                                                         const std::vector<Rational>& grid, int N,
                                                         int p_max = kDefaultPMax, std::uint64_t cap = 5'000'000)
{
    check_weight_bound(p_max, "search_homotopy_oop");
    if (grid.empty())
        throw Error("search_homotopy_oop: empty grid");
    const auto slots = homotopy_slots(g, R, N);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (total > cap / grid.size())
            throw Error("search_homotopy_oop: " + std::to_string(slots.size()) + " coefficients over a grid of " +
                        std::to_string(grid.size()) + " exceed the cap of " + std::to_string(cap));
        total *= grid.size();
    }
    std::vector<HomotopyOperator> out;
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
        HomotopyOperator T = make_gcochain(0, N, g, R);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (grid[idx[s]] == 0)
                continue;
            const Slot& sl = slots[s];
            Vec v = T.component(sl.weight).get(sl.word);
            v[sl.target] = grid[idx[s]];
            T.component(sl.weight).set(sl.word, v);
        }
        if (is_homotopy_oop(T, g, R, p_max))
            out.push_back(std::move(T));
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            if (++idx[s] < grid.size())
                break;
            idx[s] = 0;
            if (s == 0)
                return out;
        }
        if (slots.empty())
            return out;
    }
}

} // namespace rota
