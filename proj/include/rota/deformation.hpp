// The graded Lie algebra C*(V,g) = sum_k Hom(wedge^k V, g) controlling
// deformations of O-operators: its bracket, Maurer-Cartan residual, the
// twisted differential d_T and the deformation criterion.
//
// Grading: a k-ary map has degree k in this algebra (1-ary maps are the
// degree-1 Maurer-Cartan candidates). The bracket has degree 0:
//   [[f,g]] = -(-1)^{|f||g|} [[g,f]].
#pragma once

#include "rota/alt_map.hpp"
#include "rota/combinatorics.hpp"
#include "rota/lie.hpp"

namespace rota {

/// Overall sign applied to the three-sum bracket formula. With -1 the map
/// f |-> (u_1..u_{k+1} |-> rho(f(u_1..u_k)) u_{k+1}) is a homomorphism onto the
/// Matsushima-Nijenhuis bracket, and [[T,T]] = -2 D_T for the O-operator
/// defect D_T. The zero sets (Maurer-Cartan elements) do not depend on it.
inline constexpr int kCourantSign = -1;

inline constexpr int kDefaultArityMax = 6;

inline int minus_one_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

/// The three sums over unshuffles, for f of arity n and g of arity m:
///  - sum_{S(m,1,n-1)} (-1)^s f(rho(g(u..))u, u..)
///  + (-1)^{mn} sum_{S(n,1,m-1)} (-1)^s g(rho(f(u..))u, u..)
///  - (-1)^{mn} sum_{S(n,m)} (-1)^s [f(u..), g(u..)]
/// scaled by kCourantSign.
inline AltMap courant_bracket(const AltMap& f, const AltMap& g, const LieAlgebra& L, const Representation& R,
                              int arity_max = kDefaultArityMax)
{
    if (f.dim_v() != g.dim_v() || f.dim_g() != g.dim_g())
        throw Error("courant_bracket: maps live on different spaces");
    if (f.dim_g() != static_cast<int>(L.dim()) || f.dim_v() != static_cast<int>(R.space_dim))
        throw Error("courant_bracket: maps do not match the algebra/representation");
    const int n = f.arity();
    const int m = g.arity();
    if (n + m > arity_max)
        throw Error("courant_bracket: output arity " + std::to_string(n + m) + " exceeds the cap " +
                    std::to_string(arity_max));
    const int dv = f.dim_v();
    const int dg = f.dim_g();
    const int smn = minus_one_pow(m * n);

    auto insert_sum = [&](const AltMap& outer, const AltMap& inner, const Tuple& u, Vec& acc, int coeff) {
        // sum over S(a,1,b-1) of (-1)^s outer(rho(inner(u..))u, u..), a = arity(inner), b = arity(outer)
        const int a = inner.arity();
        const int b = outer.arity();
        for (const auto& s : unshuffles({a, 1, b - 1})) {
            Vec x = eval_alt(inner, pick(u, s, 0, a));
            if (is_zero(x))
                continue;
            Vec w = R.act_basis(x, u[s[a]]);
            Vec y = eval_alt_first(outer, w, pick(u, s, a + 1, a + b));
            axpy(acc, Rational(coeff * sign(s)), y);
        }
    };

    AltMap out(n + m, dv, dg);
    for (const auto& u : increasing_tuples(dv, n + m)) {
        Vec acc = zero_vec(dg);
        insert_sum(f, g, u, acc, -1);
        insert_sum(g, f, u, acc, smn);
        for (const auto& s : unshuffles({n, m})) {
            Vec x = eval_alt(f, pick(u, s, 0, n));
            if (is_zero(x))
                continue;
            Vec y = eval_alt(g, pick(u, s, n, n + m));
            axpy(acc, Rational(-smn * sign(s)), L.bracket(x, y));
        }
        out.set(u, Rational(kCourantSign) * acc);
    }
    return out;
}

/// (1/2)[[T,T]]; vanishes exactly when T is an O-operator.
inline AltMap mc_residual(const AltMap& T, const LieAlgebra& L, const Representation& R)
{
    if (T.arity() != 1)
        throw Error("mc_residual: expected a 1-ary map, got arity " + std::to_string(T.arity()));
    return Rational(1, 2) * courant_bracket(T, T, L, R);
}

/// d_T(f) = [[T,f]]. Requires T to be an O-operator unless `unchecked`.
inline AltMap d_T(const AltMap& T, const AltMap& f, const LieAlgebra& L, const Representation& R,
                  bool unchecked = false, int arity_max = kDefaultArityMax)
{
    if (!unchecked && !mc_residual(T, L, R).is_zero())
        throw Error("d_T: T is not an O-operator (Maurer-Cartan residual is nonzero)");
    return courant_bracket(T, f, L, R, arity_max);
}

/// Whether T' solves d_T(T') + (1/2)[[T',T']] = 0, i.e. T + T' is again an O-operator.
inline bool deformation_check(const AltMap& T, const AltMap& Tp, const LieAlgebra& L, const Representation& R)
{
    if (T.arity() != 1 || Tp.arity() != 1)
        throw Error("deformation_check: both maps must be 1-ary");
    AltMap lhs = d_T(T, Tp, L, R) + Rational(1, 2) * courant_bracket(Tp, Tp, L, R);
    return lhs.is_zero();
}

} // namespace rota
