// Small Lie algebras and representations used as test instances.
#pragma once

#include "rota/lie.hpp"

#include <string>
#include <vector>

namespace rota::catalog {

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "e")
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i + 1));
    return out;
}

inline Vec vec(std::initializer_list<int> xs)
{
    Vec v;
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(names(n)); }

/// [e1,e2] = e2
inline LieAlgebra affine2()
{
    LieAlgebra L(names(2));
    L.set_bracket(0, 1, vec({0, 1}));
    return L;
}

/// [e1,e2] = e3
inline LieAlgebra heisenberg()
{
    LieAlgebra L(names(3));
    L.set_bracket(0, 1, vec({0, 0, 1}));
    return L;
}

/// basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
inline LieAlgebra sl2()
{
    LieAlgebra L({"h", "e", "f"});
    L.set_bracket(0, 1, vec({0, 2, 0}));
    L.set_bracket(0, 2, vec({0, 0, -2}));
    L.set_bracket(1, 2, vec({1, 0, 0}));
    return L;
}

/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
inline LieAlgebra so3()
{
    LieAlgebra L(names(3));
    L.set_bracket(0, 1, vec({0, 0, 1}));
    L.set_bracket(1, 2, vec({1, 0, 0}));
    L.set_bracket(2, 0, vec({0, 1, 0}));
    return L;
}

/// [e1,e2] = e2, [e1,e3] = e3
inline LieAlgebra book3()
{
    LieAlgebra L(names(3));
    L.set_bracket(0, 1, vec({0, 1, 0}));
    L.set_bracket(0, 2, vec({0, 0, 1}));
    return L;
}

/// affine2 (+) affine2
inline LieAlgebra affine2_squared()
{
    LieAlgebra L(names(4));
    L.set_bracket(0, 1, vec({0, 1, 0, 0}));
    L.set_bracket(2, 3, vec({0, 0, 0, 1}));
    return L;
}

/// gl2 on the basis E11, E12, E21, E22
inline LieAlgebra gl2()
{
    LieAlgebra L({"E11", "E12", "E21", "E22"});
    L.set_bracket(0, 1, vec({0, 1, 0, 0}));
    L.set_bracket(0, 2, vec({0, 0, -1, 0}));
    L.set_bracket(1, 2, vec({1, 0, 0, -1}));
    L.set_bracket(1, 3, vec({0, 1, 0, 0}));
    L.set_bracket(2, 3, vec({0, 0, -1, 0}));
    return L;
}

inline Matrix mat(std::initializer_list<std::initializer_list<int>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

/// affine2 on K^2: e1 -> E11, e2 -> E12.
inline Representation affine2_standard() { return {2, {mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}})}}; }

/// affine2 on K: e1 -> 1, e2 -> 0.
inline Representation affine2_character() { return {1, {mat({{1}}), mat({{0}})}}; }

/// sl2 on K^2 in the basis (h, e, f).
inline Representation sl2_standard()
{
    return {2, {mat({{1, 0}, {0, -1}}), mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})}};
}

inline Representation zero_rep(const LieAlgebra& L, std::size_t space_dim)
{
    return {space_dim, std::vector<Matrix>(L.dim(), Matrix(space_dim, space_dim))};
}

struct NamedAlgebra {
    std::string name;
    LieAlgebra algebra;
};

/// Every bundled algebra, dims 1..4.
inline std::vector<NamedAlgebra> algebras()
{
    return {{"abelian1", abelian(1)},   {"abelian2", abelian(2)}, {"affine2", affine2()},
            {"heisenberg", heisenberg()}, {"sl2", sl2()},         {"so3", so3()},
            {"book3", book3()},         {"affine2^2", affine2_squared()}, {"gl2", gl2()}};
}

struct NamedPair {
    std::string name;
    LieAlgebra algebra;
    Representation rep;
};

/// (algebra, representation) pairs with dim <= 3.
inline std::vector<NamedPair> pairs()
{
    return {{"affine2/ad", affine2(), adjoint(affine2())},
            {"affine2/std", affine2(), affine2_standard()},
            {"heisenberg/ad", heisenberg(), adjoint(heisenberg())},
            {"sl2/std", sl2(), sl2_standard()},
            {"sl2/ad", sl2(), adjoint(sl2())},
            {"book3/ad", book3(), adjoint(book3())},
            {"affine2/char", affine2(), affine2_character()}};
}

} // namespace rota::catalog
