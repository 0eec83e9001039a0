#include "rota/catalog.hpp"
#include "rota/graded.hpp"
#include "rota/random.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rota;
using catalog::mat;
using catalog::vec;

namespace {

GradedVectorSpace space(std::vector<int> degrees)
{
    GradedVectorSpace V;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        V.names.push_back("x" + std::to_string(i + 1));
    V.degrees = std::move(degrees);
    return V;
}

Vec jacobi_cyclic(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t n = L.dim();
    Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
    return L.bracket(L.bracket(x, y), z) + L.bracket(L.bracket(y, z), x) + L.bracket(L.bracket(z, x), y);
}

} // namespace

TEST_CASE("suspension shifts degrees and round-trips")
{
    GradedVectorSpace V = space({0, 0});
    CHECK(suspend(V, 1).degrees == std::vector<int>{1, 1});
    CHECK(suspend(V, 1).names == V.names);
    GradedVectorSpace W = space({-1, 0, 3});
    CHECK(suspend(suspend(W, 1), -1) == W);
    CHECK(suspend(suspend(W, -1), 1) == W);
    CHECK(suspend(GradedVectorSpace{}, 1) == GradedVectorSpace{});
    CHECK_THROWS_AS(suspend(W, 2), Error);
}

TEST_CASE("homogeneity helpers")
{
    GradedVectorSpace V = space({-1, 0, 0});
    CHECK(homogeneous_degree(vec({0, 1, 2}), V) == 0);
    CHECK(homogeneous_degree(vec({1, 0, 0}), V) == -1);
    CHECK_FALSE(homogeneous_degree(vec({1, 1, 0}), V));
    CHECK_FALSE(homogeneous_degree(vec({0, 0, 0}), V));
    CHECK(degree_violation(mat({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}), 1, V, V) == std::nullopt);
    CHECK(degree_violation(mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), 1, V, V) == std::make_pair(0, 1));
}

TEST_CASE("check_sgla examples")
{
    CHECK(check_sgla(SGLA(space({-1, 0, 1}))).ok());
    CHECK(check_sgla(from_lie(catalog::affine2())).ok());
    CHECK(check_sgla(from_lie(catalog::heisenberg())).ok());
    SGLA z = from_lie(catalog::abelian(2));
    CHECK(z.space.degrees == std::vector<int>{-1, -1});
    CHECK(check_sgla(z).ok());
    SGLA a = from_lie(catalog::affine2());
    CHECK(a.b == catalog::affine2().c);

    // [x1,x1] = x2 with x1 of degree 0 needs deg x2 = 1.
    SGLA bad(space({0, 0}));
    bad.set_bracket(0, 0, vec({0, 1}));
    auto r = check_sgla(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.degree.pass);
    CHECK_FALSE(r.identities_checked);
    REQUIRE(r.degree.witness);
    CHECK(r.degree.witness->args == std::vector<int>{0, 0, 1});

    SGLA asym(space({0, 0, 1}));
    asym.b[0][1] = vec({0, 0, 1});
    asym.b[1][0] = vec({0, 0, -1});
    auto s = check_sgla(asym);
    CHECK(s.identities_checked);
    CHECK_FALSE(s.symmetry.pass);
}

TEST_CASE("a symmetric graded Lie algebra with mixed degrees")
{
    // Degrees x(0), y(0), z(1): [x,y] = z, graded symmetric, every double bracket vanishes.
    SGLA g(space({0, 0, 1}));
    g.set_bracket(0, 1, vec({0, 0, 1}));
    CHECK(g.b[1][0] == vec({0, 0, 1}));
    CHECK(check_sgla(g).ok());

    for (const auto& W : {space({0, 1}), space({-1, 0, 1}), space({0, 0})}) {
        auto [gl, rep] = desuspended_gl(W);
        CHECK(check_sgla(gl).ok());
        CHECK(check_graded_rep(gl, rep).ok());
    }
}

TEST_CASE("from_lie is a faithful embedding")
{
    for (const auto& [name, L] : catalog::algebras()) {
        INFO(name);
        CHECK(check_sgla(from_lie(L)).ok());
    }
    Sampler s(41);
    int fails = 0;
    for (int t = 0; t < 400 && fails < 20; ++t) {
        auto algs = catalog::algebras();
        LieAlgebra L = algs[t % algs.size()].algebra;
        const std::size_t n = L.dim();
        std::size_t i = s.integer(0, int(n) - 1), j = s.integer(0, int(n) - 1), k = s.integer(0, int(n) - 1);
        if (t % 2 == 0)
            L.c[i][j][k] += s.rational(0.0);
        else if (i != j)
            L.set_bracket(i, j, L.c[i][j] + s.vec(n, 0.5));
        bool lie = check_lie(L).ok();
        CHECK(check_sgla(from_lie(L)).ok() == lie);
        fails += !lie;
    }
    CHECK(fails == 20);
}

TEST_CASE("Leibniz residual is minus the Jacobi residual on degree -1 data")
{
    Sampler s(42);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 2;
        LieAlgebra L(catalog::names(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                L.set_bracket(i, j, s.vec(n, 0.5));
        SGLA g = from_lie(L);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    CHECK(leibniz_residual(g, i, j, k) == Rational(-1) * jacobi_cyclic(L, i, j, k));
    }
}

TEST_CASE("check_sdgla examples")
{
    SGLA g = from_lie(catalog::affine2());
    CHECK(check_sdgla(g, Matrix(2, 2)).ok());

    // x(-1) -> y(0), zero bracket.
    SGLA two(space({-1, 0}));
    CHECK(check_sdgla(two, mat({{0, 0}, {1, 0}})).ok());

    // x(-1) -> y(0) -> z(1) composes to a nonzero d^2.
    SGLA three(space({-1, 0, 1}));
    auto r = check_sdgla(three, mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK_FALSE(r.square_zero.pass);
    REQUIRE(r.square_zero.witness);
    CHECK(r.square_zero.witness->args == std::vector<int>{0});

    // a(-1), b(-1), c(0); [a,b] = a and d(a) = c: d[a,b] = c but -[da,b] - (-1)^a [a,db] = 0.
    SGLA h(space({-1, -1, 0}));
    h.set_bracket(0, 1, vec({1, 0, 0}));
    REQUIRE(check_sgla(h).ok());
    auto c = check_sdgla(h, mat({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
    CHECK(c.square_zero.pass);
    CHECK_FALSE(c.compatibility.pass);

    CHECK_THROWS_AS(check_sdgla(two, mat({{1, 0}, {0, 0}})), Error);
    CHECK_THROWS_AS(check_sdgla(two, Matrix(3, 3)), Error);
}

TEST_CASE("check_graded_rep examples")
{
    for (const auto& [name, L] : catalog::algebras()) {
        INFO(name);
        SGLA g = from_lie(L);
        GradedRepresentation ad = graded_adjoint(g);
        CHECK(check_graded_rep(g, ad).ok());
        GradedRepresentation zero{space({-1, -1}), std::vector<Matrix>(L.dim(), Matrix(2, 2))};
        CHECK(check_graded_rep(g, zero).ok());
    }
    for (const auto& [name, L, R] : catalog::pairs()) {
        INFO(name);
        CHECK(check_graded_rep(from_lie(L), embed_representation(R)).ok() == check_representation(L, R).pass);
    }
    LieAlgebra L = catalog::affine2();
    Representation broken = catalog::affine2_standard();
    broken.action[1] = mat({{0, 0}, {1, 0}});
    REQUIRE_FALSE(check_representation(L, broken).pass);
    CHECK_FALSE(check_graded_rep(from_lie(L), embed_representation(broken)).ok());

    // Module with degrees (-1, 0): rho(e) of degree 0 may not map v1 to v2.
    GradedRepresentation off{space({-1, 0}), {mat({{0, 0}, {1, 0}}), Matrix(2, 2)}};
    auto r = check_graded_rep(from_lie(L), off);
    CHECK_FALSE(r.degree.pass);
}

TEST_CASE("embedded representations match their ungraded verdicts on random actions")
{
    Sampler s(43);
    LieAlgebra L = catalog::affine2();
    int agree_pass = 0;
    for (int t = 0; t < 40; ++t) {
        Representation R{2, {s.matrix(2, 2, 0.7), s.matrix(2, 2, 0.7)}};
        bool ungraded = check_representation(L, R).pass;
        CHECK(check_graded_rep(from_lie(L), embed_representation(R)).ok() == ungraded);
        agree_pass += ungraded;
    }
    CHECK(agree_pass > 0);
}
