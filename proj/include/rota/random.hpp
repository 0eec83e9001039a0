// Seeded random instances for property checks and randomized suites.
#pragma once

#include "rota/alt_map.hpp"
#include "rota/homotopy.hpp"
#include "rota/lie.hpp"
#include "rota/prelie.hpp"

#include <cstdint>
#include <random>

namespace rota {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Small rational p/q with |p| <= 3, 1 <= q <= 3; zero with probability `zero_rate`.
    Rational rational(double zero_rate = 0.3)
    {
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < zero_rate)
            return 0;
        int p = std::uniform_int_distribution<int>(-3, 3)(rng_);
        int q = std::uniform_int_distribution<int>(1, 3)(rng_);
        Rational r(p, q);
        r.canonicalize();
        return r;
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    bool coin(double p = 0.5) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

    Vec vec(std::size_t n, double zero_rate = 0.3)
    {
        Vec v(n);
        for (auto& x : v)
            x = rational(zero_rate);
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, double zero_rate = 0.3)
    {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rational(zero_rate);
        return m;
    }

    AltMap alt_map(int arity, int dim_v, int dim_g, double zero_rate = 0.3)
    {
        AltMap f(arity, dim_v, dim_g);
        for (const auto& t : increasing_tuples(dim_v, arity))
            f.set(t, vec(dim_g, zero_rate));
        return f;
    }

    LinearOperator linear_operator(std::size_t rows, std::size_t cols, double zero_rate = 0.3)
    {
        return {matrix(rows, cols, zero_rate), Space::V, Space::G};
    }

    HookedMap hooked_map(int arity, int dim, double zero_rate = 0.3)
    {
        HookedMap a(arity, dim);
        for (const auto& t : increasing_tuples(dim, arity))
            for (int z = 0; z < dim; ++z)
                a.set(t, z, vec(dim, zero_rate));
        return a;
    }

    PreLieProduct prelie(std::size_t dim, double zero_rate = 0.5)
    {
        PreLieProduct P(catalog_names(dim));
        for (auto& row : P.mu)
            for (auto& v : row)
                v = vec(dim, zero_rate);
        return P;
    }

    /// Random degree-homogeneous map of degree `degree` with components of weight <= max_weight.
    GCochain gcochain(const SGLA& g, const GradedRepresentation& R, int degree, int max_weight,
                      double zero_rate = 0.3)
    {
        GCochain f = make_gcochain(degree, max_weight, g, R);
        for (int i = 0; i <= max_weight; ++i)
            for (const auto& w : canonical_words(R.module.degrees, i)) {
                Vec v = zero_vec(g.dim());
                const int d = word_degree(w, R.module.degrees) + degree;
                for (std::size_t a = 0; a < g.dim(); ++a)
                    if (g.degree(a) == d)
                        v[a] = rational(zero_rate);
                f.component(i).set(w, v);
            }
        return f;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    static std::vector<std::string> catalog_names(std::size_t n)
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back("v" + std::to_string(i + 1));
        return out;
    }

    std::mt19937_64 rng_;
};

} // namespace rota
