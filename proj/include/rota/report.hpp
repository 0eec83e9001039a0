// Verification reports shared by every check.
#pragma once

#include "rota/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rota {

/// Where a check failed: the basis indices (0-based) of the violating
/// arguments and the nonzero residual found there, flattened to coordinates.
struct Witness {
    std::vector<int> args;
    std::vector<Rational> residual;
    std::string detail;
};

struct Report {
    std::string check;
    bool pass = true;
    /// Arity bound or truncation order the check was run to.
    int order = 0;
    std::optional<Witness> witness;

    explicit operator bool() const { return pass; }

    static Report ok(std::string check, int order) { return Report{std::move(check), true, order, std::nullopt}; }

    static Report fail(std::string check, int order, Witness w)
    {
        return Report{std::move(check), false, order, std::move(w)};
    }
};

inline std::vector<Rational> flatten(const Vec& v) { return v; }
inline std::vector<Rational> flatten(const Matrix& m) { return m.data(); }

} // namespace rota
