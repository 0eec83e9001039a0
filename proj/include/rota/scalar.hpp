// Exact scalars, dense vectors and matrices over Q.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rota {

/// Error raised for malformed input or a violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational. GMP keeps every arithmetic result in
/// lowest terms with a positive denominator, so equality is structural.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Rejects zero denominators.
inline Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error("malformed rational: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n.front() == '+')
        n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw Error("zero denominator in rational: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str(10);
}

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

/// acc += c * x
inline void axpy(Vec& acc, const Rational& c, const Vec& x)
{
    if (c == 0)
        return;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (x[i] != 0)
            acc[i] += c * x[i];
}

inline Vec& operator+=(Vec& a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}
inline Vec& operator-=(Vec& a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}
inline Vec& operator*=(Vec& a, const Rational& c)
{
    for (auto& x : a)
        x *= c;
    return a;
}

inline Vec operator+(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

inline Vec operator*(const Rational& c, Vec a)
{
    for (auto& x : a)
        x *= c;
    return a;
}

/// Dense row-major matrix. Rows index the codomain basis.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const
    {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    const std::vector<Rational>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix& operator+=(const Matrix& o)
    {
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& c)
    {
        for (auto& x : data_)
            x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Vec operator*(const Matrix& a, const Vec& v)
    {
        if (a.cols_ != v.size())
            throw Error("matrix-vector shape mismatch");
        Vec out = zero_vec(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0 && v[k] != 0)
                    out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline bool is_zero(const Matrix& m) { return m.is_zero(); }

/// acc += c * x
inline void axpy(Matrix& acc, const Rational& c, const Matrix& x)
{
    if (c == 0)
        return;
    for (std::size_t r = 0; r < acc.rows(); ++r)
        for (std::size_t k = 0; k < acc.cols(); ++k)
            if (x(r, k) != 0)
                acc(r, k) += c * x(r, k);
}

/// Applies a linear combination of matrices: sum_i coeffs[i] * mats[i].
inline Matrix combine(const std::vector<Matrix>& mats, const Vec& coeffs, std::size_t rows, std::size_t cols)
{
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        axpy(out, coeffs[i], mats[i]);
    return out;
}

} // namespace rota
