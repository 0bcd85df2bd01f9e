#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace superaff {

/// Exact rational scalar. Expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integer(const Rational& q);
/// Floor of q as a machine integer; q must fit in long long.
long long floor_to_ll(const Rational& q);

/// Renders q as "p/q" with q > 0 in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);
/// Inverse of to_string. Accepts "p", "-p", "p/q" (q != 0); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Dense vector of rationals in ambient coordinates.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n) {}
    Vector(std::initializer_list<Rational> xs) : v_(xs) {}
    explicit Vector(std::vector<Rational> xs) : v_(std::move(xs)) {}

    static Vector unit(std::size_t n, std::size_t i, const Rational& scale = 1);

    std::size_t size() const { return v_.size(); }
    const Rational& operator[](std::size_t i) const { return v_[i]; }
    Rational& operator[](std::size_t i) { return v_[i]; }
    const std::vector<Rational>& data() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& c);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator-(Vector a) { return a *= Rational(-1); }
    friend Vector operator*(const Rational& c, Vector a) { return a *= c; }
    friend Vector operator*(Vector a, const Rational& c) { return a *= c; }

    friend bool operator==(const Vector& a, const Vector& b) { return a.v_ == b.v_; }
    friend bool operator<(const Vector& a, const Vector& b) { return a.v_ < b.v_; }

private:
    std::vector<Rational> v_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

/// Dense row-major square-or-rectangular matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Vector operator*(const Vector& v) const;
    Matrix operator*(const Matrix& o) const;

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator<(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.a_ < b.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Solves A x = b exactly by Gauss-Jordan elimination. Returns nullopt when A is singular.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace superaff
