#include "superaff/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace superaff {

Integer numerator(const Rational& q)
{
    return Integer(boost::multiprecision::numerator(q));
}

Integer denominator(const Rational& q)
{
    return Integer(boost::multiprecision::denominator(q));
}

bool is_integer(const Rational& q)
{
    return denominator(q) == 1;
}

long long floor_to_ll(const Rational& q)
{
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f.convert_to<long long>();
}

std::string to_string(const Rational& q)
{
    std::string s = numerator(q).str();
    if (!is_integer(q)) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

Vector Vector::unit(std::size_t n, std::size_t i, const Rational& scale)
{
    Vector v(n);
    v[i] = scale;
    return v;
}

bool Vector::is_zero() const
{
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o)
{
    if (o.size() != size()) throw std::domain_error("vector dimension mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    if (o.size() != size()) throw std::domain_error("vector dimension mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& c)
{
    for (auto& x : v_) x *= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v[i]);
    }
    return os << ')';
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (v.size() != cols_) throw std::domain_error("matrix/vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_) throw std::domain_error("matrix dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (o(k, c) != 0) out(r, c) += a * o(k, c);
        }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace {

// Reduces [a | rhs] in place; returns false if a is singular.
bool gauss_jordan(Matrix& a, Matrix& rhs)
{
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(pivot, c), rhs(col, c));
        }
        const Rational inv = 1 / a(col, col);
        for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
        for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
            for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(col, c);
        }
    }
    return true;
}

}  // namespace

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::domain_error("solve: dimension mismatch");
    Matrix work = a;
    Matrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (!gauss_jordan(work, rhs)) return std::nullopt;
    Vector x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) throw std::domain_error("inverse: matrix is not square");
    Matrix work = a;
    Matrix rhs = Matrix::identity(a.rows());
    if (!gauss_jordan(work, rhs)) return std::nullopt;
    return rhs;
}

}  // namespace superaff
