#ifndef DALG_SCALARS_HPP
#define DALG_SCALARS_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dalg
{

// Arbitrary-precision integer. Used for binomials, factorials and rational parts.
using Integer = mpz_class;

// Exact fraction, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const Integer &v) : value_(v) {}
    Rational(const Integer &num, const Integer &den);
    explicit Rational(const mpq_class &v) : value_(v) { value_.canonicalize(); }

    // Accepts "p", "-p" and "p/q". Throws std::invalid_argument on malformed
    // input or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    const mpq_class &raw() const { return value_; }

    // "p/q", or "p" when q = 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.value_ < b.value_; }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

// Binomial coefficient; 0 when k > n.
Integer binom(std::size_t n, std::size_t k);

Integer factorial(std::size_t n);

Integer pow2(std::size_t n);

} // namespace dalg

#endif
