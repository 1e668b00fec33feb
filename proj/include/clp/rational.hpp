#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clp {

using Integer = mpz_class;

/* Arbitrary-precision rational, kept in lowest terms with positive
 * denominator.  Wraps GMP's mpq_class: construction canonicalizes once,
 * arithmetic preserves the canonical form. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rational(const Integer& n) : v_(n) {}

    Rational(long num, long den) : v_(num, den) { canonical_(); }
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canonical_(); }

    /* Accepts "a" or "a/b" with optional sign, base 10. */
    static Rational parse(const std::string& s);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /* Integer exponent; e < 0 requires a nonzero value. */
    Rational pow(long e) const;

    /* "a" for integers, "a/b" otherwise. */
    std::string str() const;

    /* Fixed-point decimal with `digits` places after the point, rounded
     * half away from zero.  Exact in the sense that the printed value
     * differs from *this by at most 10^-digits / 2. */
    std::string decimal(int digits) const;

    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    void canonical_();

    mpq_class v_;
};

/* q^e for integer q, e >= 0. */
Integer ipow(const Integer& base, unsigned long e);

}  // namespace clp
