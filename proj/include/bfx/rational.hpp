#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bfx {

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator (mpq canonical form), so equality is structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "num/den" or a bare integer. Throws std::invalid_argument on
    // malformed input or a zero denominator.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // Serialized form is always "num/den", e.g. "3/4", "-1/2", "0/1".
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

// x^e for e >= 0.
Rational pow(const Rational& x, unsigned long e);

// C(n, k) as an exact integer, 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace bfx
