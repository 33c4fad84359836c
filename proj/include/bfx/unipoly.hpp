#pragma once

#include <string>
#include <vector>

#include "bfx/rational.hpp"

namespace bfx {

// Variable tag carried by a polynomial. Arithmetic ignores it (results take
// the left operand's label); comparison helpers and the CLI refuse to mix
// labels, since the same quantity appears as a rho-, p- or q-polynomial in
// different derivations.
enum class Var { Rho, P, Q };

const char* var_name(Var v);
Var var_from_name(const std::string& s);

// Univariate polynomial with exact rational coefficients, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector and
// degree() == -1.
class UniPoly {
  public:
    UniPoly() : var_(Var::Rho) {}
    explicit UniPoly(Var v) : var_(v) {}
    UniPoly(std::vector<Rational> coeffs, Var v);

    static UniPoly zero(Var v) { return UniPoly(v); }
    static UniPoly constant(const Rational& c, Var v);
    // c1 * t + c0
    static UniPoly linear(const Rational& c1, const Rational& c0, Var v);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Var var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t k) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    UniPoly derivative() const;

    // P(a*t + b), exactly expanded; the result carries new_var.
    UniPoly substitute_affine(const Rational& a, const Rational& b, Var new_var) const;

    UniPoly with_var(Var v) const { UniPoly r = *this; r.var_ = v; return r; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& c) const;

    // Structural equality: same label and same coefficients.
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    // Coefficient equality regardless of label.
    bool same_coeffs(const UniPoly& b) const { return coeffs_ == b.coeffs_; }

    std::string str() const;

  private:
    void trim();

    std::vector<Rational> coeffs_;
    Var var_;
};

// Sum_k entries[k] * t^k * (1-t)^(n-k) with n = entries.size()-1, expanded
// exactly into the monomial basis.
UniPoly binomial_basis_poly(const std::vector<Rational>& entries, Var v);

enum class IntervalSign {
    StrictlyPositive,
    StrictlyNegative,
    HasZero,
    IdenticallyZero,
};

const char* interval_sign_name(IntervalSign s);

// Exact classification of the sign of `poly` on the open interval (lo, hi),
// by Sturm root counting on the square-free part plus one interior
// evaluation. Roots at the endpoints themselves do not count.
IntervalSign sturm_sign_on_interval(const UniPoly& poly, const Rational& lo, const Rational& hi);

// Number of distinct real roots of `poly` in the open interval (lo, hi).
int sturm_root_count(const UniPoly& poly, const Rational& lo, const Rational& hi);

}  // namespace bfx
