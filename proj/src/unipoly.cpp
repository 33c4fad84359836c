#include "bfx/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace bfx {

const char* var_name(Var v) {
    switch (v) {
        case Var::Rho: return "rho";
        case Var::P: return "p";
        case Var::Q: return "q";
    }
    return "?";
}

Var var_from_name(const std::string& s) {
    if (s == "rho") return Var::Rho;
    if (s == "p") return Var::P;
    if (s == "q") return Var::Q;
    throw std::invalid_argument("unknown variable label '" + s + "'");
}

UniPoly::UniPoly(std::vector<Rational> coeffs, Var v) : coeffs_(std::move(coeffs)), var_(v) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c, Var v) {
    return UniPoly({c}, v);
}

UniPoly UniPoly::linear(const Rational& c1, const Rational& c0, Var v) {
    return UniPoly({c0, c1}, v);
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::leading() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

double UniPoly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i].to_double();
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::substitute_affine(const Rational& a, const Rational& b, Var new_var) const {
    // Horner in polynomial space: ((c_n (at+b) + c_{n-1})(at+b) + ...).
    UniPoly lin = UniPoly::linear(a, b, new_var);
    UniPoly acc(new_var);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * lin + UniPoly::constant(coeffs_[i], new_var);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return UniPoly(std::move(c), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c), a.var_);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(c), a.var_);
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
    return UniPoly(std::move(r), var_);
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

std::string UniPoly::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].str();
        if (i >= 1) os << "*" << var_name(var_) << "^" << i;
        first = false;
    }
    return os.str();
}

UniPoly binomial_basis_poly(const std::vector<Rational>& entries, Var v) {
    if (entries.empty()) return UniPoly(v);
    const size_t n = entries.size() - 1;
    std::vector<Rational> c(n + 1, Rational(0));
    // t^k (1-t)^(n-k) = sum_j C(n-k, j) (-1)^j t^(k+j)
    for (size_t k = 0; k <= n; ++k) {
        if (entries[k].is_zero()) continue;
        for (size_t j = 0; j + k <= n; ++j) {
            Rational term = entries[k] * Rational(binomial(n - k, j));
            if (j % 2 == 1) term = -term;
            c[k + j] += term;
        }
    }
    return UniPoly(std::move(c), v);
}

const char* interval_sign_name(IntervalSign s) {
    switch (s) {
        case IntervalSign::StrictlyPositive: return "strictly_positive";
        case IntervalSign::StrictlyNegative: return "strictly_negative";
        case IntervalSign::HasZero: return "has_zero";
        case IntervalSign::IdenticallyZero: return "identically_zero";
    }
    return "?";
}

namespace {

// Scale by a positive rational so coefficients become coprime integers.
// Multiplying by a positive constant never changes signs, so this is safe
// everywhere in the Sturm machinery and keeps coefficient growth down.
UniPoly make_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class scaled_num = c.num() * (den_lcm / c.den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled_num.get_mpz_t());
        content = g;
    }
    if (content == 0) content = 1;
    return p.scaled(Rational(den_lcm, content));
}

// Remainder of a by b (b nonzero).
UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const Rational factor = r.leading() / b.leading();
        const size_t shift = static_cast<size_t>(r.degree() - db);
        std::vector<Rational> sub(shift + static_cast<size_t>(db) + 1, Rational(0));
        for (size_t i = 0; i <= static_cast<size_t>(db); ++i) {
            sub[i + shift] = b.coeff(i) * factor;
        }
        r = r - UniPoly(std::move(sub), r.var());
    }
    return r;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = make_primitive(a);
    b = make_primitive(b);
    while (!b.is_zero()) {
        UniPoly r = make_primitive(poly_rem(a, b));
        a = b;
        b = r;
    }
    return a;
}

// Exact division, used only when the divisor is known to divide.
UniPoly poly_div_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const int db = b.degree();
    std::vector<Rational> q(static_cast<size_t>(std::max(0, a.degree() - db)) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= db) {
        const Rational factor = r.leading() / b.leading();
        const size_t shift = static_cast<size_t>(r.degree() - db);
        q[shift] = factor;
        std::vector<Rational> sub(shift + static_cast<size_t>(db) + 1, Rational(0));
        for (size_t i = 0; i <= static_cast<size_t>(db); ++i) {
            sub[i + shift] = b.coeff(i) * factor;
        }
        r = r - UniPoly(std::move(sub), r.var());
    }
    if (!r.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return UniPoly(std::move(q), a.var());
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(make_primitive(p));
    UniPoly d = make_primitive(p.derivative());
    if (!d.is_zero()) {
        chain.push_back(d);
        while (true) {
            UniPoly r = poly_rem(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            chain.push_back(make_primitive(-r));
        }
    }
    return chain;
}

int sign_changes_at(const std::vector<UniPoly>& chain, const Rational& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_root_count(const UniPoly& poly, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("sturm: need lo < hi");
    if (poly.is_zero()) throw std::invalid_argument("sturm: zero polynomial has no root count");
    // Square-free part: distinct roots only.
    UniPoly p = poly;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() >= 1) p = poly_div_exact(p, g);
    // Strip roots sitting exactly at the endpoints; the interval is open.
    const UniPoly t_lo = UniPoly::linear(Rational(1), -lo, poly.var());
    const UniPoly t_hi = UniPoly::linear(Rational(1), -hi, poly.var());
    if (p.eval(lo).is_zero()) p = poly_div_exact(p, t_lo);
    if (p.eval(hi).is_zero()) p = poly_div_exact(p, t_hi);
    if (p.degree() <= 0) return 0;
    const auto chain = sturm_chain(p);
    return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
}

IntervalSign sturm_sign_on_interval(const UniPoly& poly, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("sturm: need lo < hi");
    if (poly.is_zero()) return IntervalSign::IdenticallyZero;
    if (sturm_root_count(poly, lo, hi) > 0) return IntervalSign::HasZero;
    const Rational mid = (lo + hi) / Rational(2);
    const int s = poly.eval(mid).sign();
    // No interior root, so the midpoint sign is the sign everywhere inside.
    return s > 0 ? IntervalSign::StrictlyPositive : IntervalSign::StrictlyNegative;
}

}  // namespace bfx
