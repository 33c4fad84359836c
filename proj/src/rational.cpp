#include "bfx/rational.hpp"

#include <stdexcept>

namespace bfx {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

Rational pow(const Rational& x, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
    return Rational(n, d);
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace bfx
