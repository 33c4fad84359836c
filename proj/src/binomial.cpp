#include "bfx/binomial.hpp"

#include <stdexcept>
#include <vector>

namespace bfx {

namespace {

std::vector<Rational> pmf_row(int h, const Rational& q) {
    std::vector<Rational> row(static_cast<size_t>(h) + 1);
    const Rational one_minus = Rational(1) - q;
    for (int k = 0; k <= h; ++k) {
        row[static_cast<size_t>(k)] = Rational(binomial(static_cast<unsigned long>(h),
                                                        static_cast<unsigned long>(k))) *
                                      pow(q, static_cast<unsigned long>(k)) *
                                      pow(one_minus, static_cast<unsigned long>(h - k));
    }
    return row;
}

}  // namespace

Rational binom_pmf(int h, int k, const Rational& q) {
    if (h < 0 || k < 0 || k > h) throw std::invalid_argument("binom_pmf: need 0 <= k <= h");
    return Rational(binomial(static_cast<unsigned long>(h), static_cast<unsigned long>(k))) *
           pow(q, static_cast<unsigned long>(k)) *
           pow(Rational(1) - q, static_cast<unsigned long>(h - k));
}

Rational binom_equal_prob(int h, const Rational& q) {
    if (h < 0) throw std::invalid_argument("binom_equal_prob: need h >= 0");
    const auto row = pmf_row(h, q);
    Rational acc(0);
    for (const auto& p : row) acc += p * p;
    return acc;
}

Rational binom_comp_value(int h, const Rational& p) {
    if (h < 0) throw std::invalid_argument("binom_comp_value: need h >= 0");
    const auto row_u = pmf_row(h + 1, p);
    const auto row_v = pmf_row(h, p);
    Rational acc(0);
    for (int u = 0; u <= h + 1; ++u) {
        for (int v = 0; v <= h; ++v) {
            const Rational joint = row_u[static_cast<size_t>(u)] * row_v[static_cast<size_t>(v)];
            acc += (u > v) ? -joint : joint;
        }
    }
    return acc;
}

Rational binom_eq_lb_expr(int h, const Rational& q) {
    if (h < 0) throw std::invalid_argument("binom_eq_lb_expr: need h >= 0");
    const Rational one_minus = Rational(1) - q;
    const auto e = static_cast<unsigned long>(2 * h + 1);
    return (Rational(1) - Rational(2) * q) * binom_equal_prob(h, q) + pow(q, e) - pow(one_minus, e);
}

}  // namespace bfx
