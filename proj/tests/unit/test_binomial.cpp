#include <doctest.h>

#include "bfx/binomial.hpp"
#include "bfx/rng.hpp"

using namespace bfx;

TEST_CASE("binom_pmf basics") {
    auto rng = stream_rng(3, 0);
    for (int it = 0; it < 20; ++it) {
        const Rational q(static_cast<long>(rng() % 1000), 1009);
        CHECK(binom_pmf(1, 0, q) == Rational(1) - q);
        CHECK(binom_pmf(1, 1, q) == q);
    }
    CHECK(binom_pmf(2, 1, Rational(1, 4)) == Rational(3, 8));
    CHECK_THROWS_AS(binom_pmf(2, 3, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(binom_pmf(2, -1, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("binom_pmf normalizes for h <= 30") {
    auto rng = stream_rng(3, 1);
    for (int h = 0; h <= 30; h += 3) {
        const Rational q(static_cast<long>(rng() % 997), 997);
        Rational total(0);
        for (int k = 0; k <= h; ++k) total += binom_pmf(h, k, q);
        CHECK(total == Rational(1));
    }
}

TEST_CASE("binom_equal_prob examples") {
    auto rng = stream_rng(3, 2);
    for (int it = 0; it < 10; ++it) {
        const Rational q(static_cast<long>(rng() % 100), 101);
        CHECK(binom_equal_prob(1, q) == q * q + (Rational(1) - q) * (Rational(1) - q));
    }
    // direct 3-term oracle: (81 + 36 + 1)/256
    CHECK(binom_equal_prob(2, Rational(1, 4)) ==
          Rational(81, 256) + Rational(36, 256) + Rational(1, 256));
    CHECK(binom_equal_prob(2, Rational(1, 4)) == Rational(59, 128));
}

TEST_CASE("binom_equal_prob is symmetric under q -> 1-q") {
    auto rng = stream_rng(3, 3);
    for (int h = 0; h <= 20; ++h) {
        const Rational q(static_cast<long>(rng() % 211), 211);
        CHECK(binom_equal_prob(h, q) == binom_equal_prob(h, Rational(1) - q));
    }
}

TEST_CASE("binom_comp_value examples") {
    auto rng = stream_rng(3, 4);
    for (int it = 0; it < 10; ++it) {
        const Rational p(static_cast<long>(rng() % 50), 53);
        CHECK(binom_comp_value(0, p) == Rational(1) - Rational(2) * p);
    }
    for (int h = 0; h <= 20; ++h) {
        CHECK(binom_comp_value(h, Rational(1, 2)) == Rational(0));
    }
    // oracle: exhaustive double sum over the 4x3 outcomes
    {
        const Rational p(1, 4);
        Rational acc(0);
        for (int u = 0; u <= 3; ++u) {
            for (int v = 0; v <= 2; ++v) {
                const Rational joint = binom_pmf(3, u, p) * binom_pmf(2, v, p);
                acc += u > v ? -joint : joint;
            }
        }
        CHECK(acc == Rational(59, 256));
        CHECK(binom_comp_value(2, Rational(1, 4)) == Rational(59, 256));
    }
}

TEST_CASE("comp value equals (1-2q) * equal prob  [first lemma identity]") {
    for (int h = 0; h <= 20; ++h) {
        for (int k = 1; k <= 20; ++k) {
            const Rational q(k, 21);
            CHECK(binom_comp_value(h, q) ==
                  (Rational(1) - Rational(2) * q) * binom_equal_prob(h, q));
        }
    }
}

TEST_CASE("binom_eq_lb_expr examples") {
    for (int h = 0; h <= 10; ++h) {
        CHECK(binom_eq_lb_expr(h, Rational(1, 2)) == Rational(0));
    }
    // oracle: (1/5)(241/625) - 211/3125
    CHECK(binom_eq_lb_expr(2, Rational(2, 5)) ==
          Rational(1, 5) * Rational(241, 625) - Rational(211, 3125));
    CHECK(binom_eq_lb_expr(2, Rational(2, 5)) == Rational(6, 625));
}

TEST_CASE("binom_eq_lb_expr positive on the stated interval for h = 2") {
    // q in (1/3, 1/2), grid q = k/1000
    for (long k = 334; k <= 499; ++k) {
        CHECK(binom_eq_lb_expr(2, Rational(k, 1000)).sign() > 0);
    }
}
