#include <doctest.h>

#include <bit>

#include "bfx/binomial.hpp"
#include "bfx/erasure.hpp"
#include "bfx/families.hpp"
#include "bfx/rng.hpp"

using namespace bfx;

namespace {

// In-test oracle: Phi_p via conditional_sum over explicit (S, x_S) pairs,
// fully independent of the base-3 DP used by phi_poly.
Rational phi_oracle(const BooleanFunction& f, const Rational& p) {
    const int n = f.n();
    Rational acc(0);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const int k = std::popcount(static_cast<uint32_t>(s));
        const Rational pr_s = pow(p, static_cast<unsigned long>(k)) *
                              pow(Rational(1) - p, static_cast<unsigned long>(n - k));
        Mask vals = s;
        Rational inner(0);
        while (true) {  // all value assignments on S (submasks of s)
            inner += conditional_sum(f, ErasurePattern(s, vals)).abs();
            if (vals == 0) break;
            vals = (vals - 1) & s;
        }
        acc += pr_s * inner / Rational(1L << k);
    }
    return acc;
}

}  // namespace

TEST_CASE("pattern indexing round trip") {
    for (int n = 1; n <= 5; ++n) {
        for (size_t idx = 0; idx < pow3(n); ++idx) {
            const auto pat = pattern_from_index(n, idx);
            CHECK(pattern_index(n, pat) == idx);
            CHECK(pattern_revealed_count(n, idx) ==
                  std::popcount(static_cast<uint32_t>(pat.revealed)));
        }
    }
    CHECK_THROWS_AS(ErasurePattern(0b01, 0b10), std::invalid_argument);
}

TEST_CASE("conditional_sum examples") {
    const auto maj3 = make_majority(3);
    // nothing erased: the point value
    for (size_t m = 0; m < 8; ++m) {
        CHECK(conditional_sum(maj3, ErasurePattern(7, static_cast<Mask>(m))) ==
              Rational(maj3.value(static_cast<Mask>(m))));
    }
    // everything erased on an unbiased function
    CHECK(conditional_sum(maj3, ErasurePattern(0, 0)) == Rational(0));
    // S = {1,2}, x1 = x2 = +1: average of Maj3(1,1,+-1) = 1
    CHECK(conditional_sum(maj3, ErasurePattern(0b011, 0)) == Rational(1));
}

TEST_CASE("pattern_sums agrees with conditional_sum") {
    auto rng = stream_rng(13, 0);
    for (int n = 1; n <= 7; ++n) {
        const auto f = random_function(n, rng);
        const auto t = pattern_sums(f);
        for (size_t idx = 0; idx < t.sums.size(); ++idx) {
            const auto pat = pattern_from_index(n, idx);
            const int erased = n - std::popcount(static_cast<uint32_t>(pat.revealed));
            CHECK(Rational(t.sums[idx], 1L << erased) == conditional_sum(f, pat));
        }
    }
}

TEST_CASE("optimal partner of dictator and majority") {
    const auto d = make_dictator(3, 1);
    const auto g = optimal_partner(d);
    for (size_t idx = 0; idx < pow3(3); ++idx) {
        const auto pat = pattern_from_index(3, idx);
        if (pat.revealed & 1) {
            CHECK_FALSE(g.is_tie(pat));
            CHECK(g.at(pat) == coord_value(pat.values, 0));
        } else {
            CHECK(g.is_tie(pat));
        }
    }
    // Maj_3 on singleton reveals: g* = x_i
    const auto gm = optimal_partner(make_majority(3));
    for (int i = 0; i < 3; ++i) {
        for (int v = 0; v <= 1; ++v) {
            const Mask s = Mask{1} << i;
            const ErasurePattern pat(s, v ? s : 0);
            CHECK_FALSE(gm.is_tie(pat));
            CHECK(gm.at(pat) == coord_value(pat.values, i));
        }
    }
}

TEST_CASE("monotone unbiased pair reveals never contradict sign(x_i + x_j)") {
    // [paper claim for the monotone Phi case; ties are free]
    int checked = 0;
    for (const auto& f : all_monotone(4)) {
        if (f.table_sum() != 0) continue;
        ++checked;
        const auto t = pattern_sums(f);
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                const Mask s = (Mask{1} << i) | (Mask{1} << j);
                for (int sign = 0; sign <= 1; ++sign) {
                    const ErasurePattern pat(s, sign ? s : 0);  // x_i = x_j = -+1
                    const int want = sign ? -1 : 1;
                    const int32_t cond = t.sums[pattern_index(4, pat)];
                    CHECK(cond * want >= 0);
                }
            }
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("phi_poly examples") {
    CHECK(phi_poly(make_dictator(4, 2)) == UniPoly({Rational(0), Rational(1)}, Var::P));
    auto rng = stream_rng(13, 2);
    for (int it = 0; it < 20; ++it) {
        const auto f = random_unbiased(4, rng);
        CHECK(phi_eval(f, Rational(0)) == Rational(0));  // unbiased at p=0
        const auto g = random_function(4, rng);
        CHECK(phi_eval(g, Rational(1)) == Rational(1));  // +-1-valued at p=1
    }
    // Maj_3 at 1/2 via the independent oracle
    CHECK(phi_oracle(make_majority(3), Rational(1, 2)) == Rational(1, 2));
    CHECK(phi_eval(make_majority(3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("phi gap at (g_5, 2/5) matches the binomial expression") {
    const Rational p(2, 5);
    const Rational gap = phi_eval(gopi_g(5), p) - phi_eval(make_majority(5), p);
    CHECK(gap == binom_eq_lb_expr(2, p) / Rational(8));  // 2^(n-2)
    CHECK(gap == Rational(3, 2500));
}

TEST_CASE("phi_poly equals direct summation and the in-test oracle") {
    auto rng = stream_rng(13, 3);
    for (uint64_t key = 0; key < 256; key += 23) {
        const auto f = from_table_key(3, key);
        for (int it = 0; it < 3; ++it) {
            Rational p(static_cast<long>(rng() % 100), 101);
            CHECK(phi_eval(f, p) == phi_eval_direct(f, p));
            CHECK(phi_eval(f, p) == phi_oracle(f, p));
        }
    }
    for (int it = 0; it < 20; ++it) {
        const auto f = random_function(5, rng);
        const Rational p(static_cast<long>(rng() % 100), 101);
        CHECK(phi_eval(f, p) == phi_eval_direct(f, p));
    }
}

TEST_CASE("phi is invariant under sign flips and output negation") {
    auto rng = stream_rng(13, 4);
    for (int it = 0; it < 40; ++it) {
        const auto f = random_function(4, rng);
        const SignFlip a{static_cast<Mask>(rng() & 15)};
        CHECK(phi_poly(f) == phi_poly(apply_sign_flip(f, a)));
        CHECK(phi_poly(f) == phi_poly(f.negated()));
    }
}

TEST_CASE("phi is nondecreasing in p") {
    auto rng = stream_rng(13, 5);
    for (int it = 0; it < 100; ++it) {
        const auto f = random_function(4, rng);
        const auto poly = phi_poly(f);
        Rational prev = poly.eval(Rational(0));
        for (int k = 1; k <= 12; ++k) {
            const Rational cur = poly.eval(Rational(k, 12));
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("nicd correlation achieves phi at the optimal partner") {
    auto rng = stream_rng(13, 6);
    for (int it = 0; it < 30; ++it) {
        const auto f = random_function(4, rng);
        const auto g = optimal_partner(f);
        const Rational p(static_cast<long>(rng() % 50), 53);
        CHECK(nicd_correlation(f, g, p) == phi_eval(f, p));
        // tie-rule independence: flipping the tie values changes nothing
        PartnerFunction g_minus = g;
        for (size_t i = 0; i < g_minus.values.size(); ++i) {
            if (g_minus.tie[i]) g_minus.values[i] = -1;
        }
        CHECK(nicd_correlation(f, g_minus, p) == phi_eval(f, p));
    }
    // dictator: tie patterns contribute E[f] * 1 = 0
    const auto d = make_dictator(3, 1);
    const Rational p(2, 5);
    CHECK(nicd_correlation(d, optimal_partner(d), p) == p);
}

TEST_CASE("no partner beats the optimal one") {
    auto rng = stream_rng(13, 7);
    for (int it = 0; it < 1000; ++it) {
        const auto f = random_function(4, rng);
        PartnerFunction g;
        g.n = 4;
        g.values.resize(pow3(4));
        g.tie.assign(pow3(4), 0);
        for (auto& v : g.values) v = (rng() & 1) ? 1 : -1;
        const Rational p(static_cast<long>(rng() % 100), 101);
        CHECK(nicd_correlation(f, g, p) <= phi_eval(f, p));
    }
}

TEST_CASE("partner bias") {
    // constant +1 partner
    PartnerFunction ones;
    ones.n = 3;
    ones.values.assign(pow3(3), 1);
    ones.tie.assign(pow3(3), 0);
    CHECK(partner_bias(ones, Rational(1, 3)) == Rational(1));

    // odd f: zero bias on the unflagged mass (both tie resolutions cancel)
    auto rng = stream_rng(13, 8);
    for (int it = 0; it < 200; ++it) {
        const auto f = random_function(3, rng);
        if (!structural_predicates(f).odd) continue;
        const auto g = optimal_partner(f);
        const Rational p(1, 3);
        CHECK(partner_bias(g, p, +1) + partner_bias(g, p, -1) == Rational(0));
    }

    // search the 70 unbiased n=3 functions: some non-odd f has a genuinely
    // biased optimal partner (the +1-resolved one actually achieving Phi)
    bool found = false;
    for (uint64_t key = 0; key < 256 && !found; ++key) {
        const auto f = from_table_key(3, key);
        if (f.table_sum() != 0) continue;
        if (structural_predicates(f).odd) continue;
        if (partner_bias(optimal_partner(f), Rational(1, 3)) != Rational(0)) found = true;
    }
    CHECK(found);
}
