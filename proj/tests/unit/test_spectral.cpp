#include <doctest.h>

#include <bit>

#include "bfx/rng.hpp"
#include "bfx/spectral.hpp"

using namespace bfx;

TEST_CASE("walsh_hadamard on dictator and majority") {
    const auto spec = walsh_hadamard(make_dictator(4, 1));
    for (size_t s = 0; s < 16; ++s) {
        CHECK(spec.scaled_coeffs[s] == (s == 1 ? 16 : 0));
    }
    // oracle: direct character sums over the 8 inputs
    const auto maj3 = make_majority(3);
    for (size_t s = 0; s < 8; ++s) {
        int32_t direct = 0;
        for (size_t m = 0; m < 8; ++m) {
            const int chi = std::popcount(static_cast<uint32_t>(s & m)) % 2 ? -1 : 1;
            direct += chi * maj3.value(static_cast<Mask>(m));
        }
        CHECK(walsh_hadamard(maj3).scaled_coeffs[s] == direct);
    }
    CHECK(walsh_hadamard(maj3).scaled_coeffs[1] == 4);
    CHECK(walsh_hadamard(maj3).scaled_coeffs[2] == 4);
    CHECK(walsh_hadamard(maj3).scaled_coeffs[4] == 4);
    CHECK(walsh_hadamard(maj3).scaled_coeffs[7] == -4);
}

TEST_CASE("parseval holds exactly") {
    auto rng = stream_rng(9, 0);
    for (int n = 1; n <= 10; ++n) {
        for (int it = 0; it < 20; ++it) {
            const auto f = random_function(n, rng);
            const auto spec = walsh_hadamard(f);
            long long sum_sq = 0;
            int parity_ok = true;
            for (int32_t c : spec.scaled_coeffs) {
                sum_sq += static_cast<long long>(c) * c;
                if (((c % 2) + 2) % 2 != ((1LL << n) % 2)) parity_ok = false;
            }
            CHECK(sum_sq == (1LL << (2 * n)));
            CHECK(parity_ok);
        }
    }
}

TEST_CASE("stab_poly examples") {
    CHECK(stab_poly(make_dictator(5, 2)) == UniPoly({Rational(0), Rational(1)}, Var::Rho));
    CHECK(stab_poly(make_majority(3)) ==
          UniPoly({Rational(0), Rational(3, 4), Rational(0), Rational(1, 4)}, Var::Rho));
    auto rng = stream_rng(9, 1);
    for (int it = 0; it < 30; ++it) {
        const auto f = random_function(5, rng);
        CHECK(stab_poly(f).eval(Rational(1)) == Rational(1));
        // unbiased f has zero constant term
        const auto g = random_unbiased(5, rng);
        CHECK(stab_poly(g).coeff(0) == Rational(0));
    }
}

TEST_CASE("flip expansion entries") {
    const auto e = stab_flip_expansion(make_majority(3));
    CHECK(e[0] == Rational(1));  // S = 0 term for every f
    // Maj_3 substituted polynomial equals (3/4)(1-2q) + (1/4)(1-2q)^3
    const UniPoly via_sub =
        stab_poly(make_majority(3)).substitute_affine(Rational(-2), Rational(1), Var::Q);
    const UniPoly via_flip = binomial_basis_poly(e, Var::Q);
    CHECK(via_sub == via_flip);
}

TEST_CASE("stab poly evaluation matches the direct expectation at rho = 1/2") {
    // oracle: E[f(x) f(y)] summed over all (x, flip-set) pairs with
    // q = (1 - rho)/2 = 1/4
    const auto maj3 = make_majority(3);
    const Rational q(1, 4);
    Rational direct(0);
    for (size_t s = 0; s < 8; ++s) {
        long corr = 0;
        for (size_t m = 0; m < 8; ++m) {
            corr += maj3.value(static_cast<Mask>(m)) * maj3.value(static_cast<Mask>(m ^ s));
        }
        const auto k = static_cast<unsigned long>(std::popcount(static_cast<uint32_t>(s)));
        direct += pow(q, k) * pow(Rational(1) - q, 3 - k) * Rational(corr, 8);
    }
    CHECK(stab_poly(maj3).eval(Rational(1, 2)) == direct);
    CHECK(direct == Rational(3, 4) * Rational(1, 2) + Rational(1, 4) * Rational(1, 8));
}

TEST_CASE("route equivalence: transform vs direct flip expansion") {
    auto rng = stream_rng(9, 2);
    for (int n = 1; n <= 10; ++n) {
        for (int it = 0; it < 10; ++it) {
            const auto f = random_function(n, rng);
            const auto direct = stab_flip_expansion(f, StabRoute::Direct);
            const auto transform = stab_flip_expansion(f, StabRoute::Transform);
            CHECK(direct == transform);
            const UniPoly via_sub =
                stab_poly(f).substitute_affine(Rational(-2), Rational(1), Var::Q);
            CHECK(via_sub == binomial_basis_poly(direct, Var::Q));
        }
    }
}

TEST_CASE("stability is invariant under sign flips") {
    auto rng = stream_rng(9, 3);
    for (int it = 0; it < 50; ++it) {
        const auto f = random_function(5, rng);
        const SignFlip a{static_cast<Mask>(rng() & 31)};
        CHECK(stab_poly(f) == stab_poly(apply_sign_flip(f, a)));
    }
}

TEST_CASE("direct flip expansion is capped") {
    CHECK_THROWS_AS(stab_flip_expansion(make_majority(15), StabRoute::Direct),
                    std::invalid_argument);
    CHECK_NOTHROW(stab_flip_expansion(make_majority(15), StabRoute::Transform));
}
