#include "bfx/spectral.hpp"

#include <bit>
#include <stdexcept>

namespace bfx {

FourierSpectrum walsh_hadamard(const BooleanFunction& f) {
    FourierSpectrum spec;
    spec.n = f.n();
    spec.scaled_coeffs.assign(f.table().begin(), f.table().end());
    auto& a = spec.scaled_coeffs;
    const size_t sz = a.size();
    for (size_t len = 1; len < sz; len <<= 1) {
        for (size_t i = 0; i < sz; i += len << 1) {
            for (size_t j = i; j < i + len; ++j) {
                const int32_t u = a[j];
                const int32_t v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
    // With the bit-means-minus-one convention, chi_S(x) = (-1)^{|S & m|},
    // which is exactly the +/- butterfly above.
    return spec;
}

UniPoly stab_poly(const BooleanFunction& f) {
    const FourierSpectrum spec = walsh_hadamard(f);
    const int n = f.n();
    std::vector<long long> level_sq(static_cast<size_t>(n) + 1, 0);
    for (size_t s = 0; s < spec.scaled_coeffs.size(); ++s) {
        const long long c = spec.scaled_coeffs[s];
        level_sq[static_cast<size_t>(std::popcount(static_cast<uint32_t>(s)))] += c * c;
    }
    const mpz_class denom = mpz_class(1) << (2 * n);
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        coeffs[k] = Rational(mpz_class(static_cast<long>(level_sq[k])), denom);
    }
    return UniPoly(std::move(coeffs), Var::Rho);
}

std::vector<Rational> stab_flip_expansion(const BooleanFunction& f, StabRoute route) {
    const int n = f.n();
    const size_t sz = f.size();
    std::vector<long long> level_corr(static_cast<size_t>(n) + 1, 0);
    if (route == StabRoute::Direct) {
        if (n > 13) {
            throw std::invalid_argument(
                "stab_flip_expansion: direct path capped at n <= 13; use the transform route");
        }
        for (size_t s = 0; s < sz; ++s) {
            long long corr = 0;
            for (size_t m = 0; m < sz; ++m) {
                corr += f.value(static_cast<Mask>(m)) * f.value(static_cast<Mask>(m ^ s));
            }
            level_corr[static_cast<size_t>(std::popcount(static_cast<uint32_t>(s)))] += corr;
        }
    } else {
        if (n > 20) {
            // 2^n * 2^(2n) intermediate magnitudes; past this they leave int64.
            throw std::invalid_argument("stab_flip_expansion: transform route capped at n <= 20");
        }
        // E[f(x) f(x^S)] = sum_T fhat(T)^2 chi_T(S); squaring the spectrum
        // and transforming back yields all 2^n autocorrelations at once.
        FourierSpectrum spec = walsh_hadamard(f);
        std::vector<long long> sq(sz);
        for (size_t s = 0; s < sz; ++s) {
            sq[s] = static_cast<long long>(spec.scaled_coeffs[s]) * spec.scaled_coeffs[s];
        }
        for (size_t len = 1; len < sz; len <<= 1) {
            for (size_t i = 0; i < sz; i += len << 1) {
                for (size_t j = i; j < i + len; ++j) {
                    const long long u = sq[j];
                    const long long v = sq[j + len];
                    sq[j] = u + v;
                    sq[j + len] = u - v;
                }
            }
        }
        // sq[S] now equals 2^(2n) E[f(x) f(x^S)] ... divided by 2^n below.
        for (size_t s = 0; s < sz; ++s) {
            level_corr[static_cast<size_t>(std::popcount(static_cast<uint32_t>(s)))] +=
                sq[s] >> n;
        }
    }
    std::vector<Rational> entries(static_cast<size_t>(n) + 1);
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        entries[k] = Rational(mpz_class(static_cast<long>(level_corr[k])), mpz_class(1) << n);
    }
    return entries;
}

}  // namespace bfx
