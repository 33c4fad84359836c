#pragma once

#include <vector>

#include "bfx/boolfn.hpp"
#include "bfx/unipoly.hpp"

namespace bfx {

// Character sums scaled by 2^n: coeffs[S] = sum_x f(x) chi_S(x) = 2^n fhat(S).
// Staying in integers through the transform keeps everything exact; the
// division by 2^n happens only at polynomial assembly.
struct FourierSpectrum {
    int n = 0;
    std::vector<int32_t> scaled_coeffs;
};

FourierSpectrum walsh_hadamard(const BooleanFunction& f);

// Stab_rho[f] as a polynomial in rho; coefficient of rho^k is the level-k
// Fourier weight W_k.
UniPoly stab_poly(const BooleanFunction& f);

enum class StabRoute { Direct, Transform };

// Entry k = sum over |S|=k of E_x[f(x) f(x xor S)], so that
// Stab_{1-2q}[f] = sum_k q^k (1-q)^(n-k) entry_k. The direct route is the
// O(4^n) double enumeration (n <= 13); the transform route computes the
// same autocorrelations through the spectrum in O(n 2^n).
std::vector<Rational> stab_flip_expansion(const BooleanFunction& f,
                                          StabRoute route = StabRoute::Direct);

}  // namespace bfx
