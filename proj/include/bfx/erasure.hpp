#pragma once

#include <cstdint>
#include <vector>

#include "bfx/boolfn.hpp"
#include "bfx/unipoly.hpp"

namespace bfx {

// Erasure patterns live in {-1, +1, *}^n. Dense base-3 indexing, digit i:
// 0 = erased, 1 = x_{i+1} = +1, 2 = x_{i+1} = -1. 3^n patterns in total.
constexpr int kPhiMaxN = 13;

size_t pow3(int n);

struct ErasurePattern {
    Mask revealed = 0;  // subset S
    Mask values = 0;    // values on S under the usual bit-means-minus-one encoding

    ErasurePattern() = default;
    ErasurePattern(Mask revealed_, Mask values_);
};

size_t pattern_index(int n, const ErasurePattern& pat);
ErasurePattern pattern_from_index(int n, size_t idx);
int pattern_revealed_count(int n, size_t idx);

// sums[idx] = integer sum of f over all completions of the erased
// coordinates of pattern idx (so E[f | pattern] = sums[idx] / 2^(#erased)).
struct PatternTable {
    int n = 0;
    std::vector<int32_t> sums;
};

PatternTable pattern_sums(const BooleanFunction& f);

// E[f | pattern], computed directly from the truth table (independent of
// the PatternTable DP; the two are cross-checked in tests).
Rational conditional_sum(const BooleanFunction& f, const ErasurePattern& pat);

// sign(E[f | pattern]) at every pattern; zero conditional expectations are
// resolved to +1 and flagged.
struct PartnerFunction {
    int n = 0;
    std::vector<int8_t> values;  // +-1 per pattern
    std::vector<uint8_t> tie;    // 1 where the conditional expectation was zero

    int8_t at(const ErasurePattern& pat) const { return values[pattern_index(n, pat)]; }
    bool is_tie(const ErasurePattern& pat) const { return tie[pattern_index(n, pat)] != 0; }
};

PartnerFunction optimal_partner(const BooleanFunction& f);

// Phi_p[f] as an exact degree-n polynomial in p. Assembled by accumulating
// |conditional sum| per revealed-set size into the binomial basis
// p^k (1-p)^(n-k) and expanding exactly (per-subset inner values differ, so
// subsets of equal size cannot be merged before taking absolute values).
UniPoly phi_poly(const BooleanFunction& f);

// poly_eval(phi_poly(f), p).
Rational phi_eval(const BooleanFunction& f, const Rational& p);

// Second code path: direct per-pattern weighted summation, kept independent
// of the polynomial assembly for cross-checking.
Rational phi_eval_direct(const BooleanFunction& f, const Rational& p);

// A_k = sum over k-revealed patterns of |pattern sum|; phi_poly is
// 2^-n sum_k A_k p^k (1-p)^(n-k). Exposed for the hot verification loops.
std::vector<long long> phi_abs_level_sums(const BooleanFunction& f);

// E[f(x) g(y)] where y reveals each coordinate of x independently with
// probability p. g need not be the optimal partner.
Rational nicd_correlation(const BooleanFunction& f, const PartnerFunction& g, const Rational& p);

// E[g(y)] under the same channel, with x uniform. tie_override replaces the
// stored value on flagged patterns (+1 or -1), letting callers compare both
// resolutions of the arbitrary tie choice.
Rational partner_bias(const PartnerFunction& g, const Rational& p);
Rational partner_bias(const PartnerFunction& g, const Rational& p, int8_t tie_override);

}  // namespace bfx
