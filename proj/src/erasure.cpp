#include "bfx/erasure.hpp"

#include <bit>
#include <stdexcept>

namespace bfx {

size_t pow3(int n) {
    size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

ErasurePattern::ErasurePattern(Mask revealed_, Mask values_) : revealed(revealed_), values(values_) {
    if (values & ~revealed) {
        throw std::invalid_argument("erasure pattern: value bits outside the revealed set");
    }
}

size_t pattern_index(int n, const ErasurePattern& pat) {
    size_t idx = 0;
    size_t p3 = 1;
    for (int i = 0; i < n; ++i, p3 *= 3) {
        if (pat.revealed >> i & 1) {
            idx += p3 * (1 + ((pat.values >> i) & 1));
        }
    }
    return idx;
}

ErasurePattern pattern_from_index(int n, size_t idx) {
    ErasurePattern pat;
    for (int i = 0; i < n; ++i) {
        const int digit = static_cast<int>(idx % 3);
        idx /= 3;
        if (digit != 0) {
            pat.revealed |= Mask{1} << i;
            if (digit == 2) pat.values |= Mask{1} << i;
        }
    }
    return pat;
}

int pattern_revealed_count(int n, size_t idx) {
    int cnt = 0;
    for (int i = 0; i < n; ++i) {
        if (idx % 3 != 0) ++cnt;
        idx /= 3;
    }
    return cnt;
}

PatternTable pattern_sums(const BooleanFunction& f) {
    const int n = f.n();
    if (n > kPhiMaxN) throw std::invalid_argument("pattern_sums: capped at n <= 13");
    PatternTable t;
    t.n = n;
    t.sums.assign(pow3(n), 0);
    // Seed the fully revealed patterns with the table values.
    for (size_t m = 0; m < f.size(); ++m) {
        size_t idx = 0;
        size_t p3 = 1;
        for (int i = 0; i < n; ++i, p3 *= 3) {
            idx += p3 * (1 + ((m >> i) & 1));
        }
        t.sums[idx] = f.value(static_cast<Mask>(m));
    }
    // Erase one coordinate at a time: a pattern with digit i erased is the
    // sum of the two patterns revealing it. A pattern becomes final in the
    // pass of its highest erased coordinate.
    size_t p3 = 1;
    for (int i = 0; i < n; ++i, p3 *= 3) {
        const size_t outer = pow3(n - 1 - i);
        for (size_t hi = 0; hi < outer; ++hi) {
            const size_t base = hi * p3 * 3;
            for (size_t lo = 0; lo < p3; ++lo) {
                t.sums[base + lo] = t.sums[base + p3 + lo] + t.sums[base + 2 * p3 + lo];
            }
        }
    }
    return t;
}

Rational conditional_sum(const BooleanFunction& f, const ErasurePattern& pat) {
    if (pat.revealed > f.full_mask()) {
        throw std::invalid_argument("conditional_sum: pattern wider than arity");
    }
    const Mask erased = f.full_mask() & ~pat.revealed;
    long acc = 0;
    // Iterate submasks of the erased set (including 0), completing the input.
    Mask sub = erased;
    while (true) {
        acc += f.value(pat.values | sub);
        if (sub == 0) break;
        sub = (sub - 1) & erased;
    }
    const int erased_count = std::popcount(static_cast<uint32_t>(erased));
    return Rational(acc, 1L << erased_count);
}

PartnerFunction optimal_partner(const BooleanFunction& f) {
    const PatternTable t = pattern_sums(f);
    PartnerFunction g;
    g.n = f.n();
    g.values.resize(t.sums.size());
    g.tie.resize(t.sums.size());
    for (size_t i = 0; i < t.sums.size(); ++i) {
        g.values[i] = t.sums[i] < 0 ? -1 : 1;
        g.tie[i] = t.sums[i] == 0 ? 1 : 0;
    }
    return g;
}

std::vector<long long> phi_abs_level_sums(const BooleanFunction& f) {
    const int n = f.n();
    const PatternTable t = pattern_sums(f);
    std::vector<long long> level(static_cast<size_t>(n) + 1, 0);
    // Walk patterns in index order, maintaining the revealed count from the
    // base-3 digits incrementally via a digit counter.
    std::vector<int> digits(static_cast<size_t>(n), 0);
    int revealed = 0;
    for (size_t idx = 0;; ++idx) {
        const int32_t s = t.sums[idx];
        level[static_cast<size_t>(revealed)] += s < 0 ? -static_cast<long long>(s) : s;
        if (idx + 1 == t.sums.size()) break;
        for (int i = 0;; ++i) {
            if (digits[static_cast<size_t>(i)] == 0) ++revealed;
            if (++digits[static_cast<size_t>(i)] == 3) {
                digits[static_cast<size_t>(i)] = 0;
                --revealed;
            } else {
                break;
            }
        }
    }
    return level;
}

UniPoly phi_poly(const BooleanFunction& f) {
    const int n = f.n();
    const auto level = phi_abs_level_sums(f);
    const mpz_class denom = mpz_class(1) << n;
    std::vector<Rational> entries(static_cast<size_t>(n) + 1);
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        entries[k] = Rational(mpz_class(static_cast<long>(level[k])), denom);
    }
    return binomial_basis_poly(entries, Var::P);
}

Rational phi_eval(const BooleanFunction& f, const Rational& p) {
    return phi_poly(f).eval(p);
}

Rational phi_eval_direct(const BooleanFunction& f, const Rational& p) {
    const int n = f.n();
    const PatternTable t = pattern_sums(f);
    const Rational one_minus = Rational(1) - p;
    Rational acc(0);
    for (size_t idx = 0; idx < t.sums.size(); ++idx) {
        if (t.sums[idx] == 0) continue;
        const int k = pattern_revealed_count(n, idx);
        // Pr[S] * Pr[x_S] * |E[f | pattern]|
        const Rational weight = pow(p, static_cast<unsigned long>(k)) *
                                pow(one_minus, static_cast<unsigned long>(n - k)) *
                                Rational(1L, 1L << k);
        const Rational cond(static_cast<long>(t.sums[idx] < 0 ? -t.sums[idx] : t.sums[idx]),
                            1L << (n - k));
        acc += weight * cond;
    }
    return acc;
}

Rational nicd_correlation(const BooleanFunction& f, const PartnerFunction& g, const Rational& p) {
    if (g.n != f.n()) throw std::invalid_argument("nicd_correlation: arity mismatch");
    const int n = f.n();
    const PatternTable t = pattern_sums(f);
    // Group by revealed count: E[f g] = 2^-n sum_k C_k p^k (1-p)^(n-k)
    // with C_k = sum over k-revealed patterns of (pattern sum) * g(pattern).
    std::vector<long long> level(static_cast<size_t>(n) + 1, 0);
    for (size_t idx = 0; idx < t.sums.size(); ++idx) {
        if (t.sums[idx] == 0) continue;
        level[static_cast<size_t>(pattern_revealed_count(n, idx))] +=
            static_cast<long long>(t.sums[idx]) * g.values[idx];
    }
    const Rational one_minus = Rational(1) - p;
    Rational acc(0);
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        if (level[k] == 0) continue;
        acc += Rational(static_cast<long>(level[k]), 1) * pow(p, k) *
               pow(one_minus, static_cast<unsigned long>(n) - k);
    }
    return acc / Rational(1L << n);
}

Rational partner_bias(const PartnerFunction& g, const Rational& p) {
    return partner_bias(g, p, +1);
}

Rational partner_bias(const PartnerFunction& g, const Rational& p, int8_t tie_override) {
    const int n = g.n;
    // Pr[pattern] = p^k (1-p)^(n-k) 2^-k for a k-revealed pattern.
    std::vector<long long> level(static_cast<size_t>(n) + 1, 0);
    for (size_t idx = 0; idx < g.values.size(); ++idx) {
        const int v = g.tie[idx] ? tie_override : g.values[idx];
        level[static_cast<size_t>(pattern_revealed_count(n, idx))] += v;
    }
    const Rational one_minus = Rational(1) - p;
    Rational acc(0);
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k) {
        if (level[k] == 0) continue;
        acc += Rational(static_cast<long>(level[k]), 1L << k) * pow(p, k) *
               pow(one_minus, static_cast<unsigned long>(n) - k);
    }
    return acc;
}

}  // namespace bfx
