#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfx/boolfn.hpp"
#include "bfx/erasure.hpp"
#include "bfx/unipoly.hpp"

namespace bfx {

// Threshold constants. eps is the stated counterexample threshold
// 4/((n-3)^2+6); eps_lemma is the endpoint 4/((n-3)^2+8) coming from the
// binomial lower-bound lemma with h=(n-1)/2 (the wider positive region).
Rational threshold_eps(int n);
Rational threshold_eps_lemma(int n);
// gamma = 4/((n+7)(n-1)); gamma' = 2/((n+2)(n-1)).
Rational threshold_gamma(int n);
Rational threshold_gamma_prime(int n);

// (1-2q) Pr_{z,z'~Bin((n-1)/2, q)}[z=z'] + q^n - (1-q)^n.
Rational gap_formula_rhs(int n, const Rational& q);

struct VerificationReport {
    std::string claim;
    int n = 0;
    std::string param;  // rational "num/den" or other parameter rendering
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string notes;
};

// Computes 2^(n-2)(Phi_q[g_n]-Phi_q[Maj_n]), 2^(n-3)(Stab_{1-2q}[Maj_n]-
// Stab_{1-2q}[g_n]) and the binomial formula independently and asserts the
// exact three-way equality.
VerificationReport verify_gap_formula(int n, const Rational& q);

enum class GapFlavor { Stab, PhiLower };

// Subset decomposition of a stability difference (exact identity) or of the
// lower bound on a Phi difference. terms[S] covers every nonempty S.
struct GapExpansion {
    int n = 0;
    GapFlavor flavor = GapFlavor::Stab;
    std::vector<Rational> terms;  // indexed by subset mask; terms[0] stays zero
};

// G_S = E[f(x) f(x^S) - Maj(x) Maj(x^S)]; the assembled polynomial equals
// Stab_{1-2q}[f] - Stab_{1-2q}[Maj_n] coefficient-exact.
GapExpansion gap_terms_stab(const BooleanFunction& f);

// G_S = E[(Maj(x) - f(x)) g*(x_S, *)] for the first-level-normalized f,
// with partner ties resolved toward the properties used by the lemmas
// (x_i on singletons, the common value on equal pairs). The assembled value
// at q = p lower-bounds Phi_p[Maj_n] - Phi_p[f].
GapExpansion gap_terms_phi(const BooleanFunction& f);

UniPoly assemble_gap_poly(const GapExpansion& e);
Rational assemble_gap_value(const GapExpansion& e, const Rational& q);

// Verifies hypotheses (i)-(iii) of the generic gap lemma with constant c,
// then the conclusion G_q[f] > 0 on a grid below gamma_n (or == 0 when f
// agrees with Majority), plus the companion polynomial positivity.
VerificationReport check_lem_gap_hypotheses(const BooleanFunction& f, const GapExpansion& e,
                                            const Rational& c);

// The non-monotone Phi bound: Phi_p[Maj] - Phi_p[f] >= mu_f p (2(1-p)^(n-1)
// - p n(n-1)), positive for 0 < p < gamma'_n. f must be unbiased and
// first-level normalized; p must lie in the open interval.
VerificationReport verify_nonmonotone_phi_bound(const BooleanFunction& f, const Rational& p);

// The n=3 reduction: flip-normalize, then replace a negative product
// -x_i x_j by x_i x_j (its negation keeps Phi). Requires n=3 and unbiased f.
BooleanFunction n3_normalize(const BooleanFunction& f);

struct N3Properties {
    bool prop_i = false;   // singleton partner values can be chosen as x_i
    bool prop_ii = false;  // equal-pair partner values can be chosen as (x_i+x_j)/2
};

N3Properties n3_partner_properties(const BooleanFunction& f);

struct VerifyOptions {
    std::vector<int> n_list;   // empty = per-claim default
    int grid = 0;              // grid density override, 0 = per-claim default
    uint64_t seed = 12345;
    unsigned jobs = 1;
};

// Claim ids: thm1 thm2 thm3 thm4 lem:binom-comp lem:binom-eq-lb
// lem:maj-diff lem:qvalue lem:gap lem:three-case-reduction conj1_sweep
// conj2_sweep consistency counterexample, or "all".
std::vector<VerificationReport> run_claim(const std::string& claim, const VerifyOptions& opts);
const std::vector<std::string>& known_claims();

// One row of the sweep table: exact gaps and the formula value at (n, q).
struct SweepRow {
    int n;
    Rational q;
    Rational gap_phi;   // Phi_q[g_n] - Phi_q[Maj_n]
    Rational gap_stab;  // Stab_{1-2q}[Maj_n] - Stab_{1-2q}[g_n]
    Rational rhs;       // gap_formula_rhs(n, q)
};

std::vector<SweepRow> sweep_gap_rows(const std::vector<int>& n_list, int grid);

}  // namespace bfx
