#pragma once

#include "bfx/rational.hpp"

namespace bfx {

// C(h,k) q^k (1-q)^(h-k). Throws if k is out of [0, h].
Rational binom_pmf(int h, int k, const Rational& q);

// Pr[w = w'] for independent w, w' ~ Bin(h, q).
Rational binom_equal_prob(int h, const Rational& q);

// E[(-1)^{1[u > u']}] for independent u ~ Bin(h+1, p), u' ~ Bin(h, p),
// computed by direct double summation over outcomes. The closed form
// (1-2p) Pr[v=v'] is deliberately not used here; their equality is a
// lemma that gets verified against this definition.
Rational binom_comp_value(int h, const Rational& p);

// (1-2q) Pr_{w,w'~Bin(h,q)}[w=w'] + q^(2h+1) - (1-q)^(2h+1).
Rational binom_eq_lb_expr(int h, const Rational& q);

}  // namespace bfx
