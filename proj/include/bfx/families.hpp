#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfx/boolfn.hpp"

namespace bfx {

struct LTFWeights {
    std::vector<long> weights;  // one per coordinate
    long threshold = 0;         // f(x) = sign(sum w_i x_i - threshold)
};

// Majority with the two antipodal boundary points e = (+1^(h+1), -1^h) and
// -e negated, h = (n-1)/2. Built from the truth-table definition; no weight
// representation is involved in the construction.
BooleanFunction gopi_g(int n);

// Masks of e and -e for gopi_g at arity n.
std::pair<Mask, Mask> gopi_flip_points(int n);

// Exact linear separability via rational LP feasibility with margin 1.
// Weights are the LP witness with denominators cleared and gcd reduced.
// homogeneous forces threshold = 0. nullopt when f is not an LTF.
std::optional<LTFWeights> is_ltf(const BooleanFunction& f, bool homogeneous = false);

// sign(sum w_i x_i - threshold) as a truth table. Throws (naming a witness
// input) if some input makes the sum hit the threshold exactly.
BooleanFunction ltf_to_function(const LTFWeights& w, int n);

// Smallest odd (a, b) with sign(a sum_A x_i + b sum_B x_i) = gopi_g(n),
// A = [h+1], B the rest. Returns nullopt if none exists within the bound.
std::optional<std::pair<long, long>> gopi_two_block_weights(int n, long bound = 64);

enum class CatalogClass { UnbiasedLtf, Monotone, UnateUnbiased };

const char* catalog_class_name(CatalogClass c);

struct CatalogEntry {
    BooleanFunction fn;                  // canonical representative
    size_t orbit_size = 0;
    std::optional<LTFWeights> weights;   // present for LTF catalogs
};

struct FunctionCatalog {
    int n = 0;
    CatalogClass cls = CatalogClass::Monotone;
    Group group = Group::Flips;
    long weight_bound = 0;  // bound used by the n=5 LTF enumeration, 0 otherwise
    std::vector<CatalogEntry> entries;   // sorted by representative table key
};

// n = 3: exhaustive filter of all 256 tables (ground truth).
// n = 5: bounded odd-weight enumeration, |w_i| <= weight_bound, deduplicated.
FunctionCatalog enumerate_unbiased_ltfs(int n, Group group = Group::Flips, long weight_bound = 5);

// All monotone functions via the recursive pair construction (f is a pair
// of monotone (n-1)-functions with pointwise dominance). n <= 5.
std::vector<BooleanFunction> all_monotone(int n);
FunctionCatalog enumerate_monotone(int n, Group group = Group::Flips);

// Closure of the monotone functions under the 2^n sign flips, filtered to
// unbiased, deduplicated canonically. n <= 5.
FunctionCatalog enumerate_unate_unbiased(int n, Group group = Group::Flips);

// Known values of the Dedekind sequence M(n) for n <= 5 (monotone function
// counts), used as an independent cross-check constant.
long dedekind_number(int n);

}  // namespace bfx
