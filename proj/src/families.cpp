#include "bfx/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bfx/simplex.hpp"

namespace bfx {

BooleanFunction gopi_g(int n) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("gopi_g: n must be odd and >= 3");
    BooleanFunction g = make_majority(n);
    const auto [e, neg_e] = gopi_flip_points(n);
    g.set_value(e, static_cast<int8_t>(-g.value(e)));
    g.set_value(neg_e, static_cast<int8_t>(-g.value(neg_e)));
    return g;
}

std::pair<Mask, Mask> gopi_flip_points(int n) {
    const int h = (n - 1) / 2;
    // e has +1 on A = {1..h+1} and -1 on B = {h+2..n}: set bits are B.
    const Mask full = (Mask{1} << n) - 1;
    const Mask e = full & ~((Mask{1} << (h + 1)) - 1);
    return {e, static_cast<Mask>(full ^ e)};
}

namespace {

std::string mask_to_input_string(Mask m, int n) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        os << (coord_value(m, i) == 1 ? "1" : "-1");
    }
    os << ")";
    return os.str();
}

// One margin row: f(x) * (sum_i w_i x_i - theta) >= 1, variables (w, theta).
std::vector<Rational> margin_row(const BooleanFunction& f, Mask m, bool homogeneous) {
    const int n = f.n();
    std::vector<Rational> row(static_cast<size_t>(n) + (homogeneous ? 0 : 1));
    const int fv = f.value(m);
    for (int i = 0; i < n; ++i) {
        row[static_cast<size_t>(i)] = Rational(fv * coord_value(m, i));
    }
    if (!homogeneous) row[static_cast<size_t>(n)] = Rational(-fv);
    return row;
}

LTFWeights clear_denominators(const std::vector<Rational>& y, int n, bool homogeneous) {
    mpz_class lcm = 1;
    for (const auto& c : y) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        lcm = l;
    }
    std::vector<mpz_class> ints(y.size());
    mpz_class g = 0;
    for (size_t i = 0; i < y.size(); ++i) {
        ints[i] = y[i].num() * (lcm / y[i].den());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
        g = gg;
    }
    if (g == 0) g = 1;
    const auto to_long = [](const mpz_class& z) {
        if (!z.fits_slong_p()) throw std::logic_error("is_ltf: weight exceeds long range");
        return z.get_si();
    };
    LTFWeights w;
    w.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        w.weights[static_cast<size_t>(i)] = to_long(mpz_class(ints[static_cast<size_t>(i)] / g));
    }
    w.threshold = homogeneous ? 0 : to_long(mpz_class(ints[static_cast<size_t>(n)] / g));
    return w;
}

}  // namespace

namespace {

// Signed margin f(x) (w . x - theta) of an integer candidate at every input;
// returns the masks of the most violated constraints (empty when the
// candidate realizes f).
std::vector<Mask> violated_masks(const BooleanFunction& f, const LTFWeights& cand,
                                 size_t max_count) {
    const int n = f.n();
    const size_t sz = f.size();
    std::vector<std::pair<long, Mask>> bad;
    for (size_t m = 0; m < sz; ++m) {
        long dot = -cand.threshold;
        for (int i = 0; i < n; ++i) {
            dot += cand.weights[static_cast<size_t>(i)] * coord_value(static_cast<Mask>(m), i);
        }
        const long margin = dot * f.value(static_cast<Mask>(m));
        if (margin <= 0) bad.emplace_back(margin, static_cast<Mask>(m));
    }
    if (bad.size() > max_count) {
        std::partial_sort(bad.begin(), bad.begin() + static_cast<long>(max_count), bad.end());
        bad.resize(max_count);
    }
    std::vector<Mask> out;
    out.reserve(bad.size());
    for (const auto& [margin, m] : bad) out.push_back(m);
    return out;
}

}  // namespace

std::optional<LTFWeights> is_ltf(const BooleanFunction& f, bool homogeneous) {
    const int n = f.n();
    // Fast path: the Chow vector (first-level sums, plus the bias as the
    // threshold slot) already realizes many threshold functions exactly.
    {
        LTFWeights chow;
        chow.weights = first_level_sums(f);
        chow.threshold = homogeneous ? 0 : -f.table_sum();
        if (std::any_of(chow.weights.begin(), chow.weights.end(), [](long w) { return w != 0; }) &&
            violated_masks(f, chow, 1).empty()) {
            mpz_class g(chow.threshold);
            for (long w : chow.weights) {
                mpz_class gg;
                mpz_gcd_ui(gg.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(std::abs(w)));
                g = gg;
            }
            if (g > 1) {
                const long gl = g.get_si();
                for (auto& w : chow.weights) w /= gl;
                chow.threshold /= gl;
            }
            return chow;
        }
    }
    // Constraint generation: solve on a small active set, scan the full
    // input space for violations, add the worst batch, repeat. Rows are
    // never removed, so the loop terminates; a few rounds suffice.
    const size_t batch = std::max<size_t>(8, 2 * static_cast<size_t>(n));
    std::vector<std::vector<Rational>> rows;
    rows.push_back(margin_row(f, 0, homogeneous));
    rows.push_back(margin_row(f, f.full_mask(), homogeneous));
    while (true) {
        const auto sol = exact_lp_feasible(rows);
        if (!sol) return std::nullopt;
        const LTFWeights cand = clear_denominators(*sol, n, homogeneous);
        const auto bad = violated_masks(f, cand, batch);
        if (bad.empty()) return cand;
        for (Mask m : bad) rows.push_back(margin_row(f, m, homogeneous));
    }
}

BooleanFunction ltf_to_function(const LTFWeights& w, int n) {
    if (static_cast<int>(w.weights.size()) != n) {
        throw std::invalid_argument("ltf_to_function: weight count != n");
    }
    const size_t sz = size_t{1} << n;
    std::vector<int8_t> t(sz);
    for (size_t m = 0; m < sz; ++m) {
        long dot = -w.threshold;
        for (int i = 0; i < n; ++i) {
            dot += w.weights[static_cast<size_t>(i)] * coord_value(static_cast<Mask>(m), i);
        }
        if (dot == 0) {
            throw std::invalid_argument("ltf_to_function: zero sum at input " +
                                        mask_to_input_string(static_cast<Mask>(m), n));
        }
        t[m] = dot > 0 ? 1 : -1;
    }
    return BooleanFunction(n, std::move(t));
}

std::optional<std::pair<long, long>> gopi_two_block_weights(int n, long bound) {
    const BooleanFunction g = gopi_g(n);
    const int h = (n - 1) / 2;
    for (long a = 1; a <= bound; a += 2) {
        for (long b = 1; b <= bound; b += 2) {
            LTFWeights w;
            w.weights.assign(static_cast<size_t>(n), a);
            for (int i = h + 1; i < n; ++i) w.weights[static_cast<size_t>(i)] = b;
            try {
                if (ltf_to_function(w, n) == g) return std::make_pair(a, b);
            } catch (const std::invalid_argument&) {
                continue;  // tie at some input; not a representation
            }
        }
    }
    return std::nullopt;
}

const char* catalog_class_name(CatalogClass c) {
    switch (c) {
        case CatalogClass::UnbiasedLtf: return "unbiased_ltf";
        case CatalogClass::Monotone: return "monotone";
        case CatalogClass::UnateUnbiased: return "unate_unbiased";
    }
    return "?";
}

long dedekind_number(int n) {
    static const long table[] = {2, 3, 6, 20, 168, 7581};
    if (n < 0 || n > 5) throw std::invalid_argument("dedekind_number: only n <= 5");
    return table[n];
}

namespace {

// Number of distinct tables in the orbit of f under the group action.
size_t orbit_size(const BooleanFunction& f, Group group) {
    std::set<uint64_t> seen;
    std::vector<int> perm(static_cast<size_t>(f.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        BooleanFunction base = f;
        if (group == Group::FlipsPerms) {
            std::vector<int8_t> t(f.size());
            for (size_t m = 0; m < f.size(); ++m) {
                Mask pm = 0;
                for (int i = 0; i < f.n(); ++i) {
                    if (m >> i & 1) pm |= Mask{1} << perm[static_cast<size_t>(i)];
                }
                t[pm] = f.value(static_cast<Mask>(m));
            }
            base = BooleanFunction(f.n(), std::move(t));
        }
        for (Mask a = 0; a < f.size(); ++a) {
            seen.insert(table_key(apply_sign_flip(base, SignFlip{a})));
        }
    } while (group == Group::FlipsPerms && std::next_permutation(perm.begin(), perm.end()));
    return seen.size();
}

FunctionCatalog dedup_catalog(int n, CatalogClass cls, Group group,
                              const std::vector<BooleanFunction>& members,
                              bool attach_weights) {
    std::set<uint64_t> canonical_keys;
    for (const auto& f : members) canonical_keys.insert(canonical_key(f, group));
    FunctionCatalog cat;
    cat.n = n;
    cat.cls = cls;
    cat.group = group;
    for (const uint64_t key : canonical_keys) {
        CatalogEntry e{from_table_key(n, key), 0, std::nullopt};
        e.orbit_size = orbit_size(e.fn, group);
        if (attach_weights) e.weights = is_ltf(e.fn);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

}  // namespace

std::vector<BooleanFunction> all_monotone(int n) {
    if (n > 5) throw std::invalid_argument("all_monotone: capped at n <= 5");
    // Level 0: the two constants on zero variables, encoded as 1-entry keys.
    std::vector<std::vector<uint64_t>> levels(static_cast<size_t>(n) + 1);
    levels[0] = {0u, 1u};  // bit m set <=> value +1
    for (int k = 1; k <= n; ++k) {
        const size_t bits = size_t{1} << (k - 1);
        const uint64_t mask = bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
        for (const uint64_t hi : levels[static_cast<size_t>(k - 1)]) {      // x_k = +1 half
            for (const uint64_t lo : levels[static_cast<size_t>(k - 1)]) {  // x_k = -1 half
                // Monotone in x_k: the +1 half dominates the -1 half pointwise.
                if ((hi & lo) != lo) continue;
                levels[static_cast<size_t>(k)].push_back((lo << bits) | (hi & mask));
            }
        }
    }
    std::vector<BooleanFunction> out;
    out.reserve(levels[static_cast<size_t>(n)].size());
    for (const uint64_t key : levels[static_cast<size_t>(n)]) {
        out.push_back(from_table_key(n, key));
    }
    return out;
}

FunctionCatalog enumerate_monotone(int n, Group group) {
    // Flips never identify two distinct monotone functions (a flip of a
    // relevant coordinate breaks monotonicity), so dedup only matters under
    // permutations. Representatives stay monotone: the minimum is taken over
    // the permuted copies rather than the whole flip orbit.
    std::map<uint64_t, uint64_t> canon_to_rep;
    std::vector<int> perm(static_cast<size_t>(n));
    for (const auto& f : all_monotone(n)) {
        const uint64_t canon = canonical_key(f, group);
        uint64_t rep = table_key(f);
        if (group == Group::FlipsPerms) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int8_t> t(f.size());
                for (size_t m = 0; m < f.size(); ++m) {
                    Mask pm = 0;
                    for (int i = 0; i < n; ++i) {
                        if (m >> i & 1) pm |= Mask{1} << perm[static_cast<size_t>(i)];
                    }
                    t[pm] = f.value(static_cast<Mask>(m));
                }
                rep = std::min(rep, table_key(BooleanFunction(n, std::move(t))));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        auto [it, inserted] = canon_to_rep.emplace(canon, rep);
        if (!inserted) it->second = std::min(it->second, rep);
    }
    FunctionCatalog cat;
    cat.n = n;
    cat.cls = CatalogClass::Monotone;
    cat.group = group;
    std::set<uint64_t> reps;
    for (const auto& [canon, rep] : canon_to_rep) reps.insert(rep);
    for (const uint64_t rep : reps) {
        CatalogEntry e{from_table_key(n, rep), 0, std::nullopt};
        e.orbit_size = orbit_size(e.fn, group);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

FunctionCatalog enumerate_unate_unbiased(int n, Group group) {
    if (n > 5) throw std::invalid_argument("enumerate_unate_unbiased: capped at n <= 5");
    std::vector<BooleanFunction> members;
    for (const auto& f : all_monotone(n)) {
        if (f.table_sum() != 0) continue;  // flips preserve bias, filter early
        for (Mask a = 0; a < f.size(); ++a) {
            members.push_back(apply_sign_flip(f, SignFlip{a}));
        }
    }
    return dedup_catalog(n, CatalogClass::UnateUnbiased, group, members, false);
}

FunctionCatalog enumerate_unbiased_ltfs(int n, Group group, long weight_bound) {
    if (n == 3) {
        std::vector<BooleanFunction> members;
        for (uint64_t key = 0; key < 256; ++key) {
            BooleanFunction f = from_table_key(3, key);
            if (f.table_sum() != 0) continue;
            if (is_ltf(f)) members.push_back(std::move(f));
        }
        FunctionCatalog cat = dedup_catalog(3, CatalogClass::UnbiasedLtf, group, members, true);
        return cat;
    }
    if (n != 5) throw std::invalid_argument("enumerate_unbiased_ltfs: only n in {3,5}");
    // Homogeneous enumeration with all-odd weights: an odd weight sum can
    // never be zero, and every unbiased LTF is self-dual, hence has such a
    // representation. The bound itself is validated in the test suite by
    // cross-checking against LP detection over the unate unbiased catalog.
    std::vector<long> odd_values;
    for (long v = -weight_bound; v <= weight_bound; ++v) {
        if (v % 2 != 0) odd_values.push_back(v);
    }
    std::vector<BooleanFunction> members;
    LTFWeights w;
    w.weights.assign(5, 0);
    for (long w0 : odd_values) {
        w.weights[0] = w0;
        for (long w1 : odd_values) {
            w.weights[1] = w1;
            for (long w2 : odd_values) {
                w.weights[2] = w2;
                for (long w3 : odd_values) {
                    w.weights[3] = w3;
                    for (long w4 : odd_values) {
                        w.weights[4] = w4;
                        members.push_back(ltf_to_function(w, 5));
                    }
                }
            }
        }
    }
    FunctionCatalog cat = dedup_catalog(5, CatalogClass::UnbiasedLtf, group, members, true);
    cat.weight_bound = weight_bound;
    return cat;
}

}  // namespace bfx
