#include "bfx/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bfx {

BooleanFunction::BooleanFunction(int n, std::vector<int8_t> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("boolfn: arity out of [1,24]");
    if (table_.size() != (size_t{1} << n)) throw std::invalid_argument("boolfn: table length != 2^n");
    for (int8_t v : table_) {
        if (v != 1 && v != -1) throw std::invalid_argument("boolfn: table entries must be +-1");
    }
}

BooleanFunction BooleanFunction::constant(int n, int8_t value) {
    return BooleanFunction(n, std::vector<int8_t>(size_t{1} << n, value));
}

void BooleanFunction::set_value(Mask m, int8_t v) {
    if (v != 1 && v != -1) throw std::invalid_argument("boolfn: value must be +-1");
    table_[m] = v;
}

long BooleanFunction::table_sum() const {
    return std::accumulate(table_.begin(), table_.end(), 0L,
                           [](long a, int8_t v) { return a + v; });
}

BooleanFunction BooleanFunction::negated() const {
    std::vector<int8_t> t(table_.size());
    for (size_t m = 0; m < table_.size(); ++m) t[m] = -table_[m];
    return BooleanFunction(n_, std::move(t));
}

std::string BooleanFunction::to_hex() const {
    const size_t bits = table_.size();
    const size_t digits = (bits + 3) / 4;
    std::string out(digits, '0');
    // Bit index of mask m counted from the string's most significant bit.
    for (size_t m = 0; m < bits; ++m) {
        if (table_[m] == 1) {
            const size_t digit = m / 4;
            const int within = 3 - static_cast<int>(m % 4);
            int v = out[digit] <= '9' ? out[digit] - '0' : out[digit] - 'a' + 10;
            v |= 1 << within;
            out[digit] = static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10);
        }
    }
    return out;
}

BooleanFunction BooleanFunction::from_hex(int n, const std::string& hex) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("boolfn: arity out of [1,24]");
    const size_t bits = size_t{1} << n;
    const size_t digits = (bits + 3) / 4;
    if (hex.size() != digits) {
        throw std::invalid_argument("boolfn: hex table must have " + std::to_string(digits) +
                                    " digits for n=" + std::to_string(n));
    }
    std::vector<int8_t> table(bits);
    for (size_t d = 0; d < digits; ++d) {
        const char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("boolfn: invalid hex digit");
        for (int within = 0; within < 4; ++within) {
            const size_t m = d * 4 + static_cast<size_t>(within);
            const bool bit = (v >> (3 - within)) & 1;
            if (m < bits) {
                table[m] = bit ? 1 : -1;
            } else if (bit) {
                throw std::invalid_argument("boolfn: nonzero padding bits in hex table");
            }
        }
    }
    return BooleanFunction(n, std::move(table));
}

BooleanFunction make_majority(int n) {
    if (n % 2 == 0) throw std::invalid_argument("make_majority: n must be odd");
    if (n < 1 || n > BooleanFunction::kMaxN) throw std::invalid_argument("make_majority: arity out of range");
    const size_t sz = size_t{1} << n;
    std::vector<int8_t> t(sz);
    for (size_t m = 0; m < sz; ++m) {
        t[m] = 2 * std::popcount(static_cast<uint32_t>(m)) < n ? 1 : -1;
    }
    return BooleanFunction(n, std::move(t));
}

BooleanFunction make_dictator(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("make_dictator: coordinate out of range");
    const size_t sz = size_t{1} << n;
    std::vector<int8_t> t(sz);
    for (size_t m = 0; m < sz; ++m) {
        t[m] = static_cast<int8_t>(coord_value(static_cast<Mask>(m), i - 1));
    }
    return BooleanFunction(n, std::move(t));
}

Predicates structural_predicates(const BooleanFunction& f) {
    Predicates p;
    const size_t sz = f.size();
    const Mask full = f.full_mask();

    p.unbiased = f.table_sum() == 0;

    p.odd = true;
    for (size_t m = 0; m < sz; ++m) {
        if (f.value(static_cast<Mask>(m)) != -f.value(static_cast<Mask>(m) ^ full)) {
            p.odd = false;
            break;
        }
    }

    // Per-coordinate direction: f(x) with x_i raised from -1 to +1 means
    // clearing bit i of the mask.
    Mask must_flip = 0;
    bool unate = true;
    bool monotone = true;
    for (int i = 0; i < f.n(); ++i) {
        bool nondecreasing = true;
        bool nonincreasing = true;
        const Mask bit = Mask{1} << i;
        for (size_t m = 0; m < sz; ++m) {
            if (!(m & bit)) continue;
            const int8_t low = f.value(static_cast<Mask>(m));        // x_i = -1
            const int8_t high = f.value(static_cast<Mask>(m) ^ bit); // x_i = +1
            if (high < low) nondecreasing = false;
            if (high > low) nonincreasing = false;
            if (!nondecreasing && !nonincreasing) break;
        }
        if (!nondecreasing) monotone = false;
        if (!nondecreasing && !nonincreasing) {
            unate = false;
        } else if (!nondecreasing) {
            must_flip |= bit;  // strictly needs the flip
        }
    }
    p.monotone = monotone;
    p.unate = unate;
    if (unate) p.unate_orientation = SignFlip{must_flip};
    return p;
}

BooleanFunction apply_sign_flip(const BooleanFunction& f, SignFlip a) {
    if (a.mask > f.full_mask()) throw std::invalid_argument("apply_sign_flip: mask wider than arity");
    std::vector<int8_t> t(f.size());
    for (size_t m = 0; m < f.size(); ++m) {
        t[m] = f.value(static_cast<Mask>(m) ^ a.mask);
    }
    return BooleanFunction(f.n(), std::move(t));
}

std::pair<Rational, std::vector<Mask>> mu_and_disagreements(const BooleanFunction& f) {
    const BooleanFunction maj = make_majority(f.n());
    std::vector<Mask> disagreements;
    for (size_t m = 0; m < f.size(); ++m) {
        if (f.value(static_cast<Mask>(m)) != maj.value(static_cast<Mask>(m))) {
            disagreements.push_back(static_cast<Mask>(m));
        }
    }
    const Rational mu(static_cast<long>(disagreements.size()), static_cast<long>(f.size()));
    return {mu, std::move(disagreements)};
}

Rational first_level_gap(const BooleanFunction& f) {
    const BooleanFunction maj = make_majority(f.n());
    long acc = 0;
    for (size_t m = 0; m < f.size(); ++m) {
        const int diff = maj.value(static_cast<Mask>(m)) - f.value(static_cast<Mask>(m));
        if (diff == 0) continue;
        // sum_i x_i = n - 2 popcount(m)
        acc += static_cast<long>(f.n() - 2 * std::popcount(static_cast<uint32_t>(m))) * diff;
    }
    return Rational(acc, static_cast<long>(f.size()));
}

std::vector<long> first_level_sums(const BooleanFunction& f) {
    std::vector<long> sums(static_cast<size_t>(f.n()), 0);
    for (size_t m = 0; m < f.size(); ++m) {
        const int8_t v = f.value(static_cast<Mask>(m));
        for (int i = 0; i < f.n(); ++i) {
            sums[static_cast<size_t>(i)] += coord_value(static_cast<Mask>(m), i) * v;
        }
    }
    return sums;
}

std::pair<BooleanFunction, SignFlip> normalize_first_level(const BooleanFunction& f) {
    const auto sums = first_level_sums(f);
    Mask a = 0;
    for (int i = 0; i < f.n(); ++i) {
        if (sums[static_cast<size_t>(i)] < 0) a |= Mask{1} << i;
    }
    return {apply_sign_flip(f, SignFlip{a}), SignFlip{a}};
}

namespace {

// Entry order with -1 < +1, from mask 0 upward.
bool table_less(const std::vector<int8_t>& a, const std::vector<int8_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void min_over_flips(const BooleanFunction& f, std::vector<int8_t>& best) {
    const size_t sz = f.size();
    std::vector<int8_t> cur(sz);
    for (Mask a = 0; a < sz; ++a) {
        for (size_t m = 0; m < sz; ++m) cur[m] = f.value(static_cast<Mask>(m) ^ a);
        if (table_less(cur, best)) best = cur;
    }
}

}  // namespace

BooleanFunction canonical_form(const BooleanFunction& f, Group g) {
    std::vector<int8_t> best = f.table();
    if (g == Group::Flips) {
        min_over_flips(f, best);
        return BooleanFunction(f.n(), std::move(best));
    }
    std::vector<int> perm(static_cast<size_t>(f.n()));
    std::iota(perm.begin(), perm.end(), 0);
    const size_t sz = f.size();
    std::vector<int8_t> permuted(sz);
    do {
        for (size_t m = 0; m < sz; ++m) {
            Mask pm = 0;
            for (int i = 0; i < f.n(); ++i) {
                if (m >> i & 1) pm |= Mask{1} << perm[static_cast<size_t>(i)];
            }
            permuted[pm] = f.value(static_cast<Mask>(m));
        }
        min_over_flips(BooleanFunction(f.n(), permuted), best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BooleanFunction(f.n(), std::move(best));
}

uint64_t table_key(const BooleanFunction& f) {
    if (f.n() > 6) throw std::invalid_argument("table_key: only for n <= 6");
    uint64_t key = 0;
    for (size_t m = 0; m < f.size(); ++m) {
        if (f.value(static_cast<Mask>(m)) == 1) key |= uint64_t{1} << m;
    }
    return key;
}

BooleanFunction from_table_key(int n, uint64_t key) {
    if (n > 6) throw std::invalid_argument("from_table_key: only for n <= 6");
    std::vector<int8_t> t(size_t{1} << n);
    for (size_t m = 0; m < t.size(); ++m) t[m] = (key >> m & 1) ? 1 : -1;
    return BooleanFunction(n, std::move(t));
}

uint64_t canonical_key(const BooleanFunction& f, Group g) {
    return table_key(canonical_form(f, g));
}

}  // namespace bfx
