#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfx/rational.hpp"

namespace bfx {

// Index convention (the single source of truth for the whole repo):
// a point x in {-1,+1}^n is encoded as a bitmask m where bit i of m set
// means x_{i+1} = -1 (bit 0 is coordinate 1). popcount(m) therefore counts
// the -1 coordinates, which makes Majority a popcount comparison.
using Mask = uint32_t;

inline int coord_value(Mask m, int i) { return (m >> i) & 1u ? -1 : +1; }

// Sign-flip action a in {-1,+1}^n, stored as the bitmask of coordinates
// with a_i = -1. Applying it maps f(x) to f(x ^ a).
struct SignFlip {
    Mask mask = 0;
};

struct Predicates {
    bool unbiased = false;
    bool odd = false;
    bool monotone = false;
    bool unate = false;
    std::optional<SignFlip> unate_orientation;  // smallest flip mask making f monotone
};

enum class Group { Flips, FlipsPerms };

class BooleanFunction {
  public:
    static constexpr int kMaxN = 24;

    BooleanFunction(int n, std::vector<int8_t> table);
    static BooleanFunction constant(int n, int8_t value);

    int n() const { return n_; }
    size_t size() const { return table_.size(); }
    int8_t value(Mask m) const { return table_[m]; }
    const std::vector<int8_t>& table() const { return table_; }
    Mask full_mask() const { return static_cast<Mask>(size() - 1); }

    void set_value(Mask m, int8_t v);

    long table_sum() const;

    BooleanFunction negated() const;

    // Hex serialization: bit 1 means value +1; mask 0 is the most
    // significant bit of the string; width is ceil(2^n / 4) digits.
    std::string to_hex() const;
    static BooleanFunction from_hex(int n, const std::string& hex);

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

  private:
    int n_;
    std::vector<int8_t> table_;
};

BooleanFunction make_majority(int n);
BooleanFunction make_dictator(int n, int i);  // 1-based coordinate

Predicates structural_predicates(const BooleanFunction& f);

BooleanFunction apply_sign_flip(const BooleanFunction& f, SignFlip a);

// mu_f = |E_f| / 2^n and the sorted set E_f of masks where f differs from
// Majority. Requires odd n.
std::pair<Rational, std::vector<Mask>> mu_and_disagreements(const BooleanFunction& f);

// sum_i E[x_i (Maj_n(x) - f(x))], exact. Requires odd n.
Rational first_level_gap(const BooleanFunction& f);

// 2^n * E[x_i f(x)] for each coordinate, as plain integers.
std::vector<long> first_level_sums(const BooleanFunction& f);

// Flips every coordinate whose first-level coefficient is negative, making
// them all nonnegative. Returns the normalized function and the flip used.
std::pair<BooleanFunction, SignFlip> normalize_first_level(const BooleanFunction& f);

// Lexicographically minimal table over the orbit of the group action
// (entries compared from mask 0 up, -1 < +1).
BooleanFunction canonical_form(const BooleanFunction& f, Group g);

// Compact orbit key for n <= 6: bit m set means f(m) = +1, compared as an
// integer. Used for dedup in the enumeration pipelines.
uint64_t canonical_key(const BooleanFunction& f, Group g);
uint64_t table_key(const BooleanFunction& f);
BooleanFunction from_table_key(int n, uint64_t key);

}  // namespace bfx
