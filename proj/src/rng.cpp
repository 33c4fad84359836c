#include "bfx/rng.hpp"

#include <algorithm>
#include <numeric>

namespace bfx {

BooleanFunction random_function(int n, std::mt19937_64& rng) {
    std::vector<int8_t> t(size_t{1} << n);
    for (auto& v : t) v = (rng() & 1) ? 1 : -1;
    return BooleanFunction(n, std::move(t));
}

BooleanFunction random_unbiased(int n, std::mt19937_64& rng) {
    const size_t sz = size_t{1} << n;
    std::vector<size_t> idx(sz);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int8_t> t(sz, -1);
    for (size_t i = 0; i < sz / 2; ++i) t[idx[i]] = 1;
    return BooleanFunction(n, std::move(t));
}

Rational random_rational(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-3 * max_den, 3 * max_den);
    return Rational(num_dist(rng), den);
}

}  // namespace bfx
