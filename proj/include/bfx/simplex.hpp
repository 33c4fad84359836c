#pragma once

#include <optional>
#include <vector>

#include "bfx/rational.hpp"

namespace bfx {

// Exact-rational phase-1 simplex deciding feasibility of A y >= 1 over free
// variables y. Returns a witness y on success, nullopt when infeasible.
// Bland's pivot rule throughout: degenerate vertices do occur on these
// instances and anti-cycling is mandatory.
std::optional<std::vector<Rational>> exact_lp_feasible(
    const std::vector<std::vector<Rational>>& rows);

}  // namespace bfx
