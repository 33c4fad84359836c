#include "bfx/simplex.hpp"

#include <stdexcept>

namespace bfx {

namespace {

// Dense tableau for min sum(artificials) s.t. [A, -A, -I, I] z = 1, z >= 0.
// Columns: u (v), w (v), surplus (k), artificial (k); y = u - w.
struct Tableau {
    size_t rows, cols;  // cols excludes the rhs column
    std::vector<std::vector<Rational>> t;  // rows x (cols + 1)
    std::vector<Rational> cost;            // reduced costs, cols + 1 (last = -objective)
    std::vector<size_t> basis;

    Rational& at(size_t i, size_t j) { return t[i][j]; }
    Rational& rhs(size_t i) { return t[i][cols]; }

    void pivot(size_t pr, size_t pc) {
        const Rational inv = Rational(1) / t[pr][pc];
        for (size_t j = 0; j <= cols; ++j) t[pr][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || t[i][pc].is_zero()) continue;
            const Rational factor = t[i][pc];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[pr][j];
        }
        if (!cost[pc].is_zero()) {
            const Rational factor = cost[pc];
            for (size_t j = 0; j <= cols; ++j) cost[j] -= factor * t[pr][j];
        }
        basis[pr] = pc;
    }
};

}  // namespace

std::optional<std::vector<Rational>> exact_lp_feasible(
    const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return std::vector<Rational>();
    const size_t k = rows.size();
    const size_t v = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != v) throw std::invalid_argument("lp: ragged constraint matrix");
    }

    Tableau tb;
    tb.rows = k;
    tb.cols = 2 * v + 2 * k;
    tb.t.assign(k, std::vector<Rational>(tb.cols + 1, Rational(0)));
    tb.cost.assign(tb.cols + 1, Rational(0));
    tb.basis.resize(k);

    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < v; ++j) {
            tb.at(i, j) = rows[i][j];
            tb.at(i, v + j) = -rows[i][j];
        }
        tb.at(i, 2 * v + i) = Rational(-1);      // surplus
        tb.at(i, 2 * v + k + i) = Rational(1);   // artificial
        tb.rhs(i) = Rational(1);
        tb.basis[i] = 2 * v + k + i;
    }
    // Phase-1 objective: minimize sum of artificials. Reduced costs start
    // as c_j - sum over rows of column j (artificials are basic).
    for (size_t j = 0; j < tb.cols; ++j) {
        Rational colsum(0);
        for (size_t i = 0; i < k; ++i) colsum += tb.at(i, j);
        const Rational c = j >= 2 * v + k ? Rational(1) : Rational(0);
        tb.cost[j] = c - colsum;
    }
    // The objective row stores reduced costs and, in the rhs slot, minus the
    // current objective, so the uniform pivot update applies to the whole row.
    Rational objective(0);
    for (size_t i = 0; i < k; ++i) objective += tb.rhs(i);
    tb.cost[tb.cols] = -objective;

    while (true) {
        // Bland: entering column = smallest index with negative reduced cost.
        size_t enter = tb.cols;
        for (size_t j = 0; j < tb.cols; ++j) {
            if (tb.cost[j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == tb.cols) break;  // optimal
        // Leaving row: min ratio, ties by smallest basis index.
        size_t leave = k;
        Rational best_ratio(0);
        for (size_t i = 0; i < k; ++i) {
            if (tb.at(i, enter).sign() <= 0) continue;
            const Rational ratio = tb.rhs(i) / tb.at(i, enter);
            if (leave == k || ratio < best_ratio ||
                (ratio == best_ratio && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == k) {
            // Phase-1 objective is bounded below by 0, so this cannot happen.
            throw std::logic_error("lp: phase-1 unbounded");
        }
        tb.pivot(leave, enter);
    }

    if (tb.cost[tb.cols].sign() != 0) return std::nullopt;  // residual artificials: infeasible

    std::vector<Rational> y(v, Rational(0));
    for (size_t i = 0; i < k; ++i) {
        const size_t b = tb.basis[i];
        if (b < v) {
            y[b] += tb.rhs(i);
        } else if (b < 2 * v) {
            y[b - v] -= tb.rhs(i);
        }
    }
    return y;
}

}  // namespace bfx
