#include "credal/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "credal/core.hpp"
#include "credal/errors.hpp"

namespace credal {

LinearProgram::Row& LinearProgram::add_row(std::vector<double> coefficients,
                                           Relation relation, double bound) {
    rows.push_back(Row{std::move(coefficients), relation, bound});
    return rows.back();
}

namespace {

constexpr double kPivotTol = kTolerance;

struct Tableau {
    std::size_t cols = 0;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<std::size_t> basis;  // column basic in each row
};

void pivot(Tableau& t, std::size_t r, std::size_t c) {
    const double p = t.rows[r][c];
    const double inv = 1.0 / p;
    for (double& v : t.rows[r]) v *= inv;
    t.rhs[r] *= inv;
    t.rows[r][c] = 1.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i == r) continue;
        const double factor = t.rows[i][c];
        if (factor == 0.0) continue;
        for (std::size_t j = 0; j < t.cols; ++j) t.rows[i][j] -= factor * t.rows[r][j];
        t.rhs[i] -= factor * t.rhs[r];
        t.rows[i][c] = 0.0;
    }
    t.basis[r] = c;
}

// Minimizes cost over the current basic feasible solution using Bland's
// rule: lowest-index entering column, min-ratio leaving row with ties
// broken by smallest basic column. Returns false when unbounded.
bool run_simplex(Tableau& t, const std::vector<double>& cost) {
    const std::size_t m = t.rows.size();
    const std::size_t iteration_cap = 1000 + 100 * (m + t.cols);
    std::vector<char> is_basic(t.cols, 0);
    for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
        std::fill(is_basic.begin(), is_basic.end(), 0);
        for (std::size_t i = 0; i < m; ++i) is_basic[t.basis[i]] = 1;

        std::size_t entering = t.cols;
        for (std::size_t j = 0; j < t.cols; ++j) {
            if (is_basic[j]) continue;
            double reduced = cost[j];
            for (std::size_t i = 0; i < m; ++i) reduced -= cost[t.basis[i]] * t.rows[i][j];
            if (reduced < -kPivotTol) {
                entering = j;
                break;
            }
        }
        if (entering == t.cols) return true;

        std::size_t leaving = m;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = t.rows[i][entering];
            if (a <= kPivotTol) continue;
            const double ratio = std::max(t.rhs[i], 0.0) / a;
            if (leaving == m || ratio < best_ratio - kPivotTol ||
                (ratio <= best_ratio + kPivotTol && t.basis[i] < t.basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == m) return false;
        pivot(t, leaving, entering);
    }
    throw std::logic_error("simplex iteration cap exceeded");
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, LpSense sense) {
    if (lp.variable_count == 0) throw std::invalid_argument("LP has no variables");
    if (lp.objective.size() != lp.variable_count)
        throw std::invalid_argument("objective length does not match variable count");
    for (const auto& row : lp.rows)
        if (row.coefficients.size() != lp.variable_count)
            throw std::invalid_argument("row length does not match variable count");

    const std::size_t n = lp.variable_count;
    const std::size_t m = lp.rows.size();

    // Normalize to non-negative right-hand sides.
    std::vector<LinearProgram::Row> rows = lp.rows;
    for (auto& row : rows) {
        if (row.bound >= 0.0) continue;
        for (double& v : row.coefficients) v = -v;
        row.bound = -row.bound;
        if (row.relation == LinearProgram::Relation::less_equal)
            row.relation = LinearProgram::Relation::greater_equal;
        else if (row.relation == LinearProgram::Relation::greater_equal)
            row.relation = LinearProgram::Relation::less_equal;
    }

    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& row : rows) {
        if (row.relation != LinearProgram::Relation::equal) ++slack_count;
        if (row.relation != LinearProgram::Relation::less_equal) ++artificial_count;
    }
    const std::size_t artificial_start = n + slack_count;

    Tableau t;
    t.cols = artificial_start + artificial_count;
    t.rows.assign(m, std::vector<double>(t.cols, 0.0));
    t.rhs.assign(m, 0.0);
    t.basis.assign(m, 0);

    std::size_t next_slack = n;
    std::size_t next_artificial = artificial_start;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = rows[i].coefficients[j];
        t.rhs[i] = rows[i].bound;
        switch (rows[i].relation) {
            case LinearProgram::Relation::less_equal:
                t.rows[i][next_slack] = 1.0;
                t.basis[i] = next_slack++;
                break;
            case LinearProgram::Relation::greater_equal:
                t.rows[i][next_slack++] = -1.0;
                t.rows[i][next_artificial] = 1.0;
                t.basis[i] = next_artificial++;
                break;
            case LinearProgram::Relation::equal:
                t.rows[i][next_artificial] = 1.0;
                t.basis[i] = next_artificial++;
                break;
        }
    }

    if (artificial_count > 0) {
        std::vector<double> phase1_cost(t.cols, 0.0);
        for (std::size_t j = artificial_start; j < t.cols; ++j) phase1_cost[j] = 1.0;
        run_simplex(t, phase1_cost);

        double residual = 0.0;
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            residual += phase1_cost[t.basis[i]] * t.rhs[i];
        double scale = 1.0;
        for (const auto& row : rows) scale += std::abs(row.bound);
        if (residual > kPivotTol * scale) return LpResult{LpResult::Status::infeasible, 0.0, {}};

        // Drive artificials out of the basis; rows that resist are redundant.
        for (std::size_t i = t.rows.size(); i-- > 0;) {
            if (t.basis[i] < artificial_start) continue;
            std::size_t col = artificial_start;
            for (std::size_t j = 0; j < artificial_start; ++j) {
                if (std::abs(t.rows[i][j]) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col < artificial_start) {
                pivot(t, i, col);
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        t.cols = artificial_start;
        for (auto& row : t.rows) row.resize(t.cols);
    }

    std::vector<double> phase2_cost(t.cols, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        phase2_cost[j] = sense == LpSense::maximize ? -lp.objective[j] : lp.objective[j];
    if (!run_simplex(t, phase2_cost)) return LpResult{LpResult::Status::unbounded, 0.0, {}};

    LpResult result;
    result.status = LpResult::Status::optimal;
    result.solution.assign(n, 0.0);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) result.solution[t.basis[i]] = std::max(t.rhs[i], 0.0);
    result.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * result.solution[j];
    return result;
}

}  // namespace credal
