#pragma once

#include <cstddef>
#include <vector>

namespace credal {

/// Dense linear program over non-negative variables.
///
/// All decision variables satisfy x >= 0 by convention; every program in
/// this library ranges over probability mass vectors. Rows may mix
/// relations. Empty objective entries are not allowed: objective.size()
/// must equal variable_count, and each row the same.
struct LinearProgram {
    enum class Relation { less_equal, equal, greater_equal };

    struct Row {
        std::vector<double> coefficients;
        Relation relation = Relation::less_equal;
        double bound = 0.0;
    };

    std::size_t variable_count = 0;
    std::vector<double> objective;
    std::vector<Row> rows;

    Row& add_row(std::vector<double> coefficients, Relation relation, double bound);
};

enum class LpSense { maximize, minimize };

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };

    Status status = Status::infeasible;
    double value = 0.0;
    std::vector<double> solution;  ///< empty unless optimal
};

/// Two-phase dense simplex with Bland's rule; deterministic for fixed
/// input. Feasibility tolerance kTolerance.
LpResult solve_lp(const LinearProgram& lp, LpSense sense);

}  // namespace credal
