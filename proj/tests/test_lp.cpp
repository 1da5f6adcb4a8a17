#include <doctest.h>

#include "credal/lp.hpp"

using namespace credal;
using Relation = LinearProgram::Relation;
using Status = LpResult::Status;

namespace {

// Simplex over mass functions: unit-sum equality plus the given rows.
LinearProgram mass_program(std::vector<double> objective) {
    LinearProgram lp;
    lp.variable_count = objective.size();
    lp.objective = std::move(objective);
    lp.add_row(std::vector<double>(lp.variable_count, 1.0), Relation::equal, 1.0);
    return lp;
}

}  // namespace

TEST_CASE("bounded maximization") {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = {3.0, 2.0};
    lp.add_row({1.0, 1.0}, Relation::less_equal, 4.0);
    lp.add_row({1.0, 0.0}, Relation::less_equal, 2.0);

    auto res = solve_lp(lp, LpSense::maximize);
    REQUIRE(res.status == Status::optimal);
    CHECK(res.value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(res.solution[0] == doctest::Approx(2.0));
    CHECK(res.solution[1] == doctest::Approx(2.0));
}

TEST_CASE("minimization with greater-equal rows") {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = {1.0, 2.0};
    lp.add_row({1.0, 1.0}, Relation::greater_equal, 3.0);
    lp.add_row({0.0, 1.0}, Relation::greater_equal, 1.0);

    auto res = solve_lp(lp, LpSense::minimize);
    REQUIRE(res.status == Status::optimal);
    CHECK(res.value == doctest::Approx(4.0));  // x = (2, 1)
}

TEST_CASE("infeasible and unbounded programs are detected") {
    LinearProgram infeasible;
    infeasible.variable_count = 1;
    infeasible.objective = {1.0};
    infeasible.add_row({1.0}, Relation::less_equal, -1.0);  // x >= 0 makes this empty
    CHECK(solve_lp(infeasible, LpSense::maximize).status == Status::infeasible);

    LinearProgram unbounded;
    unbounded.variable_count = 2;
    unbounded.objective = {1.0, 0.0};
    unbounded.add_row({0.0, 1.0}, Relation::less_equal, 1.0);
    CHECK(solve_lp(unbounded, LpSense::maximize).status == Status::unbounded);
    // the same feasible region minimizes fine
    CHECK(solve_lp(unbounded, LpSense::minimize).status == Status::optimal);
}

TEST_CASE("equality rows bind") {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = {1.0, 1.0};
    lp.add_row({1.0, 0.0}, Relation::equal, 0.25);
    lp.add_row({1.0, 1.0}, Relation::less_equal, 1.0);

    auto res = solve_lp(lp, LpSense::maximize);
    REQUIRE(res.status == Status::optimal);
    CHECK(res.value == doctest::Approx(1.0));
    CHECK(res.solution[0] == doctest::Approx(0.25));
}

TEST_CASE("redundant equalities do not break phase one") {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = {1.0, 0.0};
    lp.add_row({1.0, 1.0}, Relation::equal, 1.0);
    lp.add_row({2.0, 2.0}, Relation::equal, 2.0);  // same hyperplane

    auto res = solve_lp(lp, LpSense::maximize);
    REQUIRE(res.status == Status::optimal);
    CHECK(res.value == doctest::Approx(1.0));
}

TEST_CASE("prevision assessments sharpen the simplex optimum") {
    // Three states; f1 = (0, 1, 0), f2 = (0.1, 1, 0), h = (1, 0.5, 0).
    // Constraints E(f1) >= 0.3 and E(f2) <= b squeeze the h-optimum to
    // 10 * (b - 0.3) + 0.15.
    auto upper_h = [](double b) {
        auto lp = mass_program({1.0, 0.5, 0.0});
        lp.add_row({0.0, 1.0, 0.0}, Relation::greater_equal, 0.3);
        lp.add_row({0.1, 1.0, 0.0}, Relation::less_equal, b);
        return solve_lp(lp, LpSense::maximize);
    };

    auto first = upper_h(0.305);
    REQUIRE(first.status == Status::optimal);
    CHECK(first.value == doctest::Approx(0.2).epsilon(1e-9));

    auto second = upper_h(0.306);
    REQUIRE(second.status == Status::optimal);
    CHECK(second.value == doctest::Approx(0.21).epsilon(1e-9));
}

TEST_CASE("solver is deterministic") {
    LinearProgram lp = mass_program({0.3, -0.2, 0.7, 0.1});
    lp.add_row({1.0, 1.0, 0.0, 0.0}, Relation::less_equal, 0.6);
    lp.add_row({0.0, 1.0, 1.0, 0.0}, Relation::greater_equal, 0.5);

    auto a = solve_lp(lp, LpSense::maximize);
    auto b = solve_lp(lp, LpSense::maximize);
    REQUIRE(a.status == Status::optimal);
    CHECK(a.value == b.value);
    CHECK(a.solution == b.solution);
}

TEST_CASE("degenerate ties terminate") {
    // Many rows active at the optimum; Bland's rule must still finish.
    LinearProgram lp;
    lp.variable_count = 3;
    lp.objective = {1.0, 1.0, 1.0};
    lp.add_row({1.0, 0.0, 0.0}, Relation::less_equal, 0.0);
    lp.add_row({0.0, 1.0, 0.0}, Relation::less_equal, 0.0);
    lp.add_row({1.0, 1.0, 0.0}, Relation::less_equal, 0.0);
    lp.add_row({0.0, 0.0, 1.0}, Relation::less_equal, 1.0);

    auto res = solve_lp(lp, LpSense::maximize);
    REQUIRE(res.status == Status::optimal);
    CHECK(res.value == doctest::Approx(1.0));
}
