#include <doctest.h>

#include <stdexcept>
#include <string>

#include "credal/chain_spec.hpp"
#include "credal/errors.hpp"
#include "test_helpers.hpp"

using namespace credal;

namespace {

std::string message_of(const std::exception& e) { return e.what(); }

template <class E, class F>
std::string capture(F&& fn) {
    try {
        fn();
    } catch (const E& e) {
        return message_of(e);
    }
    FAIL("expected exception was not thrown");
    return {};
}

}  // namespace

TEST_CASE("bundled fixtures parse and validate") {
    auto chain = fixtures::load("example1");
    CHECK(chain.states.labels() == std::vector<std::string>{"1", "2", "3"});

    const auto* iv = chain.initial.get_if<ProbabilityIntervals>();
    REQUIRE(iv != nullptr);
    CHECK(iv->lower == std::vector<double>{0.33, 0.25, 0.25});
    CHECK(iv->upper == std::vector<double>{0.38, 0.38, 0.42});
    CHECK(chain.transition.size() == 3);

    auto perturbed = fixtures::load("example52");
    const auto* piv = perturbed.initial.get_if<ProbabilityIntervals>();
    REQUIRE(piv != nullptr);
    CHECK(piv->lower == std::vector<double>{0.32, 0.21, 0.28});

    CHECK_THROWS_AS(fixtures::load("example99"), std::invalid_argument);
}

TEST_CASE("fixture files and embedded texts agree") {
    for (const char* name : {"example1", "example52"}) {
        auto embedded = parse_chain_spec_text(std::string(fixtures::text(name)));
        auto from_file = parse_chain_spec(std::string(CREDAL_FIXTURE_DIR "/") + name + ".json");
        CHECK(embedded == from_file);
    }
}

TEST_CASE("serialization round-trips every supported family") {
    // interval transition + interval initial
    auto interval_chain = fixtures::load("example1");
    CHECK(parse_chain_spec_text(serialize_chain_spec(interval_chain)) == interval_chain);

    // precise matrix + precise initial
    ChainSpec precise{StateSpace::indexed(2), CredalSpec::precise({0.4, 0.6}),
                      UpperTransitionOperator::from_matrix({{0.5, 0.5}, {0.1, 0.9}})};
    CHECK(parse_chain_spec_text(serialize_chain_spec(precise)) == precise);

    // mixed rows: intervals, mass, vacuous, constraints
    PrevisionConstraints c;
    c.add_upper(Gamble{{1.0, 0.0, 0.0}}, 0.6);
    c.add_lower(Gamble{{0.0, 1.0, 0.0}}, 0.1);
    std::vector<CredalSpec> rows;
    rows.push_back(CredalSpec::intervals({0.2, 0.2, 0.2}, {0.6, 0.6, 0.6}));
    rows.push_back(CredalSpec::vacuous());
    rows.push_back(CredalSpec::constraints(c));
    ChainSpec mixed{StateSpace{{"a", "b", "c"}}, CredalSpec::precise({0.3, 0.3, 0.4}),
                    UpperTransitionOperator{std::move(rows)}};
    CHECK(parse_chain_spec_text(serialize_chain_spec(mixed)) == mixed);
}

TEST_CASE("contaminated models cannot be serialized") {
    auto chain = fixtures::load("example1");
    ChainSpec contaminated{chain.states,
                           CredalSpec::contaminated(chain.initial, 0.1), chain.transition};
    CHECK_THROWS_AS(serialize_chain_spec(contaminated), unsupported_error);

    ChainSpec vacuous_initial{chain.states, CredalSpec::vacuous(), chain.transition};
    CHECK_THROWS_AS(serialize_chain_spec(vacuous_initial), unsupported_error);
}

TEST_CASE("malformed documents raise parse errors") {
    CHECK_THROWS_AS(parse_chain_spec_text("{ not json"), parse_error);
    CHECK_THROWS_AS(parse_chain_spec_text(""), parse_error);
    CHECK_THROWS_AS(parse_chain_spec("/nonexistent/chain.json"), parse_error);
}

TEST_CASE("schema violations name the offending field") {
    auto msg = capture<validation_error>(
        [] { parse_chain_spec_text(R"({"states": ["a", "b"]})"); });
    CHECK(msg.find("initial") != std::string::npos);

    msg = capture<validation_error>([] {
        parse_chain_spec_text(R"({
            "states": ["a", "b"],
            "initial": {"mass": [0.5, 0.5]},
            "transition": {"lower": [[0.1, 0.1], [0.1, 0.1]],
                           "upper": [[0.9, 0.9], [0.9]]}
        })");
    });
    CHECK(msg.find("transition.upper[1]") != std::string::npos);

    msg = capture<validation_error>([] {
        parse_chain_spec_text(R"({
            "states": ["a", "a"],
            "initial": {"mass": [0.5, 0.5]},
            "transition": {"matrix": [[0.5, 0.5], [0.5, 0.5]]}
        })");
    });
    CHECK(msg.find("state label") != std::string::npos);

    // one constraint item must carry exactly one bound
    msg = capture<validation_error>([] {
        parse_chain_spec_text(R"({
            "states": ["a", "b"],
            "initial": {"constraints": [{"gamble": [1.0, 0.0], "upper": 0.6, "lower": 0.2}]},
            "transition": {"matrix": [[0.5, 0.5], [0.5, 0.5]]}
        })");
    });
    CHECK(msg.find("constraints") != std::string::npos);
}

TEST_CASE("model violations are reported after parsing") {
    // unreachable intervals in the initial model
    CHECK_THROWS_AS(parse_chain_spec_text(R"({
        "states": ["a", "b", "c"],
        "initial": {"lower": [0.33, 0.25, 0.25], "upper": [0.38, 0.38, 0.43]},
        "transition": {"matrix": [[0.5, 0.5, 0.0], [0.2, 0.3, 0.5], [0.1, 0.2, 0.7]]}
    })"),
                    validation_error);

    // non-stochastic precise row
    CHECK_THROWS_AS(parse_chain_spec_text(R"({
        "states": ["a", "b"],
        "initial": {"mass": [0.5, 0.5]},
        "transition": {"matrix": [[0.6, 0.6], [0.5, 0.5]]}
    })"),
                    validation_error);
}

TEST_CASE("vacuous rows parse from their explicit marker") {
    auto chain = parse_chain_spec_text(R"({
        "states": ["a", "b"],
        "initial": {"mass": [0.5, 0.5]},
        "transition": {"rows": [{"vacuous": true}, {"mass": [0.2, 0.8]}]}
    })");
    CHECK(chain.transition.row(0).get_if<Vacuous>() != nullptr);
    CHECK(chain.transition.row(1).get_if<MassFunction>() != nullptr);
    CHECK(parse_chain_spec_text(serialize_chain_spec(chain)) == chain);
}

TEST_CASE("constraint rows normalize lower assessments on parse") {
    auto chain = parse_chain_spec_text(R"({
        "states": ["a", "b"],
        "initial": {"constraints": [{"gamble": [1.0, 0.0], "lower": 0.2}]},
        "transition": {"matrix": [[0.5, 0.5], [0.5, 0.5]]}
    })");

    PrevisionConstraints expected;
    expected.add_lower(Gamble{{1.0, 0.0}}, 0.2);
    CHECK(chain.initial == CredalSpec::constraints(expected));
}

TEST_CASE("state count is capped") {
    std::string labels;
    for (int i = 0; i < 21; ++i) {
        if (i > 0) labels += ", ";
        labels += "\"s" + std::to_string(i) + "\"";
    }
    const std::string doc = R"({"states": [)" + labels +
                            R"(], "initial": {"mass": []}, "transition": {"matrix": []}})";
    CHECK_THROWS_AS(parse_chain_spec_text(doc), validation_error);
}
