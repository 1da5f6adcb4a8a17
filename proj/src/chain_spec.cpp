#include "credal/chain_spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "credal/errors.hpp"

namespace credal {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw validation_error(field + ": " + why);
}

const json& require_field(const json& obj, const std::string& field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) fail(where, "missing \"" + field + "\"");
    return *it;
}

std::vector<double> number_array(const json& node, const std::string& where,
                                 std::size_t expected) {
    if (!node.is_array()) fail(where, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) fail(where, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    if (out.size() != expected)
        fail(where, "expected " + std::to_string(expected) + " entries, got " +
                        std::to_string(out.size()));
    return out;
}

std::vector<std::vector<double>> number_matrix(const json& node, const std::string& where,
                                               std::size_t expected) {
    if (!node.is_array()) fail(where, "expected an array of rows");
    if (node.size() != expected)
        fail(where, "expected " + std::to_string(expected) + " rows, got " +
                        std::to_string(node.size()));
    std::vector<std::vector<double>> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(number_array(node[i], where + "[" + std::to_string(i) + "]", expected));
    return out;
}

CredalSpec parse_model(const json& node, const std::string& where, std::size_t n,
                       bool allow_vacuous) {
    if (!node.is_object()) fail(where, "expected an object");
    if (allow_vacuous && node.contains("vacuous")) {
        if (!node["vacuous"].is_boolean() || !node["vacuous"].get<bool>())
            fail(where + ".vacuous", "expected true");
        return CredalSpec::vacuous();
    }
    if (node.contains("mass"))
        return CredalSpec::precise(number_array(node["mass"], where + ".mass", n));
    if (node.contains("lower") || node.contains("upper")) {
        auto lower = number_array(require_field(node, "lower", where), where + ".lower", n);
        auto upper = number_array(require_field(node, "upper", where), where + ".upper", n);
        return CredalSpec::intervals(std::move(lower), std::move(upper));
    }
    if (node.contains("constraints")) {
        const json& list = node["constraints"];
        if (!list.is_array() || list.empty())
            fail(where + ".constraints", "expected a non-empty array");
        PrevisionConstraints c;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string item = where + ".constraints[" + std::to_string(i) + "]";
            const json& entry = list[i];
            if (!entry.is_object()) fail(item, "expected an object");
            Gamble h(number_array(require_field(entry, "gamble", item), item + ".gamble", n));
            const bool has_upper = entry.contains("upper");
            const bool has_lower = entry.contains("lower");
            if (has_upper == has_lower)
                fail(item, "expected exactly one of \"upper\" or \"lower\"");
            const json& bound = entry[has_upper ? "upper" : "lower"];
            if (!bound.is_number()) fail(item, "bound must be a number");
            if (has_upper)
                c.add_upper(std::move(h), bound.get<double>());
            else
                c.add_lower(std::move(h), bound.get<double>());
        }
        return CredalSpec::constraints(std::move(c));
    }
    fail(where, allow_vacuous
                    ? "expected \"lower\"/\"upper\", \"mass\", \"constraints\", or \"vacuous\""
                    : "expected \"lower\"/\"upper\", \"mass\", or \"constraints\"");
}

UpperTransitionOperator parse_transition(const json& node, std::size_t n) {
    if (!node.is_object()) fail("transition", "expected an object");
    if (node.contains("matrix"))
        return UpperTransitionOperator::from_matrix(
            number_matrix(node["matrix"], "transition.matrix", n));
    if (node.contains("lower") || node.contains("upper")) {
        auto lower = number_matrix(require_field(node, "lower", "transition"),
                                   "transition.lower", n);
        auto upper = number_matrix(require_field(node, "upper", "transition"),
                                   "transition.upper", n);
        return UpperTransitionOperator::from_interval_matrices(lower, upper);
    }
    if (node.contains("rows")) {
        const json& list = node["rows"];
        if (!list.is_array()) fail("transition.rows", "expected an array");
        if (list.size() != n)
            fail("transition.rows", "expected " + std::to_string(n) + " rows, got " +
                                        std::to_string(list.size()));
        std::vector<CredalSpec> rows;
        rows.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(
                parse_model(list[i], "transition.rows[" + std::to_string(i) + "]", n, true));
        return UpperTransitionOperator(std::move(rows));
    }
    fail("transition", "expected \"lower\"/\"upper\", \"matrix\", or \"rows\"");
}

}  // namespace

ChainSpec parse_chain_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
    if (!doc.is_object()) fail("document", "expected a JSON object");

    const json& states_node = require_field(doc, "states", "document");
    if (!states_node.is_array() || states_node.empty())
        fail("states", "expected a non-empty array of labels");
    std::vector<std::string> labels;
    labels.reserve(states_node.size());
    for (const auto& s : states_node) {
        if (!s.is_string()) fail("states", "labels must be strings");
        labels.push_back(s.get<std::string>());
    }
    StateSpace states(std::move(labels));
    const std::size_t n = states.size();
    if (n > 20) fail("states", "at most 20 states are supported");

    CredalSpec initial = parse_model(require_field(doc, "initial", "document"), "initial", n,
                                     /*allow_vacuous=*/false);
    UpperTransitionOperator transition =
        parse_transition(require_field(doc, "transition", "document"), n);

    std::vector<std::string> issues;
    for (const auto& issue : validate(initial).issues) issues.push_back("initial: " + issue);
    for (const auto& issue : transition.validate().issues)
        issues.push_back("transition " + issue);
    if (!issues.empty()) {
        std::string all = issues.front();
        for (std::size_t i = 1; i < issues.size(); ++i) all += "; " + issues[i];
        throw validation_error(all);
    }
    return ChainSpec{std::move(states), std::move(initial), std::move(transition)};
}

ChainSpec parse_chain_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_chain_spec_text(buffer.str());
}

namespace {

ordered_json model_to_json(const CredalSpec& spec, bool as_row) {
    return std::visit(
        [&](const auto& m) -> ordered_json {
            using T = std::decay_t<decltype(m)>;
            ordered_json node = ordered_json::object();
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                node["lower"] = m.lower;
                node["upper"] = m.upper;
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                node["mass"] = m.weights;
            } else if constexpr (std::is_same_v<T, PrevisionConstraints>) {
                ordered_json list = ordered_json::array();
                for (const auto& item : m.items) {
                    ordered_json entry = ordered_json::object();
                    entry["gamble"] = item.gamble.values;
                    entry["upper"] = item.upper_bound;
                    list.push_back(std::move(entry));
                }
                node["constraints"] = std::move(list);
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                if (!as_row)
                    throw unsupported_error("vacuous initial models cannot be serialized");
                node["vacuous"] = true;
            } else {
                (void)m;
                throw unsupported_error("contaminated models are runtime-only");
            }
            return node;
        },
        spec.data());
}

}  // namespace

std::string serialize_chain_spec(const ChainSpec& spec) {
    ordered_json doc = ordered_json::object();
    doc["states"] = spec.states.labels();

    doc["initial"] = model_to_json(spec.initial, /*as_row=*/false);

    const auto& rows = spec.transition.rows();
    const bool all_intervals = std::all_of(rows.begin(), rows.end(), [](const CredalSpec& r) {
        return r.get_if<ProbabilityIntervals>() != nullptr;
    });
    const bool all_precise = std::all_of(rows.begin(), rows.end(), [](const CredalSpec& r) {
        return r.get_if<MassFunction>() != nullptr;
    });
    ordered_json transition = ordered_json::object();
    if (all_intervals) {
        ordered_json lower = ordered_json::array();
        ordered_json upper = ordered_json::array();
        for (const auto& r : rows) {
            const auto* iv = r.get_if<ProbabilityIntervals>();
            lower.push_back(iv->lower);
            upper.push_back(iv->upper);
        }
        transition["lower"] = std::move(lower);
        transition["upper"] = std::move(upper);
    } else if (all_precise) {
        ordered_json matrix = ordered_json::array();
        for (const auto& r : rows) matrix.push_back(r.get_if<MassFunction>()->weights);
        transition["matrix"] = std::move(matrix);
    } else {
        ordered_json list = ordered_json::array();
        for (const auto& r : rows) list.push_back(model_to_json(r, /*as_row=*/true));
        transition["rows"] = std::move(list);
    }
    doc["transition"] = std::move(transition);
    return doc.dump(2) + "\n";
}

}  // namespace credal
