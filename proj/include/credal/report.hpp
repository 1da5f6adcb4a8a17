#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "credal/chain_spec.hpp"
#include "credal/metrics.hpp"

namespace credal {

/// One numeric result in a table. Every cell carries its exactness flag;
/// clamped marks values cut at 1, infinite renders as "inf".
struct ReportCell {
    double value = 0.0;
    Exactness flag = Exactness::exact;
    bool clamped = false;
    bool infinite = false;

    static ReportCell exact(double v) { return ReportCell{v, Exactness::exact, false, false}; }
    static ReportCell inf() { return ReportCell{0.0, Exactness::exact, false, true}; }
};

/// Named single value shown above the grid; numeric when cell is set,
/// free text otherwise.
struct ScalarEntry {
    std::string name;
    std::optional<ReportCell> cell;
    std::string text;
};

struct ReportRow {
    std::string name;
    std::vector<std::optional<ReportCell>> cells;  ///< one per column; nullopt renders "-"
    std::string note;
};

struct ReportTable {
    std::string title;
    std::vector<ScalarEntry> scalars;
    std::vector<std::string> columns;
    std::vector<ReportRow> rows;
    std::vector<std::string> footnotes;
};

/// Fixed-width text rendering. Lower-bound cells are suffixed "*",
/// clamped cells "†"; both are explained in footnotes when present.
std::string render_text(const ReportTable& table);

/// One record per scalar and per cell: name,column,value,flag,clamped.
std::string render_csv(const ReportTable& table);

/// The full table as a JSON document.
std::string render_json(const ReportTable& table);

/// Event bitmask as a set of state labels, e.g. "{2,3}".
std::string format_event(const StateSpace& states, std::uint32_t event);

/// Ergodicity, imprecision, and n-step bounds of one chain.
ReportTable cmd_analyze(const ChainSpec& chain, const std::vector<long>& steps,
                        const std::string& title = "chain analysis");

/// Which contraction profile drives the theoretical rows of a comparison.
struct ProfileChoice {
    enum class Source { self, perturbed, user };
    Source source = Source::perturbed;
    ErgodicityProfile user_profile;  ///< used when source == user
};

/// Measured distances and perturbation bounds between two chains.
ReportTable cmd_compare(const ChainSpec& a, const ChainSpec& b, const std::vector<long>& steps,
                        const ProfileChoice& profile = {},
                        const std::string& title = "chain comparison");

/// Contamination effects and bounds for one chain.
ReportTable cmd_contaminate(const ChainSpec& chain, double eps, const std::vector<long>& steps,
                            const std::string& title = "contamination analysis");

/// Recomputation of a bundled worked example against its published
/// reference values.
struct ReproduceResult {
    ReportTable table;
    bool all_passed = false;
};

ReproduceResult cmd_reproduce(const std::string& which);

}  // namespace credal
