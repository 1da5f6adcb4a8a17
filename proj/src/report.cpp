#include "credal/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "credal/bounds.hpp"
#include "credal/errors.hpp"
#include "credal/extension.hpp"

namespace credal {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string cell_text(const ReportCell& c) {
    if (c.infinite) return "inf";
    std::string s = fmt_double(c.value);
    if (c.flag == Exactness::event_lower_bound) s += "*";
    if (c.clamped) s += "†";
    return s;
}

// Byte length minus the extra bytes of the dagger, which displays as one
// column.
std::size_t display_width(const std::string& s) {
    std::size_t extra = 0;
    for (std::string::size_type pos = 0; (pos = s.find("†", pos)) != std::string::npos;
         pos += 3)
        extra += 2;
    return s.size() - extra;
}

std::string pad_right(const std::string& s, std::size_t width) {
    std::string out = s;
    const std::size_t w = display_width(s);
    if (w < width) out.append(width - w, ' ');
    return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    std::string out;
    if (w < width) out.append(width - w, ' ');
    return out + s;
}

ReportCell flagged_cell(const FlaggedValue& fv) {
    return ReportCell{fv.value, fv.exactness, false, false};
}

ReportCell bound_cell(const BoundValue& b) {
    return ReportCell{b.value, Exactness::exact, b.clamped, false};
}

const char* flag_name(Exactness e) {
    return e == Exactness::exact ? "exact" : "lower_bound";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<long> effective_steps(const std::vector<long>& steps) {
    if (steps.empty()) return {1, 2, 3};
    for (long n : steps)
        if (n < 0) throw std::invalid_argument("steps must be non-negative");
    return steps;
}

}  // namespace

std::string render_text(const ReportTable& table) {
    std::string out = "== " + table.title + " ==\n";

    if (!table.scalars.empty()) {
        out += "\n";
        std::size_t wname = 0;
        for (const auto& s : table.scalars) wname = std::max(wname, display_width(s.name));
        for (const auto& s : table.scalars) {
            out += pad_right(s.name, wname) + " : ";
            out += s.cell ? cell_text(*s.cell) : s.text;
            out += "\n";
        }
    }

    if (!table.rows.empty()) {
        out += "\n";
        std::size_t wname = 0;
        for (const auto& r : table.rows) wname = std::max(wname, display_width(r.name));
        std::vector<std::size_t> wcol(table.columns.size());
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            wcol[j] = display_width(table.columns[j]);
            for (const auto& r : table.rows)
                if (j < r.cells.size() && r.cells[j])
                    wcol[j] = std::max(wcol[j], display_width(cell_text(*r.cells[j])));
        }
        out += pad_right("", wname);
        for (std::size_t j = 0; j < table.columns.size(); ++j)
            out += "  " + pad_left(table.columns[j], wcol[j]);
        out += "\n";
        for (const auto& r : table.rows) {
            out += pad_right(r.name, wname);
            for (std::size_t j = 0; j < table.columns.size(); ++j) {
                const std::string text =
                    j < r.cells.size() && r.cells[j] ? cell_text(*r.cells[j]) : "-";
                out += "  " + pad_left(text, wcol[j]);
            }
            if (!r.note.empty()) out += "  " + r.note;
            out += "\n";
        }
    }

    if (!table.footnotes.empty()) {
        out += "\n";
        for (const auto& f : table.footnotes) out += "note: " + f + "\n";
    }
    return out;
}

std::string render_csv(const ReportTable& table) {
    std::string out = "row,column,value,flag,clamped\n";
    auto emit = [&](const std::string& row, const std::string& column, const ReportCell& c) {
        out += csv_field(row) + "," + csv_field(column) + ",";
        out += c.infinite ? "inf" : fmt_double(c.value);
        out += ",";
        out += flag_name(c.flag);
        out += ",";
        out += c.clamped ? "1" : "0";
        out += "\n";
    };
    for (const auto& s : table.scalars) {
        if (s.cell) {
            emit(s.name, "", *s.cell);
        } else {
            out += csv_field(s.name) + ",," + csv_field(s.text) + ",,\n";
        }
    }
    for (const auto& r : table.rows)
        for (std::size_t j = 0; j < table.columns.size(); ++j)
            if (j < r.cells.size() && r.cells[j]) emit(r.name, table.columns[j], *r.cells[j]);
    return out;
}

std::string render_json(const ReportTable& table) {
    using nlohmann::ordered_json;
    auto cell_json = [](const ReportCell& c) -> ordered_json {
        ordered_json node = ordered_json::object();
        if (c.infinite)
            node["value"] = "inf";
        else
            node["value"] = c.value;
        node["flag"] = flag_name(c.flag);
        node["clamped"] = c.clamped;
        return node;
    };
    ordered_json doc = ordered_json::object();
    doc["title"] = table.title;
    ordered_json scalars = ordered_json::array();
    for (const auto& s : table.scalars) {
        ordered_json node = ordered_json::object();
        node["name"] = s.name;
        if (s.cell)
            node["cell"] = cell_json(*s.cell);
        else
            node["text"] = s.text;
        scalars.push_back(std::move(node));
    }
    doc["scalars"] = std::move(scalars);
    doc["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& r : table.rows) {
        ordered_json node = ordered_json::object();
        node["name"] = r.name;
        ordered_json cells = ordered_json::array();
        for (const auto& c : r.cells) {
            if (c)
                cells.push_back(cell_json(*c));
            else
                cells.push_back(nullptr);
        }
        node["cells"] = std::move(cells);
        if (!r.note.empty()) node["note"] = r.note;
        rows.push_back(std::move(node));
    }
    doc["rows"] = std::move(rows);
    doc["footnotes"] = table.footnotes;
    return doc.dump(2) + "\n";
}

std::string format_event(const StateSpace& states, std::uint32_t event) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!(event & (std::uint32_t{1} << i))) continue;
        if (!first) out += ",";
        out += states.label(i);
        first = false;
    }
    return out + "}";
}

namespace {

void add_scalar(ReportTable& table, const std::string& name, const ReportCell& cell) {
    table.scalars.push_back(ScalarEntry{name, cell, {}});
}

void add_scalar_text(ReportTable& table, const std::string& name, const std::string& text) {
    table.scalars.push_back(ScalarEntry{name, std::nullopt, text});
}

void note_unverified_profile(ReportTable& table) {
    table.footnotes.push_back(
        "warning: the contraction coefficient is an unverified event lower bound; "
        "theoretical rows use it anyway and may understate the true bound");
}

constexpr long kConvergenceSearchDepth = 5;

}  // namespace

ReportTable cmd_analyze(const ChainSpec& chain, const std::vector<long>& steps_in,
                        const std::string& title) {
    const std::vector<long> steps = effective_steps(steps_in);
    const auto& t = chain.transition;
    const std::size_t n = t.size();

    ReportTable table;
    table.title = title;

    const FlaggedValue rho = weak_ergodicity_n(t, 1);
    add_scalar(table, "contraction coefficient rho", flagged_cell(rho));
    try {
        add_scalar(table, "uniform coefficient",
                   ReportCell::exact(uniform_ergodicity_coefficient(t)));
    } catch (const unsupported_error& e) {
        add_scalar_text(table, "uniform coefficient", std::string("unavailable: ") + e.what());
    }
    const ConvergenceResult conv = convergence_check(t, kConvergenceSearchDepth);
    if (conv.verdict == Convergence::converges) {
        add_scalar_text(table, "convergence",
                        "unique limit: contraction certificate at r=" +
                            std::to_string(*conv.certified_r) + " with coefficient " +
                            fmt_double(conv.profile.rho));
    } else {
        add_scalar_text(table, "convergence",
                        "unknown: no exact contraction certificate up to r=" +
                            std::to_string(kConvergenceSearchDepth));
    }
    const double i0 = imprecision(chain.initial, n);
    const double ihat = operator_imprecision(t);
    add_scalar(table, "initial imprecision", ReportCell::exact(i0));
    add_scalar(table, "operator imprecision", ReportCell::exact(ihat));

    const ErgodicityProfile profile{1, rho.value, rho.exactness};
    const bool allow = profile.flag != Exactness::exact;
    if (allow) note_unverified_profile(table);
    const bool has_limit = profile.rho < 1.0;

    for (long s : steps) table.columns.push_back("n=" + std::to_string(s));
    if (has_limit) table.columns.push_back("inf");
    const std::size_t ncols = table.columns.size();

    std::vector<MassBounds> mb;
    mb.reserve(steps.size());
    for (long s : steps) mb.push_back(nstep_mass_bounds(chain.initial, t, s));

    for (std::size_t j = 0; j < n; ++j) {
        ReportRow lo{"lower mass " + chain.states.label(j), {}, {}};
        ReportRow up{"upper mass " + chain.states.label(j), {}, {}};
        for (std::size_t s = 0; s < steps.size(); ++s) {
            lo.cells.push_back(ReportCell::exact(mb[s].lower[j]));
            up.cells.push_back(ReportCell::exact(mb[s].upper[j]));
        }
        lo.cells.resize(ncols);
        up.cells.resize(ncols);
        table.rows.push_back(std::move(lo));
        table.rows.push_back(std::move(up));
    }

    ReportRow imp_measured{"imprecision (measured)", {}, {}};
    for (long s : steps)
        imp_measured.cells.push_back(ReportCell::exact(nstep_imprecision(chain.initial, t, s)));
    imp_measured.cells.resize(ncols);
    table.rows.push_back(std::move(imp_measured));

    PerturbationInputs inputs;
    inputs.profile = profile;
    inputs.initial_imprecision = i0;
    inputs.operator_imprecision = ihat;
    ReportRow imp_bound{"imprecision (bound)", {}, {}};
    for (long s : steps) imp_bound.cells.push_back(bound_cell(imprecision_bound(inputs, s, allow)));
    if (has_limit) imp_bound.cells.push_back(bound_cell(imprecision_bound_limit(inputs, allow)));
    table.rows.push_back(std::move(imp_bound));

    table.footnotes.push_back("cells marked * are event lower bounds; cells marked † "
                              "are clamped at 1");
    return table;
}

ReportTable cmd_compare(const ChainSpec& a, const ChainSpec& b, const std::vector<long>& steps_in,
                        const ProfileChoice& choice, const std::string& title) {
    if (a.transition.size() != b.transition.size())
        throw std::invalid_argument("chains live on different state spaces");
    const std::vector<long> steps = effective_steps(steps_in);
    const std::size_t n = a.transition.size();

    ReportTable table;
    table.title = title;
    if (!(a.states == b.states))
        table.footnotes.push_back("state labels differ; states are matched by position");

    const FlaggedValue e0 = distance_event_lower_bound(a.initial, b.initial, n);
    const FlaggedValue d1 = operator_distance(a.transition, b.transition);
    const FlaggedValue rho_a = weak_ergodicity_n(a.transition, 1);
    const FlaggedValue rho_b = weak_ergodicity_n(b.transition, 1);

    add_scalar(table, "initial distance", flagged_cell(e0));
    add_scalar(table, "operator distance", flagged_cell(d1));
    add_scalar(table, "rho (first chain)", flagged_cell(rho_a));
    add_scalar(table, "rho (second chain)", flagged_cell(rho_b));

    ErgodicityProfile profile;
    std::string profile_text;
    switch (choice.source) {
        case ProfileChoice::Source::self:
            profile = ErgodicityProfile{1, rho_a.value, rho_a.exactness};
            profile_text = "first chain";
            break;
        case ProfileChoice::Source::perturbed:
            profile = ErgodicityProfile{1, rho_b.value, rho_b.exactness};
            profile_text = "second chain";
            break;
        case ProfileChoice::Source::user:
            profile = choice.user_profile;
            profile_text = "user supplied";
            break;
    }
    add_scalar_text(table, "bound profile",
                    profile_text + ", r=" + std::to_string(profile.r) +
                        ", rho=" + fmt_double(profile.rho));

    const bool allow = profile.flag != Exactness::exact;
    if (allow) note_unverified_profile(table);
    if (e0.exactness != Exactness::exact || d1.exactness != Exactness::exact)
        table.footnotes.push_back(
            "warning: measured distances feeding the bounds are event lower bounds; "
            "theoretical rows may understate the true bound");
    const bool has_limit = profile.rho < 1.0;

    for (long s : steps) table.columns.push_back("n=" + std::to_string(s));
    if (has_limit) table.columns.push_back("inf");
    const std::size_t ncols = table.columns.size();

    ReportRow dist_measured{"distribution distance (measured)", {}, {}};
    for (long s : steps)
        dist_measured.cells.push_back(
            flagged_cell(nstep_distribution_distance(a.initial, a.transition, b.initial,
                                                     b.transition, s)));
    dist_measured.cells.resize(ncols);
    table.rows.push_back(std::move(dist_measured));

    PerturbationInputs inputs;
    inputs.initial_distance = e0.value;
    inputs.operator_distance = d1.value;
    inputs.profile = profile;
    ReportRow dist_bound{"distribution distance (bound)", {}, {}};
    for (long s : steps)
        dist_bound.cells.push_back(bound_cell(distribution_error_bound(inputs, s, allow)));
    if (has_limit)
        dist_bound.cells.push_back(bound_cell(distribution_error_bound_limit(inputs, allow)));
    table.rows.push_back(std::move(dist_bound));

    ReportRow op_measured{"operator distance (measured)", {}, {}};
    for (long s : steps)
        op_measured.cells.push_back(
            s == 0 ? ReportCell::exact(0.0)
                   : flagged_cell(nstep_operator_distance(a.transition, b.transition, s)));
    op_measured.cells.resize(ncols);
    table.rows.push_back(std::move(op_measured));

    ReportRow op_bound{"operator distance (bound)", {}, {}};
    for (long s : steps)
        op_bound.cells.push_back(bound_cell(operator_error_bound(d1.value, s, profile, allow)));
    if (has_limit)
        op_bound.cells.push_back(bound_cell(operator_error_bound_limit(d1.value, profile, allow)));
    table.rows.push_back(std::move(op_bound));

    table.footnotes.push_back("cells marked * are event lower bounds; cells marked † "
                              "are clamped at 1");
    return table;
}

ReportTable cmd_contaminate(const ChainSpec& chain, double eps, const std::vector<long>& steps_in,
                            const std::string& title) {
    const std::vector<long> steps = effective_steps(steps_in);
    const ContaminationMetrics m = contamination_metrics(chain.initial, chain.transition, eps);
    const CredalSpec ci = contaminate_functional(chain.initial, eps);
    const UpperTransitionOperator ct = contaminate_operator(chain.transition, eps);

    ReportTable table;
    table.title = title;
    add_scalar(table, "epsilon", ReportCell::exact(m.epsilon));
    add_scalar(table, "distance initial to vacuous", ReportCell::exact(m.vacuous_distance_initial));
    add_scalar(table, "distance operator to vacuous",
               ReportCell::exact(m.vacuous_distance_operator));
    add_scalar(table, "initial contamination distance", ReportCell::exact(m.spec_distance));
    add_scalar(table, "operator contamination distance", ReportCell::exact(m.operator_distance));
    add_scalar(table, "pair distance scale", ReportCell::exact(m.pair_scale));
    add_scalar(table, "rho", ReportCell::exact(m.rho));
    add_scalar(table, "rho (contaminated)", ReportCell::exact(m.contaminated_rho));
    add_scalar(table, "initial imprecision", ReportCell::exact(m.initial_imprecision));
    add_scalar(table, "initial imprecision (contaminated)",
               ReportCell::exact(m.contaminated_imprecision));
    add_scalar(table, "operator imprecision", ReportCell::exact(m.operator_imprecision));
    add_scalar(table, "operator imprecision (contaminated)",
               ReportCell::exact(m.contaminated_operator_imprecision));

    for (long s : steps) table.columns.push_back("n=" + std::to_string(s));
    table.columns.push_back("inf");  // the contaminated coefficient is always below 1
    const std::size_t ncols = table.columns.size();

    ReportRow dist_measured{"distribution distance (measured)", {}, {}};
    for (long s : steps)
        dist_measured.cells.push_back(flagged_cell(
            nstep_distribution_distance(chain.initial, chain.transition, ci, ct, s)));
    dist_measured.cells.resize(ncols);
    table.rows.push_back(std::move(dist_measured));

    ReportRow dist_bound{"distribution distance (bound)", {}, {}};
    for (long s : steps)
        dist_bound.cells.push_back(bound_cell(contamination_bounds(m, s).distribution_error));
    dist_bound.cells.push_back(bound_cell(contamination_bounds_limit(m).distribution_error));
    table.rows.push_back(std::move(dist_bound));

    ReportRow imp_measured{"imprecision of contaminated chain (measured)", {}, {}};
    for (long s : steps)
        imp_measured.cells.push_back(ReportCell::exact(nstep_imprecision(ci, ct, s)));
    imp_measured.cells.resize(ncols);
    table.rows.push_back(std::move(imp_measured));

    ReportRow imp_bound{"imprecision of contaminated chain (bound)", {}, {}};
    for (long s : steps)
        imp_bound.cells.push_back(bound_cell(contamination_bounds(m, s).imprecision));
    imp_bound.cells.push_back(bound_cell(contamination_bounds_limit(m).imprecision));
    table.rows.push_back(std::move(imp_bound));

    table.footnotes.push_back("cells marked * are event lower bounds; cells marked † "
                              "are clamped at 1");
    return table;
}

namespace {

struct ReferenceRow {
    std::string name;
    double computed = 0.0;
    Exactness flag = Exactness::exact;
    double reference = 0.0;
    double tolerance = 0.0;
    // A known mismatch between the published value and the recomputation;
    // reported, but not counted as a failure.
    std::string discrepancy;
};

void push_reference_rows(ReportTable& table, bool& all_passed,
                         const std::vector<ReferenceRow>& rows) {
    for (const auto& r : rows) {
        ReportRow row{r.name, {}, {}};
        row.cells.push_back(ReportCell{r.computed, r.flag, false, false});
        row.cells.push_back(ReportCell::exact(r.reference));
        const double diff = std::abs(r.computed - r.reference);
        if (!r.discrepancy.empty()) {
            row.note = "documented discrepancy: " + r.discrepancy;
        } else if (diff <= r.tolerance) {
            row.note = "pass";
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "FAIL (diff %.2e, tol %.0e)", diff, r.tolerance);
            row.note = buf;
            all_passed = false;
        }
        table.rows.push_back(std::move(row));
    }
}

constexpr double kMassTol = 5e-4;
constexpr double kFigureTol = 5e-5;
constexpr double kExactTol = 1e-9;

ReproduceResult reproduce_example1() {
    const ChainSpec chain = fixtures::load("example1");
    ReproduceResult result;
    result.all_passed = true;
    result.table.title = "reproduction: example1";
    result.table.columns = {"computed", "reference"};

    const MassBounds mb = nstep_mass_bounds(chain.initial, chain.transition, 3);
    const EventBoundMatrices eb = nstep_event_bounds(chain.transition, 3);

    const std::vector<double> ref_lower_mass = {0.1966, 0.2672, 0.1513};
    const std::vector<double> ref_upper_mass = {0.5293, 0.5799, 0.3903};
    const std::vector<std::vector<double>> ref_lower_tr = {
        {0.2195, 0.2500, 0.1040}, {0.2195, 0.2583, 0.1533}, {0.1650, 0.3067, 0.2205}};
    const std::vector<std::vector<double>> ref_upper_tr = {
        {0.5898, 0.5992, 0.3350}, {0.5383, 0.5730, 0.4175}, {0.4239, 0.5609, 0.4175}};

    std::vector<ReferenceRow> rows;
    for (std::size_t j = 0; j < 3; ++j)
        rows.push_back({"3-step lower mass " + chain.states.label(j), mb.lower[j],
                        Exactness::exact, ref_lower_mass[j], kMassTol, {}});
    for (std::size_t j = 0; j < 3; ++j)
        rows.push_back({"3-step upper mass " + chain.states.label(j), mb.upper[j],
                        Exactness::exact, ref_upper_mass[j], kMassTol, {}});
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t j = 0; j < 3; ++j)
            rows.push_back({"3-step lower transition " + chain.states.label(x) + "->" +
                                chain.states.label(j),
                            eb.lower[x][j], Exactness::exact, ref_lower_tr[x][j], kMassTol, {}});
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t j = 0; j < 3; ++j)
            rows.push_back({"3-step upper transition " + chain.states.label(x) + "->" +
                                chain.states.label(j),
                            eb.upper[x][j], Exactness::exact, ref_upper_tr[x][j], kMassTol, {}});
    push_reference_rows(result.table, result.all_passed, rows);

    result.table.footnotes.push_back("reference values are published to four decimals; "
                                     "tolerance 5e-4");
    return result;
}

ReproduceResult reproduce_example52() {
    const ChainSpec a = fixtures::load("example1");
    const ChainSpec b = fixtures::load("example52");
    ReproduceResult result;
    result.all_passed = true;
    result.table.title = "reproduction: example52";
    result.table.columns = {"computed", "reference"};

    const FlaggedValue rho_a = weak_ergodicity_n(a.transition, 1);
    const FlaggedValue rho_b = weak_ergodicity_n(b.transition, 1);
    const FlaggedValue d1 = operator_distance(a.transition, b.transition);
    const FlaggedValue e0 =
        distance_event_lower_bound(a.initial, b.initial, a.transition.size());

    std::vector<ReferenceRow> rows;
    rows.push_back({"rho (first chain)", rho_a.value, rho_a.exactness, 0.67, kExactTol, {}});
    rows.push_back({"rho (second chain)", rho_b.value, rho_b.exactness, 0.60, kExactTol, {}});
    rows.push_back({"operator distance", d1.value, d1.exactness, 0.05, kExactTol, {}});
    rows.push_back({"initial distance", e0.value, e0.exactness, 0.0248, kExactTol,
                    "the published initial distance 0.0248 is not reproduced by the event "
                    "sweep, which gives " +
                        fmt_double(e0.value)});

    // Theoretical rows evaluate the bound formulas with the published
    // inputs (initial distance 0.0248, operator distance 0.05, rho 0.60).
    const PerturbationInputs published{0.0248, 0.05,
                                       ErgodicityProfile{1, 0.60, Exactness::exact},
                                       std::nullopt, std::nullopt};
    const std::vector<std::pair<long, double>> dist_bound_refs = {
        {1, 0.0740}, {2, 0.0889}, {3, 0.1034}};
    for (const auto& [n, ref] : dist_bound_refs) {
        const BoundValue bv = distribution_error_bound(published, n);
        ReferenceRow row{"distribution error bound n=" + std::to_string(n), bv.value,
                         Exactness::exact, ref, kFigureTol, {}};
        if (n == 1)
            row.discrepancy =
                "the published cell 0.0740 matches the formula only with the measured "
                "initial distance " +
                fmt_double(e0.value) + "; the published inputs give " + fmt_double(bv.value);
        rows.push_back(std::move(row));
    }
    rows.push_back({"distribution error bound limit",
                    distribution_error_bound_limit(published).value, Exactness::exact, 0.1250,
                    kFigureTol, {}});

    const std::vector<std::pair<long, double>> dist_measured_refs = {
        {1, 0.0248}, {2, 0.0387}, {3, 0.0429}};
    for (const auto& [n, ref] : dist_measured_refs) {
        const FlaggedValue fv =
            nstep_distribution_distance(a.initial, a.transition, b.initial, b.transition, n);
        rows.push_back({"distribution distance measured n=" + std::to_string(n), fv.value,
                        fv.exactness, ref, kFigureTol, {}});
    }

    const std::vector<std::pair<long, double>> op_bound_refs = {
        {2, 0.0800}, {3, 0.0980}, {4, 0.1088}};
    for (const auto& [n, ref] : op_bound_refs)
        rows.push_back({"operator error bound n=" + std::to_string(n),
                        operator_error_bound(0.05, n, published.profile).value, Exactness::exact,
                        ref, kFigureTol, {}});
    rows.push_back({"operator error bound limit",
                    operator_error_bound_limit(0.05, published.profile).value, Exactness::exact,
                    0.1250, kFigureTol, {}});

    const std::vector<std::pair<long, double>> op_measured_refs = {
        {2, 0.0454}, {3, 0.0499}, {4, 0.0484}};
    for (const auto& [n, ref] : op_measured_refs) {
        const FlaggedValue fv = nstep_operator_distance(a.transition, b.transition, n);
        rows.push_back({"operator distance measured n=" + std::to_string(n), fv.value,
                        fv.exactness, ref, kFigureTol, {}});
    }

    push_reference_rows(result.table, result.all_passed, rows);
    result.table.footnotes.push_back(
        "theoretical rows evaluate the bound formulas with the published inputs");
    result.table.footnotes.push_back(
        "rows marked as documented discrepancies reflect known inconsistencies in the "
        "published figures and do not fail the reproduction");
    return result;
}

}  // namespace

ReproduceResult cmd_reproduce(const std::string& which) {
    if (which == "example1") return reproduce_example1();
    if (which == "example52") return reproduce_example52();
    throw std::invalid_argument("unknown reproduction target: " + which +
                                " (expected example1 or example52)");
}

}  // namespace credal
