#include "credal/extension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "credal/errors.hpp"
#include "credal/lp.hpp"

namespace credal {

namespace {

constexpr std::size_t kMaxSweepStates = 20;

std::uint32_t full_mask(std::size_t n) {
    return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

}  // namespace

SetFunction::SetFunction(Kind kind, std::size_t states, std::vector<double> values)
    : kind_(kind), states_(states), values_(std::move(values)) {
    if (states_ == 0) throw validation_error("set function needs at least one state");
    if (states_ > kMaxSweepStates)
        throw unsupported_error("set function table limited to " +
                                std::to_string(kMaxSweepStates) + " states");
    if (values_.size() != (std::size_t{1} << states_))
        throw validation_error("set function table must have one entry per subset");
}

double SetFunction::value(std::uint32_t event) const {
    if (event > full_mask(states_)) throw std::invalid_argument("event mask out of range");
    if (!flipped_) return values_[event];
    return 1.0 - values_[event ^ full_mask(states_)];
}

std::vector<double> SetFunction::materialize() const {
    std::vector<double> out(subsets());
    for (std::uint32_t a = 0; a < out.size(); ++a) out[a] = value(a);
    return out;
}

SetFunction SetFunction::conjugate() const {
    SetFunction out = *this;
    out.kind_ = kind_ == Kind::lower ? Kind::upper : Kind::lower;
    out.flipped_ = !flipped_;
    return out;
}

Diagnostics SetFunction::validate() const {
    Diagnostics d;
    const std::uint32_t all = full_mask(states_);
    if (std::abs(value(0)) > kTolerance)
        d.issues.push_back("value on the empty event is not 0");
    if (std::abs(value(all) - 1.0) > kTolerance)
        d.issues.push_back("value on the full event is not 1");
    for (std::uint32_t a = 0; a <= all; ++a) {
        const double v = value(a);
        if (!std::isfinite(v) || v < -kTolerance || v > 1.0 + kTolerance) {
            d.issues.push_back("value outside [0, 1] at event mask " + std::to_string(a));
            break;
        }
    }
    for (std::uint32_t a = 0; a <= all; ++a) {
        for (std::size_t i = 0; i < states_; ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (a & bit) continue;
            if (value(a) > value(a | bit) + kTolerance) {
                d.issues.push_back("not monotone: event mask " + std::to_string(a) +
                                   " exceeds its superset " + std::to_string(a | bit));
                return d;
            }
        }
    }
    return d;
}

bool SetFunction::operator==(const SetFunction& other) const {
    if (kind_ != other.kind_ || states_ != other.states_) return false;
    if (flipped_ == other.flipped_) return values_ == other.values_;
    return materialize() == other.materialize();
}

double interval_lower_event(const ProbabilityIntervals& iv, std::uint32_t event) {
    double inside_lower = 0.0, outside_upper = 0.0;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        if (event & (std::uint32_t{1} << i))
            inside_lower += iv.lower[i];
        else
            outside_upper += iv.upper[i];
    }
    return std::max(inside_lower, 1.0 - outside_upper);
}

double interval_upper_event(const ProbabilityIntervals& iv, std::uint32_t event) {
    double inside_upper = 0.0, outside_lower = 0.0;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        if (event & (std::uint32_t{1} << i))
            inside_upper += iv.upper[i];
        else
            outside_lower += iv.lower[i];
    }
    return std::min(inside_upper, 1.0 - outside_lower);
}

SetFunction lower_set_function(const ProbabilityIntervals& iv) {
    const std::size_t n = iv.size();
    if (n > kMaxSweepStates)
        throw unsupported_error("interval model too large for a set-function table");
    std::vector<double> values(std::size_t{1} << n);
    for (std::uint32_t a = 0; a < values.size(); ++a) values[a] = interval_lower_event(iv, a);
    return SetFunction(SetFunction::Kind::lower, n, std::move(values));
}

bool check_two_monotone(const SetFunction& sf) {
    if (sf.states() > 12)
        throw unsupported_error("pairwise event check limited to 12 states");
    const std::vector<double> v = sf.materialize();
    const std::uint32_t all = full_mask(sf.states());
    for (std::uint32_t a = 0; a <= all; ++a) {
        for (std::uint32_t b = a + 1; b <= all; ++b) {
            const double joined = v[a | b] + v[a & b];
            const double split = v[a] + v[b];
            if (sf.kind() == SetFunction::Kind::lower) {
                if (joined < split - kTolerance) return false;
            } else {
                if (joined > split + kTolerance) return false;
            }
        }
    }
    return true;
}

namespace {

// Level-set decomposition shared by both Choquet directions.
double choquet(const SetFunction& sf, const Gamble& f) {
    if (f.size() != sf.states())
        throw std::invalid_argument("gamble size does not match set function");
    if (!f.finite()) throw validation_error("gamble has non-finite entries");
    std::vector<double> levels = f.values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double total = levels.front();
    for (std::size_t k = 1; k < levels.size(); ++k) {
        std::uint32_t event = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] >= levels[k]) event |= std::uint32_t{1} << i;
        total += (levels[k] - levels[k - 1]) * sf.value(event);
    }
    return total;
}

}  // namespace

double choquet_upper(const SetFunction& sf, const Gamble& f) {
    if (sf.kind() != SetFunction::Kind::upper)
        throw std::invalid_argument("choquet_upper expects an upper set function");
    return choquet(sf, f);
}

double choquet_lower(const SetFunction& sf, const Gamble& f) {
    if (sf.kind() != SetFunction::Kind::lower)
        throw std::invalid_argument("choquet_lower expects a lower set function");
    return choquet(sf, f);
}

namespace {

// Choquet closed form against the interval upper bounds, without building
// the 2^n table.
double interval_upper_expectation(const ProbabilityIntervals& iv, const Gamble& f) {
    if (f.size() != iv.size())
        throw std::invalid_argument("gamble size does not match interval model");
    std::vector<double> levels = f.values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double total = levels.front();
    for (std::size_t k = 1; k < levels.size(); ++k) {
        std::uint32_t event = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] >= levels[k]) event |= std::uint32_t{1} << i;
        total += (levels[k] - levels[k - 1]) * interval_upper_event(iv, event);
    }
    return total;
}

LinearProgram simplex_base(std::size_t n, const Gamble& objective) {
    LinearProgram lp;
    lp.variable_count = n;
    lp.objective = objective.values;
    lp.add_row(std::vector<double>(n, 1.0), LinearProgram::Relation::equal, 1.0);
    return lp;
}

double lp_upper_expectation(const ProbabilityIntervals& iv, const Gamble& f) {
    LinearProgram lp = simplex_base(iv.size(), f);
    for (std::size_t i = 0; i < iv.size(); ++i) {
        std::vector<double> unit(iv.size(), 0.0);
        unit[i] = 1.0;
        lp.add_row(unit, LinearProgram::Relation::less_equal, iv.upper[i]);
        lp.add_row(std::move(unit), LinearProgram::Relation::greater_equal, iv.lower[i]);
    }
    LpResult r = solve_lp(lp, LpSense::maximize);
    if (r.status == LpResult::Status::infeasible)
        throw validation_error("interval model describes an empty credal set");
    if (r.status != LpResult::Status::optimal)
        throw std::logic_error("bounded extension program reported unbounded");
    return r.value;
}

double lp_upper_expectation(const PrevisionConstraints& c, const Gamble& f) {
    if (c.items.empty()) return f.max();
    const std::size_t n = c.dimension();
    if (f.size() != n)
        throw std::invalid_argument("gamble size does not match constraint set");
    LinearProgram lp = simplex_base(n, f);
    for (const auto& item : c.items) {
        if (item.gamble.size() != n)
            throw validation_error("constraint gambles have mixed dimensions");
        lp.add_row(item.gamble.values, LinearProgram::Relation::less_equal, item.upper_bound);
    }
    LpResult r = solve_lp(lp, LpSense::maximize);
    if (r.status == LpResult::Status::infeasible)
        throw validation_error("constraints describe an empty credal set");
    if (r.status != LpResult::Status::optimal)
        throw std::logic_error("bounded extension program reported unbounded");
    return r.value;
}

}  // namespace

double upper_natural_extension(const CredalSpec& spec, const Gamble& f, Backend backend) {
    if (f.size() == 0) throw std::invalid_argument("empty gamble");
    if (!f.finite()) throw validation_error("gamble has non-finite entries");
    if (auto dim = spec.dimension(); dim && *dim != f.size())
        throw std::invalid_argument("gamble size does not match credal spec");

    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                if (backend == Backend::lp) return lp_upper_expectation(m, f);
                return interval_upper_expectation(m, f);
            } else if constexpr (std::is_same_v<T, PrevisionConstraints>) {
                if (backend == Backend::choquet)
                    throw unsupported_error(
                        "Choquet evaluation is only exact for interval models");
                return lp_upper_expectation(m, f);
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                return expect(m, f);
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                return f.max();
            } else {
                return (1.0 - m.epsilon) * upper_natural_extension(*m.inner, f, backend) +
                       m.epsilon * f.max();
            }
        },
        spec.data());
}

double lower_natural_extension(const CredalSpec& spec, const Gamble& f, Backend backend) {
    return -upper_natural_extension(spec, -f, backend);
}

std::vector<MassFunction> credal_vertices(const ProbabilityIntervals& iv) {
    const std::size_t n = iv.size();
    if (n == 0) throw validation_error("interval model is empty");
    if (n > 8) throw unsupported_error("vertex enumeration limited to 8 states");

    // Vertices of the core of a 2-monotone lower probability: marginal
    // allocations along every insertion order of the states.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    std::vector<MassFunction> out;
    do {
        std::vector<double> p(n, 0.0);
        std::uint32_t placed = 0;
        double prev = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            placed |= std::uint32_t{1} << order[k];
            const double cur = interval_lower_event(iv, placed);
            p[order[k]] = cur - prev;
            prev = cur;
        }
        out.push_back(MassFunction(std::move(p)));
    } while (std::next_permutation(order.begin(), order.end()));

    std::sort(out.begin(), out.end(),
              [](const MassFunction& a, const MassFunction& b) { return a.weights < b.weights; });
    auto near = [](const MassFunction& a, const MassFunction& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-12) return false;
        return true;
    };
    out.erase(std::unique(out.begin(), out.end(), near), out.end());
    return out;
}

Diagnostics validate(const CredalSpec& spec) {
    return std::visit(
        [](const auto& m) -> Diagnostics {
            using T = std::decay_t<decltype(m)>;
            Diagnostics d;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                return validate(m);
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                return validate(m);
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                return d;
            } else if constexpr (std::is_same_v<T, Contaminated>) {
                if (!m.inner) {
                    d.issues.push_back("contaminated model has no inner spec");
                    return d;
                }
                if (!(m.epsilon > 0.0 && m.epsilon < 1.0))
                    d.issues.push_back("contamination epsilon outside (0, 1)");
                Diagnostics inner = validate(*m.inner);
                d.issues.insert(d.issues.end(), inner.issues.begin(), inner.issues.end());
                return d;
            } else {
                if (m.items.empty()) {
                    d.issues.push_back("constraint set is empty");
                    return d;
                }
                const std::size_t n = m.dimension();
                for (std::size_t i = 0; i < m.items.size(); ++i) {
                    const auto& item = m.items[i];
                    if (item.gamble.size() != n)
                        d.issues.push_back("constraint[" + std::to_string(i) +
                                           "] gamble has mismatched dimension");
                    else if (!item.gamble.finite() || !std::isfinite(item.upper_bound))
                        d.issues.push_back("constraint[" + std::to_string(i) +
                                           "] has non-finite entries");
                }
                if (!d.ok()) return d;
                LinearProgram lp = simplex_base(n, Gamble::constant(n, 0.0));
                for (const auto& item : m.items)
                    lp.add_row(item.gamble.values, LinearProgram::Relation::less_equal,
                               item.upper_bound);
                if (solve_lp(lp, LpSense::maximize).status == LpResult::Status::infeasible)
                    d.issues.push_back("constraints are infeasible: no mass function satisfies them");
                return d;
            }
        },
        spec.data());
}

}  // namespace credal
