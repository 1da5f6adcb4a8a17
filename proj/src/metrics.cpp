#include "credal/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "credal/errors.hpp"
#include "credal/extension.hpp"

namespace credal {

namespace {

constexpr std::size_t kMaxSweepStates = 20;

std::uint32_t full_mask(std::size_t n) {
    return (std::uint32_t{1} << n) - 1;
}

std::size_t resolve_dimension(const CredalSpec& spec, std::optional<std::size_t> n) {
    auto dim = spec.dimension();
    if (dim && n && *dim != *n)
        throw std::invalid_argument("explicit dimension conflicts with the spec");
    if (dim) return *dim;
    if (n) return *n;
    throw std::invalid_argument("dimension-free spec: supply the state count");
}

std::size_t resolve_dimension(const CredalSpec& a, const CredalSpec& b,
                              std::optional<std::size_t> n) {
    auto da = a.dimension();
    auto db = b.dimension();
    if (da && db && *da != *db)
        throw std::invalid_argument("specs live on different state spaces");
    if (da) return resolve_dimension(a, n);
    if (db) return resolve_dimension(b, n);
    if (n) return *n;
    throw std::invalid_argument("dimension-free specs: supply the state count");
}

void check_sweepable(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty state space");
    if (n > kMaxSweepStates)
        throw unsupported_error("event sweep limited to " + std::to_string(kMaxSweepStates) +
                                " states");
}

std::vector<std::vector<double>> multiply(const std::vector<std::vector<double>>& a,
                                          const std::vector<std::vector<double>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

std::vector<std::vector<double>> matrix_power(std::vector<std::vector<double>> m, long e) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> result(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = 1.0;
    while (e > 0) {
        if (e & 1) result = multiply(result, m);
        m = multiply(m, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

double dobrushin(const std::vector<std::vector<double>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw validation_error("empty matrix");
    for (std::size_t x = 0; x < n; ++x) {
        if (matrix[x].size() != n) throw validation_error("matrix is not square");
        Diagnostics d = validate(MassFunction(matrix[x]));
        if (!d.ok())
            throw validation_error("row " + std::to_string(x) + " is not stochastic: " +
                                   d.issues.front());
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += std::abs(matrix[x][j] - matrix[y][j]);
            worst = std::max(worst, 0.5 * s);
        }
    return worst;
}

bool is_two_monotone_induced(const CredalSpec& spec) {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PrevisionConstraints>)
                return false;
            else if constexpr (std::is_same_v<T, Contaminated>)
                return is_two_monotone_induced(*m.inner);
            else
                return true;
        },
        spec.data());
}

std::vector<double> upper_event_values(const CredalSpec& spec, std::optional<std::size_t> n) {
    const std::size_t dim = resolve_dimension(spec, n);
    check_sweepable(dim);
    const std::uint32_t all = full_mask(dim);
    std::vector<double> out(std::size_t{1} << dim, 0.0);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                for (std::uint32_t a = 0; a <= all; ++a) out[a] = interval_upper_event(m, a);
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                for (std::uint32_t a = 0; a <= all; ++a) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < dim; ++i)
                        if (a & (std::uint32_t{1} << i)) s += m[i];
                    out[a] = s;
                }
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                for (std::uint32_t a = 1; a <= all; ++a) out[a] = 1.0;
            } else if constexpr (std::is_same_v<T, Contaminated>) {
                out = upper_event_values(*m.inner, dim);
                for (std::uint32_t a = 0; a <= all; ++a)
                    out[a] = (1.0 - m.epsilon) * out[a] + (a ? m.epsilon : 0.0);
            } else {
                (void)m;
                for (std::uint32_t a = 0; a <= all; ++a)
                    out[a] = upper_natural_extension(spec, Gamble::indicator(dim, a));
            }
        },
        spec.data());
    return out;
}

std::vector<double> lower_event_values(const CredalSpec& spec, std::optional<std::size_t> n) {
    const std::size_t dim = resolve_dimension(spec, n);
    check_sweepable(dim);
    const std::uint32_t all = full_mask(dim);
    std::vector<double> out(std::size_t{1} << dim, 0.0);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                for (std::uint32_t a = 0; a <= all; ++a) out[a] = interval_lower_event(m, a);
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                for (std::uint32_t a = 0; a <= all; ++a) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < dim; ++i)
                        if (a & (std::uint32_t{1} << i)) s += m[i];
                    out[a] = s;
                }
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                out[all] = 1.0;
            } else if constexpr (std::is_same_v<T, Contaminated>) {
                out = lower_event_values(*m.inner, dim);
                for (std::uint32_t a = 0; a <= all; ++a)
                    out[a] = (1.0 - m.epsilon) * out[a] + (a == all ? m.epsilon : 0.0);
            } else {
                (void)m;
                for (std::uint32_t a = 0; a <= all; ++a)
                    out[a] = lower_natural_extension(spec, Gamble::indicator(dim, a));
            }
        },
        spec.data());
    return out;
}

EventMax distance_over_events(const CredalSpec& a, const CredalSpec& b,
                              std::optional<std::size_t> n) {
    const std::size_t dim = resolve_dimension(a, b, n);
    check_sweepable(dim);
    const std::vector<double> ua = upper_event_values(a, dim);
    const std::vector<double> ub = upper_event_values(b, dim);
    EventMax best;
    best.exactness = is_two_monotone_induced(a) && is_two_monotone_induced(b)
                         ? Exactness::exact
                         : Exactness::event_lower_bound;
    for (std::uint32_t mask = 0; mask < ua.size(); ++mask) {
        const double v = std::abs(ua[mask] - ub[mask]);
        if (v > best.value) {
            best.value = v;
            best.event = mask;
        }
    }
    return best;
}

double distance_two_monotone(const CredalSpec& a, const CredalSpec& b,
                             std::optional<std::size_t> n) {
    if (!is_two_monotone_induced(a) || !is_two_monotone_induced(b))
        throw unsupported_error(
            "event sweep is only exact for 2-monotone induced specs; "
            "use the lower-bound variant");
    return distance_over_events(a, b, n).value;
}

FlaggedValue distance_event_lower_bound(const CredalSpec& a, const CredalSpec& b,
                                        std::optional<std::size_t> n) {
    const EventMax m = distance_over_events(a, b, n);
    return FlaggedValue{m.value, m.exactness};
}

EventMax imprecision_over_events(const CredalSpec& spec, std::optional<std::size_t> n) {
    const std::size_t dim = resolve_dimension(spec, n);
    check_sweepable(dim);
    const std::vector<double> up = upper_event_values(spec, dim);
    const std::vector<double> lo = lower_event_values(spec, dim);
    EventMax best;
    for (std::uint32_t mask = 0; mask < up.size(); ++mask) {
        const double v = up[mask] - lo[mask];
        if (v > best.value) {
            best.value = v;
            best.event = mask;
        }
    }
    return best;
}

double imprecision(const CredalSpec& spec, std::optional<std::size_t> n) {
    return imprecision_over_events(spec, n).value;
}

FlaggedValue operator_distance(const UpperTransitionOperator& a,
                               const UpperTransitionOperator& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("operators live on different state spaces");
    FlaggedValue out;
    for (std::size_t x = 0; x < a.size(); ++x) {
        const EventMax row = distance_over_events(a.row(x), b.row(x), a.size());
        out.value = std::max(out.value, row.value);
        if (row.exactness == Exactness::event_lower_bound)
            out.exactness = Exactness::event_lower_bound;
    }
    return out;
}

double operator_imprecision(const UpperTransitionOperator& t) {
    double out = 0.0;
    for (std::size_t x = 0; x < t.size(); ++x)
        out = std::max(out, imprecision(t.row(x), t.size()));
    return out;
}

double weak_ergodicity_coefficient(const UpperTransitionOperator& t) {
    double out = 0.0;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = x + 1; y < t.size(); ++y)
            out = std::max(out, distance_two_monotone(t.row(x), t.row(y), t.size()));
    return out;
}

namespace {

bool all_rows_precise(const UpperTransitionOperator& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
        if (!t.row(x).get_if<MassFunction>()) return false;
    return true;
}

bool all_rows_two_monotone(const UpperTransitionOperator& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
        if (!is_two_monotone_induced(t.row(x))) return false;
    return true;
}

double spread(const Gamble& g) {
    return g.max() - g.min();
}

}  // namespace

FlaggedValue weak_ergodicity_n(const UpperTransitionOperator& t, long r) {
    if (r < 1) throw std::invalid_argument("step count must be positive");
    check_sweepable(t.size());

    if (all_rows_precise(t)) {
        std::vector<std::vector<double>> m;
        m.reserve(t.size());
        for (std::size_t x = 0; x < t.size(); ++x)
            m.push_back(t.row(x).get_if<MassFunction>()->weights);
        return FlaggedValue{dobrushin(matrix_power(std::move(m), r)), Exactness::exact};
    }

    const bool two_monotone = all_rows_two_monotone(t);
    if (r == 1 && two_monotone)
        return FlaggedValue{weak_ergodicity_coefficient(t), Exactness::exact};

    const std::uint32_t all = full_mask(t.size());
    double swept = 0.0;
    for (std::uint32_t mask = 1; mask < all; ++mask)
        swept = std::max(swept, spread(iterate_upper(t, Gamble::indicator(t.size(), mask), r)));
    if (two_monotone) {
        // r-step coefficient never exceeds the one-step coefficient to the
        // r-th power; use it to absorb sweep roundoff.
        const double cap = std::pow(weak_ergodicity_coefficient(t), static_cast<double>(r));
        swept = std::min(swept, cap);
    }
    return FlaggedValue{std::min(swept, 1.0), Exactness::event_lower_bound};
}

namespace {

// Superset of the extreme points of a row's credal set.
std::vector<MassFunction> row_vertices(const CredalSpec& spec, std::size_t n) {
    return std::visit(
        [&](const auto& m) -> std::vector<MassFunction> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>) {
                return credal_vertices(m);
            } else if constexpr (std::is_same_v<T, MassFunction>) {
                return {m};
            } else if constexpr (std::is_same_v<T, Vacuous>) {
                std::vector<MassFunction> out;
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<double> p(n, 0.0);
                    p[j] = 1.0;
                    out.push_back(MassFunction(std::move(p)));
                }
                return out;
            } else if constexpr (std::is_same_v<T, Contaminated>) {
                std::vector<MassFunction> inner = row_vertices(*m.inner, n);
                std::vector<MassFunction> out;
                out.reserve(inner.size() * n);
                for (const auto& p : inner)
                    for (std::size_t j = 0; j < n; ++j) {
                        std::vector<double> q(n);
                        for (std::size_t i = 0; i < n; ++i) q[i] = (1.0 - m.epsilon) * p[i];
                        q[j] += m.epsilon;
                        out.push_back(MassFunction(std::move(q)));
                    }
                return out;
            } else {
                throw unsupported_error(
                    "vertex enumeration is not available for constraint rows");
            }
        },
        spec.data());
}

}  // namespace

double uniform_ergodicity_coefficient(const UpperTransitionOperator& t) {
    if (t.size() > 5)
        throw unsupported_error("uniform coefficient limited to 5 states");
    std::vector<std::vector<MassFunction>> vertices;
    vertices.reserve(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) vertices.push_back(row_vertices(t.row(x), t.size()));

    // The Dobrushin coefficient of a compatible matrix is a max over row
    // pairs; rows vary independently, so the worst case decomposes into
    // pairwise vertex comparisons.
    double out = 0.0;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = x + 1; y < t.size(); ++y)
            for (const auto& p : vertices[x])
                for (const auto& q : vertices[y]) out = std::max(out, total_variation(p, q));
    return out;
}

FlaggedValue nstep_distribution_distance(const CredalSpec& initial_a,
                                         const UpperTransitionOperator& a,
                                         const CredalSpec& initial_b,
                                         const UpperTransitionOperator& b, long n) {
    if (n < 0) throw std::invalid_argument("step count must be non-negative");
    if (a.size() != b.size())
        throw std::invalid_argument("operators live on different state spaces");
    if (n == 0) return distance_event_lower_bound(initial_a, initial_b, a.size());
    check_sweepable(a.size());
    const std::uint32_t all = full_mask(a.size());
    double worst = 0.0;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
        const Gamble ind = Gamble::indicator(a.size(), mask);
        const double ua = upper_natural_extension(initial_a, iterate_upper(a, ind, n));
        const double ub = upper_natural_extension(initial_b, iterate_upper(b, ind, n));
        worst = std::max(worst, std::abs(ua - ub));
    }
    return FlaggedValue{worst, Exactness::event_lower_bound};
}

FlaggedValue nstep_operator_distance(const UpperTransitionOperator& a,
                                     const UpperTransitionOperator& b, long n) {
    if (n < 1) throw std::invalid_argument("step count must be positive");
    if (a.size() != b.size())
        throw std::invalid_argument("operators live on different state spaces");
    if (n == 1) return operator_distance(a, b);
    check_sweepable(a.size());
    const std::uint32_t all = full_mask(a.size());
    double worst = 0.0;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
        const Gamble ind = Gamble::indicator(a.size(), mask);
        const Gamble ga = iterate_upper(a, ind, n);
        const Gamble gb = iterate_upper(b, ind, n);
        worst = std::max(worst, chebyshev(ga, gb));
    }
    return FlaggedValue{worst, Exactness::event_lower_bound};
}

double nstep_imprecision(const CredalSpec& initial, const UpperTransitionOperator& t, long n) {
    if (n < 0) throw std::invalid_argument("step count must be non-negative");
    if (n == 0) return imprecision(initial, t.size());
    check_sweepable(t.size());
    const std::uint32_t all = full_mask(t.size());
    double worst = 0.0;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
        const Gamble ind = Gamble::indicator(t.size(), mask);
        const double up = upper_natural_extension(initial, iterate_upper(t, ind, n));
        const double lo = lower_natural_extension(initial, iterate_lower(t, ind, n));
        worst = std::max(worst, up - lo);
    }
    return worst;
}

ConvergenceResult convergence_check(const UpperTransitionOperator& t, long r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be positive");
    ConvergenceResult result;
    for (long r = 1; r <= r_max; ++r) {
        const FlaggedValue fv = weak_ergodicity_n(t, r);
        result.profile = ErgodicityProfile{r, fv.value, fv.exactness};
        if (fv.value < 1.0) {
            if (fv.exactness == Exactness::exact) {
                result.certified_r = r;
                result.verdict = Convergence::converges;
            }
            return result;
        }
    }
    result.verdict = Convergence::unknown;
    return result;
}

}  // namespace credal
