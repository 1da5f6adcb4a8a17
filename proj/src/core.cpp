#include "credal/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "credal/errors.hpp"

namespace credal {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw validation_error("state space must be non-empty");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw validation_error("duplicate state label: " + labels_[i]);
}

StateSpace StateSpace::indexed(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return StateSpace(std::move(labels));
}

std::size_t StateSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw validation_error("unknown state label: " + label);
}

Gamble Gamble::constant(std::size_t n, double c) {
    return Gamble(std::vector<double>(n, c));
}

Gamble Gamble::indicator(std::size_t n, std::uint32_t event) {
    Gamble f(std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        if (event & (std::uint32_t{1} << i)) f[i] = 1.0;
    return f;
}

double Gamble::min() const {
    if (values.empty()) throw validation_error("empty gamble");
    return *std::min_element(values.begin(), values.end());
}

double Gamble::max() const {
    if (values.empty()) throw validation_error("empty gamble");
    return *std::max_element(values.begin(), values.end());
}

bool Gamble::finite() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

Gamble operator-(const Gamble& f) {
    Gamble g = f;
    for (double& v : g.values) v = -v;
    return g;
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b)
        throw validation_error("dimension mismatch: " + std::to_string(a) + " vs " +
                               std::to_string(b));
}

}  // namespace

Gamble operator+(const Gamble& f, const Gamble& g) {
    require_same_size(f.size(), g.size());
    Gamble h = f;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += g[i];
    return h;
}

Gamble operator-(const Gamble& f, const Gamble& g) {
    return f + (-g);
}

Gamble operator*(double a, const Gamble& f) {
    Gamble g = f;
    for (double& v : g.values) v *= a;
    return g;
}

Gamble operator+(const Gamble& f, double c) {
    Gamble g = f;
    for (double& v : g.values) v += c;
    return g;
}

MassFunction MassFunction::uniform(std::size_t n) {
    if (n == 0) throw validation_error("empty state space");
    return MassFunction(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double expect(const MassFunction& p, const Gamble& f) {
    require_same_size(p.size(), f.size());
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * f[i];
    return s;
}

double total_variation(const MassFunction& p, const MassFunction& q) {
    require_same_size(p.size(), q.size());
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

double chebyshev(const Gamble& f, const Gamble& g) {
    require_same_size(f.size(), g.size());
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s = std::max(s, std::abs(f[i] - g[i]));
    return s;
}

void PrevisionConstraints::add_upper(Gamble h, double bound) {
    items.push_back(Item{std::move(h), bound});
}

void PrevisionConstraints::add_lower(Gamble h, double bound) {
    items.push_back(Item{-h, -bound});
}

std::size_t PrevisionConstraints::dimension() const {
    return items.empty() ? 0 : items.front().gamble.size();
}

bool operator==(const Contaminated& a, const Contaminated& b) {
    if (a.epsilon != b.epsilon) return false;
    if (a.inner == b.inner) return true;
    if (!a.inner || !b.inner) return false;
    return *a.inner == *b.inner;
}

CredalSpec CredalSpec::intervals(std::vector<double> lower, std::vector<double> upper) {
    return CredalSpec(Variant{ProbabilityIntervals(std::move(lower), std::move(upper))});
}

CredalSpec CredalSpec::constraints(PrevisionConstraints c) {
    return CredalSpec(Variant{std::move(c)});
}

CredalSpec CredalSpec::precise(std::vector<double> mass) {
    return CredalSpec(Variant{MassFunction(std::move(mass))});
}

CredalSpec CredalSpec::vacuous() {
    return CredalSpec(Variant{Vacuous{}});
}

CredalSpec CredalSpec::contaminated(CredalSpec inner, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("contamination epsilon must lie in (0, 1)");
    return CredalSpec(Variant{
        Contaminated{std::make_shared<const CredalSpec>(std::move(inner)), epsilon}});
}

std::optional<std::size_t> CredalSpec::dimension() const {
    return std::visit(
        [](const auto& m) -> std::optional<std::size_t> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProbabilityIntervals>)
                return m.size();
            else if constexpr (std::is_same_v<T, PrevisionConstraints>)
                return m.dimension();
            else if constexpr (std::is_same_v<T, MassFunction>)
                return m.size();
            else if constexpr (std::is_same_v<T, Vacuous>)
                return std::nullopt;
            else
                return m.inner->dimension();
        },
        data());
}

Diagnostics validate(const MassFunction& p) {
    Diagnostics d;
    if (p.size() == 0) {
        d.issues.push_back("mass function is empty");
        return d;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isfinite(p[i])) {
            d.issues.push_back("mass[" + std::to_string(i) + "] is not finite");
            return d;
        }
        if (p[i] < -kTolerance)
            d.issues.push_back("mass[" + std::to_string(i) + "] is negative: " +
                               std::to_string(p[i]));
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > kTolerance)
        d.issues.push_back("mass does not sum to 1: " + std::to_string(sum));
    return d;
}

Diagnostics validate(const ProbabilityIntervals& iv) {
    Diagnostics d;
    if (iv.size() == 0) {
        d.issues.push_back("interval model is empty");
        return d;
    }
    if (iv.lower.size() != iv.upper.size()) {
        d.issues.push_back("interval bounds have different lengths");
        return d;
    }
    double lo_sum = 0.0, up_sum = 0.0;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        const std::string at = "[" + std::to_string(i) + "]";
        if (!std::isfinite(iv.lower[i]) || !std::isfinite(iv.upper[i])) {
            d.issues.push_back("interval" + at + " is not finite");
            return d;
        }
        if (iv.lower[i] < -kTolerance) d.issues.push_back("lower" + at + " is negative");
        if (iv.upper[i] > 1.0 + kTolerance) d.issues.push_back("upper" + at + " exceeds 1");
        if (iv.lower[i] > iv.upper[i] + kTolerance)
            d.issues.push_back("lower" + at + " exceeds upper" + at);
        lo_sum += iv.lower[i];
        up_sum += iv.upper[i];
    }
    if (lo_sum > 1.0 + kTolerance)
        d.issues.push_back("lower bounds sum above 1: " + std::to_string(lo_sum));
    if (up_sum < 1.0 - kTolerance)
        d.issues.push_back("upper bounds sum below 1: " + std::to_string(up_sum));
    if (!d.ok()) return d;
    // Reachability: every bound attained by some mass function in the set.
    for (std::size_t i = 0; i < iv.size(); ++i) {
        const std::string at = "[" + std::to_string(i) + "]";
        const double rest_lo = lo_sum - iv.lower[i];
        const double rest_up = up_sum - iv.upper[i];
        if (iv.upper[i] + rest_lo > 1.0 + kTolerance)
            d.issues.push_back("upper" + at + " unreachable: upper" + at +
                               " + remaining lower bounds exceed 1");
        if (iv.lower[i] + rest_up < 1.0 - kTolerance)
            d.issues.push_back("lower" + at + " unreachable: lower" + at +
                               " + remaining upper bounds fall below 1");
    }
    return d;
}

}  // namespace credal
