#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace credal {

/// Shared feasibility tolerance for validation and the LP solver.
inline constexpr double kTolerance = 1e-9;

/// Finite ordered state space. Labels are for I/O only; all numeric code
/// works on indices 0..size()-1.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);

    /// Labels "1".."n".
    static StateSpace indexed(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    /// Index of a label; throws validation_error if absent.
    std::size_t index_of(const std::string& label) const;

    bool operator==(const StateSpace&) const = default;

private:
    std::vector<std::string> labels_;
};

/// Real-valued function on the state space, stored by index.
struct Gamble {
    std::vector<double> values;

    Gamble() = default;
    explicit Gamble(std::vector<double> v) : values(std::move(v)) {}

    static Gamble constant(std::size_t n, double c);
    /// Indicator of the event encoded as a bitmask over state indices.
    static Gamble indicator(std::size_t n, std::uint32_t event);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    double min() const;
    double max() const;
    /// All entries finite.
    bool finite() const;

    bool operator==(const Gamble&) const = default;
};

Gamble operator-(const Gamble& f);
Gamble operator+(const Gamble& f, const Gamble& g);
Gamble operator-(const Gamble& f, const Gamble& g);
Gamble operator*(double a, const Gamble& f);
Gamble operator+(const Gamble& f, double c);

/// Probability mass function by index. Valid when entries are >= 0 and sum
/// to 1, both within kTolerance.
struct MassFunction {
    std::vector<double> weights;

    MassFunction() = default;
    explicit MassFunction(std::vector<double> w) : weights(std::move(w)) {}

    static MassFunction uniform(std::size_t n);

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }

    bool operator==(const MassFunction&) const = default;
};

/// Expectation of f under p. Requires matching sizes.
double expect(const MassFunction& p, const Gamble& f);

/// Total variation distance: half the L1 distance between mass functions.
double total_variation(const MassFunction& p, const MassFunction& q);

/// Chebyshev (sup) distance between gambles of equal size.
double chebyshev(const Gamble& f, const Gamble& g);

/// Componentwise probability bounds [lower[i], upper[i]] on singletons.
///
/// Proper when lower <= upper componentwise, sum(lower) <= 1 <= sum(upper).
/// Reachable when additionally each bound is attained by some mass function
/// in the set: upper[i] + sum of other lowers <= 1 and
/// lower[i] + sum of other uppers >= 1 for every i.
struct ProbabilityIntervals {
    std::vector<double> lower;
    std::vector<double> upper;

    ProbabilityIntervals() = default;
    ProbabilityIntervals(std::vector<double> lo, std::vector<double> up)
        : lower(std::move(lo)), upper(std::move(up)) {}

    std::size_t size() const { return lower.size(); }

    bool operator==(const ProbabilityIntervals&) const = default;
};

/// Finitely many upper prevision assessments E(h) <= bound. Lower
/// assessments E(h) >= c are stored in the normalized form E(-h) <= -c.
struct PrevisionConstraints {
    struct Item {
        Gamble gamble;
        double upper_bound;

        bool operator==(const Item&) const = default;
    };

    std::vector<Item> items;

    PrevisionConstraints() = default;

    void add_upper(Gamble h, double bound);
    void add_lower(Gamble h, double bound);

    std::size_t dimension() const;

    bool operator==(const PrevisionConstraints&) const = default;
};

/// The set of all mass functions; carries no dimension of its own.
struct Vacuous {
    bool operator==(const Vacuous&) const = default;
};

class CredalSpec;

/// Mixture (1-epsilon) * inner + epsilon * vacuous, epsilon in (0, 1).
struct Contaminated {
    std::shared_ptr<const CredalSpec> inner;
    double epsilon = 0.0;
};

bool operator==(const Contaminated& a, const Contaminated& b);

/// Description of a credal set: one of the supported model families.
class CredalSpec {
public:
    using Variant =
        std::variant<ProbabilityIntervals, PrevisionConstraints, MassFunction, Vacuous, Contaminated>;

    CredalSpec() : data_(Vacuous{}) {}
    explicit CredalSpec(Variant v) : data_(std::move(v)) {}

    static CredalSpec intervals(std::vector<double> lower, std::vector<double> upper);
    static CredalSpec constraints(PrevisionConstraints c);
    static CredalSpec precise(std::vector<double> mass);
    static CredalSpec vacuous();
    static CredalSpec contaminated(CredalSpec inner, double epsilon);

    const Variant& data() const { return data_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&data_);
    }

    /// Number of states, or nullopt for a dimension-free (vacuous) spec.
    std::optional<std::size_t> dimension() const;

    bool operator==(const CredalSpec& other) const { return data_ == other.data_; }

private:
    Variant data_;
};

/// Validation outcome: ok iff issues is empty.
struct Diagnostics {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
};

Diagnostics validate(const MassFunction& p);
Diagnostics validate(const ProbabilityIntervals& iv);
/// Checks interval properness and reachability, constraint feasibility
/// (via an LP phase), and contamination epsilon range.
Diagnostics validate(const CredalSpec& spec);

}  // namespace credal
