#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "credal/bounds.hpp"
#include "credal/chain.hpp"
#include "credal/chain_spec.hpp"
#include "credal/core.hpp"
#include "credal/errors.hpp"
#include "credal/extension.hpp"
#include "credal/lp.hpp"
#include "credal/metrics.hpp"
#include "credal/report.hpp"

namespace py = pybind11;

namespace {

const char* flag_name(credal::Exactness e) {
    return e == credal::Exactness::exact ? "exact" : "event_lower_bound";
}

py::tuple flagged(const credal::FlaggedValue& fv) {
    return py::make_tuple(fv.value, flag_name(fv.exactness));
}

py::tuple bound(const credal::BoundValue& b) {
    return py::make_tuple(b.value, b.raw, b.clamped);
}

credal::Gamble as_gamble(const std::vector<double>& values) {
    return credal::Gamble(values);
}

credal::ErgodicityProfile profile_of(long r, double rho) {
    return credal::ErgodicityProfile{r, rho, credal::Exactness::exact};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Imprecise Markov chains: natural extensions, transition operators, "
              "ergodicity metrics, and perturbation bounds";

    py::register_exception<credal::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<credal::validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<credal::unsupported_error>(m, "UnsupportedError",
                                                      PyExc_NotImplementedError);

    py::enum_<credal::Backend>(m, "Backend")
        .value("automatic", credal::Backend::automatic)
        .value("lp", credal::Backend::lp)
        .value("choquet", credal::Backend::choquet);

    py::class_<credal::CredalSpec>(m, "CredalSpec")
        .def_static("intervals",
                    [](std::vector<double> lower, std::vector<double> upper) {
                        return credal::CredalSpec::intervals(std::move(lower), std::move(upper));
                    },
                    py::arg("lower"), py::arg("upper"))
        .def_static("precise",
                    [](std::vector<double> mass) {
                        return credal::CredalSpec::precise(std::move(mass));
                    },
                    py::arg("mass"))
        .def_static("vacuous", &credal::CredalSpec::vacuous)
        .def_static(
            "constraints",
            [](const std::vector<std::pair<std::vector<double>, double>>& upper,
               const std::vector<std::pair<std::vector<double>, double>>& lower) {
                credal::PrevisionConstraints c;
                for (const auto& [g, b] : upper) c.add_upper(as_gamble(g), b);
                for (const auto& [g, b] : lower) c.add_lower(as_gamble(g), b);
                return credal::CredalSpec::constraints(std::move(c));
            },
            py::arg("upper"),
            py::arg("lower") = std::vector<std::pair<std::vector<double>, double>>{})
        .def("contaminated",
             [](const credal::CredalSpec& spec, double eps) {
                 return credal::contaminate_functional(spec, eps);
             },
             py::arg("eps"))
        .def_property_readonly("dimension",
                               [](const credal::CredalSpec& spec) -> py::object {
                                   auto d = spec.dimension();
                                   if (!d) return py::none();
                                   return py::int_(*d);
                               })
        .def("__eq__", [](const credal::CredalSpec& a, const credal::CredalSpec& b) {
            return a == b;
        });

    m.def("validate_spec",
          [](const credal::CredalSpec& spec) { return credal::validate(spec).issues; },
          py::arg("spec"));

    m.def("upper_natural_extension",
          [](const credal::CredalSpec& spec, const std::vector<double>& f,
             credal::Backend backend) {
              return credal::upper_natural_extension(spec, as_gamble(f), backend);
          },
          py::arg("spec"), py::arg("gamble"), py::arg("backend") = credal::Backend::automatic);
    m.def("lower_natural_extension",
          [](const credal::CredalSpec& spec, const std::vector<double>& f,
             credal::Backend backend) {
              return credal::lower_natural_extension(spec, as_gamble(f), backend);
          },
          py::arg("spec"), py::arg("gamble"), py::arg("backend") = credal::Backend::automatic);

    m.def("credal_vertices",
          [](const std::vector<double>& lower, const std::vector<double>& upper) {
              std::vector<std::vector<double>> out;
              for (auto& v : credal::credal_vertices(credal::ProbabilityIntervals(lower, upper)))
                  out.push_back(std::move(v.weights));
              return out;
          },
          py::arg("lower"), py::arg("upper"));

    py::class_<credal::UpperTransitionOperator>(m, "TransitionOperator")
        .def(py::init<std::vector<credal::CredalSpec>, credal::Backend>(), py::arg("rows"),
             py::arg("backend") = credal::Backend::automatic)
        .def_static("from_matrix", &credal::UpperTransitionOperator::from_matrix,
                    py::arg("matrix"))
        .def_static("from_intervals", &credal::UpperTransitionOperator::from_interval_matrices,
                    py::arg("lower"), py::arg("upper"))
        .def_static("vacuous", &credal::UpperTransitionOperator::vacuous, py::arg("n"))
        .def_property_readonly("size", &credal::UpperTransitionOperator::size)
        .def("row", &credal::UpperTransitionOperator::row, py::arg("x"))
        .def("validate",
             [](const credal::UpperTransitionOperator& t) { return t.validate().issues; })
        .def("apply_upper",
             [](const credal::UpperTransitionOperator& t, const std::vector<double>& f) {
                 return credal::apply_upper(t, as_gamble(f)).values;
             },
             py::arg("gamble"))
        .def("apply_lower",
             [](const credal::UpperTransitionOperator& t, const std::vector<double>& f) {
                 return credal::apply_lower(t, as_gamble(f)).values;
             },
             py::arg("gamble"))
        .def("iterate_upper",
             [](const credal::UpperTransitionOperator& t, const std::vector<double>& f, long n) {
                 return credal::iterate_upper(t, as_gamble(f), n).values;
             },
             py::arg("gamble"), py::arg("n"))
        .def("iterate_lower",
             [](const credal::UpperTransitionOperator& t, const std::vector<double>& f, long n) {
                 return credal::iterate_lower(t, as_gamble(f), n).values;
             },
             py::arg("gamble"), py::arg("n"))
        .def("contaminated",
             [](const credal::UpperTransitionOperator& t, double eps) {
                 return credal::contaminate_operator(t, eps);
             },
             py::arg("eps"));

    m.def("vacuous_operator",
          [](std::size_t n) { return credal::UpperTransitionOperator::vacuous(n); },
          py::arg("n"));

    m.def("distribution_bounds",
          [](const credal::CredalSpec& initial, const credal::UpperTransitionOperator& t, long n,
             const std::vector<double>& f) {
              auto [lo, up] = credal::distribution_bounds(initial, t, n, as_gamble(f));
              return py::make_tuple(lo, up);
          },
          py::arg("initial"), py::arg("transition"), py::arg("n"), py::arg("gamble"));
    m.def("nstep_mass_bounds",
          [](const credal::CredalSpec& initial, const credal::UpperTransitionOperator& t,
             long n) {
              auto mb = credal::nstep_mass_bounds(initial, t, n);
              return py::make_tuple(mb.lower, mb.upper);
          },
          py::arg("initial"), py::arg("transition"), py::arg("n"));
    m.def("nstep_event_bounds",
          [](const credal::UpperTransitionOperator& t, long n) {
              auto eb = credal::nstep_event_bounds(t, n);
              return py::make_tuple(eb.lower, eb.upper);
          },
          py::arg("transition"), py::arg("n"));

    m.def("dobrushin", &credal::dobrushin, py::arg("matrix"));
    m.def("is_two_monotone_induced", &credal::is_two_monotone_induced, py::arg("spec"));
    m.def("imprecision",
          [](const credal::CredalSpec& spec, std::optional<std::size_t> n) {
              return credal::imprecision(spec, n);
          },
          py::arg("spec"), py::arg("n") = std::nullopt);
    m.def("distance_two_monotone",
          [](const credal::CredalSpec& a, const credal::CredalSpec& b,
             std::optional<std::size_t> n) { return credal::distance_two_monotone(a, b, n); },
          py::arg("a"), py::arg("b"), py::arg("n") = std::nullopt);
    m.def("distance_event_lower_bound",
          [](const credal::CredalSpec& a, const credal::CredalSpec& b,
             std::optional<std::size_t> n) {
              return flagged(credal::distance_event_lower_bound(a, b, n));
          },
          py::arg("a"), py::arg("b"), py::arg("n") = std::nullopt);
    m.def("operator_distance",
          [](const credal::UpperTransitionOperator& a, const credal::UpperTransitionOperator& b) {
              return flagged(credal::operator_distance(a, b));
          },
          py::arg("a"), py::arg("b"));
    m.def("operator_imprecision", &credal::operator_imprecision, py::arg("transition"));
    m.def("weak_ergodicity_coefficient", &credal::weak_ergodicity_coefficient,
          py::arg("transition"));
    m.def("weak_ergodicity_n",
          [](const credal::UpperTransitionOperator& t, long r) {
              return flagged(credal::weak_ergodicity_n(t, r));
          },
          py::arg("transition"), py::arg("r"));
    m.def("uniform_ergodicity_coefficient", &credal::uniform_ergodicity_coefficient,
          py::arg("transition"));
    m.def("convergence_check",
          [](const credal::UpperTransitionOperator& t, long r_max) {
              const credal::ConvergenceResult r = credal::convergence_check(t, r_max);
              py::dict out;
              out["verdict"] =
                  r.verdict == credal::Convergence::converges ? "converges" : "unknown";
              out["certified_r"] =
                  r.certified_r ? py::object(py::int_(*r.certified_r)) : py::object(py::none());
              out["r"] = r.profile.r;
              out["rho"] = r.profile.rho;
              out["flag"] = flag_name(r.profile.flag);
              return out;
          },
          py::arg("transition"), py::arg("r_max") = 5);

    m.def("nstep_distribution_distance",
          [](const credal::CredalSpec& ia, const credal::UpperTransitionOperator& a,
             const credal::CredalSpec& ib, const credal::UpperTransitionOperator& b, long n) {
              return flagged(credal::nstep_distribution_distance(ia, a, ib, b, n));
          },
          py::arg("initial_a"), py::arg("a"), py::arg("initial_b"), py::arg("b"), py::arg("n"));
    m.def("nstep_operator_distance",
          [](const credal::UpperTransitionOperator& a, const credal::UpperTransitionOperator& b,
             long n) { return flagged(credal::nstep_operator_distance(a, b, n)); },
          py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("nstep_imprecision", &credal::nstep_imprecision, py::arg("initial"),
          py::arg("transition"), py::arg("n"));

    m.def("sum_rho_bound",
          [](long n, long r, double rho) { return credal::sum_rho_bound(n, profile_of(r, rho)); },
          py::arg("n"), py::arg("r"), py::arg("rho"));
    m.def("sum_rho_bound_limit",
          [](long r, double rho) { return credal::sum_rho_bound_limit(profile_of(r, rho)); },
          py::arg("r"), py::arg("rho"));
    m.def("distribution_error_bound",
          [](double initial_distance, double operator_distance, std::optional<long> n, long r,
             double rho) {
              credal::PerturbationInputs in;
              in.initial_distance = initial_distance;
              in.operator_distance = operator_distance;
              in.profile = profile_of(r, rho);
              return bound(n ? credal::distribution_error_bound(in, *n)
                             : credal::distribution_error_bound_limit(in));
          },
          py::arg("initial_distance"), py::arg("operator_distance"), py::arg("n"), py::arg("r"),
          py::arg("rho"));
    m.def("operator_error_bound",
          [](double one_step_distance, std::optional<long> n, long r, double rho) {
              return bound(n ? credal::operator_error_bound(one_step_distance, *n,
                                                            profile_of(r, rho))
                             : credal::operator_error_bound_limit(one_step_distance,
                                                                  profile_of(r, rho)));
          },
          py::arg("operator_distance"), py::arg("n"), py::arg("r"), py::arg("rho"));
    m.def("imprecision_bound",
          [](double initial_imprecision, double operator_imprecision, std::optional<long> n,
             long r, double rho) {
              credal::PerturbationInputs in;
              in.profile = profile_of(r, rho);
              in.initial_imprecision = initial_imprecision;
              in.operator_imprecision = operator_imprecision;
              return bound(n ? credal::imprecision_bound(in, *n)
                             : credal::imprecision_bound_limit(in));
          },
          py::arg("initial_imprecision"), py::arg("operator_imprecision"), py::arg("n"),
          py::arg("r"), py::arg("rho"));

    m.def("contamination_metrics",
          [](const credal::CredalSpec& initial, const credal::UpperTransitionOperator& t,
             double eps) {
              const credal::ContaminationMetrics cm =
                  credal::contamination_metrics(initial, t, eps);
              py::dict out;
              out["epsilon"] = cm.epsilon;
              out["vacuous_distance_initial"] = cm.vacuous_distance_initial;
              out["vacuous_distance_operator"] = cm.vacuous_distance_operator;
              out["rho"] = cm.rho;
              out["initial_imprecision"] = cm.initial_imprecision;
              out["operator_imprecision"] = cm.operator_imprecision;
              out["spec_distance"] = cm.spec_distance;
              out["operator_distance"] = cm.operator_distance;
              out["pair_scale"] = cm.pair_scale;
              out["contaminated_rho"] = cm.contaminated_rho;
              out["contaminated_imprecision"] = cm.contaminated_imprecision;
              out["contaminated_operator_imprecision"] = cm.contaminated_operator_imprecision;
              return out;
          },
          py::arg("initial"), py::arg("transition"), py::arg("eps"));
    m.def("contamination_bounds",
          [](const credal::CredalSpec& initial, const credal::UpperTransitionOperator& t,
             double eps, std::optional<long> n) {
              const credal::ContaminationMetrics cm =
                  credal::contamination_metrics(initial, t, eps);
              const credal::ContaminationBounds cb =
                  n ? credal::contamination_bounds(cm, *n) : credal::contamination_bounds_limit(cm);
              py::dict out;
              out["distribution_error"] = bound(cb.distribution_error);
              out["imprecision"] = bound(cb.imprecision);
              return out;
          },
          py::arg("initial"), py::arg("transition"), py::arg("eps"), py::arg("n"));

    py::class_<credal::ChainSpec>(m, "ChainSpec")
        .def_property_readonly("states",
                               [](const credal::ChainSpec& c) { return c.states.labels(); })
        .def_readonly("initial", &credal::ChainSpec::initial)
        .def_readonly("transition", &credal::ChainSpec::transition)
        .def("__eq__",
             [](const credal::ChainSpec& a, const credal::ChainSpec& b) { return a == b; });

    m.def("parse_chain_spec",
          [](const std::filesystem::path& path) { return credal::parse_chain_spec(path); },
          py::arg("path"));
    m.def("parse_chain_spec_text", &credal::parse_chain_spec_text, py::arg("text"));
    m.def("serialize_chain_spec", &credal::serialize_chain_spec, py::arg("chain"));
    m.def("load_fixture",
          [](const std::string& name) { return credal::fixtures::load(name); },
          py::arg("name"));
    m.def("fixture_text",
          [](const std::string& name) { return std::string(credal::fixtures::text(name)); },
          py::arg("name"));

    m.def("report_analyze",
          [](const credal::ChainSpec& chain, const std::vector<long>& steps) {
              return credal::render_json(credal::cmd_analyze(chain, steps));
          },
          py::arg("chain"), py::arg("steps") = std::vector<long>{});
    m.def("report_compare",
          [](const credal::ChainSpec& a, const credal::ChainSpec& b,
             const std::vector<long>& steps) {
              return credal::render_json(credal::cmd_compare(a, b, steps));
          },
          py::arg("a"), py::arg("b"), py::arg("steps") = std::vector<long>{});
    m.def("report_contaminate",
          [](const credal::ChainSpec& chain, double eps, const std::vector<long>& steps) {
              return credal::render_json(credal::cmd_contaminate(chain, eps, steps));
          },
          py::arg("chain"), py::arg("eps"), py::arg("steps") = std::vector<long>{});
    m.def("report_reproduce",
          [](const std::string& which) {
              const credal::ReproduceResult r = credal::cmd_reproduce(which);
              return py::make_tuple(credal::render_json(r.table), r.all_passed);
          },
          py::arg("which"));
}
