#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "banet/attractors.hpp"
#include "banet/dynamics.hpp"
#include "banet/funcparse.hpp"
#include "banet/netcore.hpp"
#include "banet/verify.hpp"
#include "banet/xorcirculant.hpp"

namespace py = pybind11;
using namespace banet;

namespace {

std::string config_str(int n, std::uint32_t code) {
  return Configuration(n, code).to_string();
}

std::vector<std::string> config_strings(int n, const std::vector<std::uint32_t>& codes) {
  std::vector<std::string> out;
  out.reserve(codes.size());
  for (std::uint32_t code : codes) out.push_back(config_str(n, code));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boolean automata networks: simulation and exhaustive analysis";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "BanParseError", PyExc_ValueError);

  py::class_<Ratio>(m, "Ratio")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_readonly("num", &Ratio::num)
      .def_readonly("den", &Ratio::den)
      .def("__eq__", [](const Ratio& a, const Ratio& b) { return a == b; })
      .def("__str__", &Ratio::to_string)
      .def("__repr__", [](const Ratio& r) { return "Ratio(" + r.to_string() + ")"; });

  py::class_<Configuration>(m, "Configuration")
      .def(py::init([](const std::string& bits) {
             return Configuration::from_string(bits);
           }),
           py::arg("bits"))
      .def_static("zeros", &Configuration::zeros, py::arg("n"))
      .def_static("ones", &Configuration::ones, py::arg("n"))
      .def_static("unit", &Configuration::unit, py::arg("n"), py::arg("i"))
      .def("__len__", &Configuration::size)
      .def("bit", &Configuration::bit, py::arg("i"))
      .def("weight", &Configuration::weight)
      .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
      .def("__xor__", [](const Configuration& a, const Configuration& b) { return a ^ b; })
      .def("__str__", &Configuration::to_string)
      .def("__repr__", [](const Configuration& x) {
        return "Configuration(\"" + x.to_string() + "\")";
      });

  py::class_<Network>(m, "Network")
      .def("__len__", &Network::size)
      .def("support", [](const Network& net, int i) { return net.function(i).support(); },
           py::arg("automaton"))
      .def("eval", [](const Network& net, int i, const Configuration& x) {
             return net.function(i).eval(x);
           },
           py::arg("automaton"), py::arg("x"))
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; });

  m.def("flip", &flip, py::arg("x"), py::arg("w"));
  m.def("density", &density, py::arg("x"));
  m.def("rotate", &rotate, py::arg("x"), py::arg("r"));
  m.def("symmetric_conf", &symmetric_conf, py::arg("x"), py::arg("i"));
  m.def("interaction_graph",
        [](const Network& net) { return interaction_graph(net).arcs; },
        py::arg("net"));

  m.def("parse_network", [](const std::string& text) { return parse_network(text); },
        py::arg("text"));
  m.def("format_network", &format_network, py::arg("net"));
  m.def("load_network", [](const std::string& text) { return load_network(text); },
        py::arg("text"));

  py::class_<MonotonicityReport>(m, "MonotonicityReport")
      .def_readonly("n", &MonotonicityReport::n)
      .def_readonly("monotone", &MonotonicityReport::monotone)
      .def("at",
           [](const MonotonicityReport& r, int i, int j) {
             return std::string(to_string(r.at(i, j)));
           },
           py::arg("automaton"), py::arg("variable"))
      .def_property_readonly("witnesses", [](const MonotonicityReport& r) {
        py::list out;
        for (const auto& [i, j, w] : r.witnesses) {
          out.append(py::make_tuple(i, j, config_str(r.n, w.increase_at),
                                    config_str(r.n, w.decrease_at)));
        }
        return out;
      });

  m.def("local_monotonicity",
        [](const Network& net, int automaton, int variable) {
          return std::string(to_string(local_monotonicity(net.function(automaton), variable)));
        },
        py::arg("net"), py::arg("automaton"), py::arg("variable"));
  m.def("network_monotone", &network_monotone, py::arg("net"));

  py::class_<UpdateSchedule>(m, "UpdateSchedule")
      .def_static("parallel", &UpdateSchedule::parallel, py::arg("n"))
      .def_static("sequential", &UpdateSchedule::sequential, py::arg("n"))
      .def_static("parse",
                  [](const std::string& text, int n) {
                    return UpdateSchedule::parse(text, n);
                  },
                  py::arg("text"), py::arg("n"))
      .def("__str__", &UpdateSchedule::to_string)
      .def("__eq__", [](const UpdateSchedule& a, const UpdateSchedule& b) { return a == b; });

  m.def("apply_update", &apply_update, py::arg("net"), py::arg("x"), py::arg("w"));
  m.def("apply_schedule", &apply_schedule, py::arg("net"), py::arg("schedule"),
        py::arg("x"));

  py::class_<TransitionGraph>(m, "TransitionGraph")
      .def_property_readonly("n", &TransitionGraph::size)
      .def_property_readonly("mode", [](const TransitionGraph& g) {
        return std::string(to_string(g.mode()));
      })
      .def_property_readonly("config_count", &TransitionGraph::config_count)
      .def_property_readonly("out_degree", &TransitionGraph::out_degree)
      .def("successor", &TransitionGraph::successor, py::arg("code"), py::arg("slot"));

  m.def("build_graph",
        [](const Network& net, const std::string& mode) {
          if (mode == "general") return build_transition_graph(net, UpdateMode::General);
          if (mode == "asynchronous") {
            return build_transition_graph(net, UpdateMode::Asynchronous);
          }
          throw DomainError("mode must be 'general' or 'asynchronous'");
        },
        py::arg("net"), py::arg("mode"));
  m.def("build_graph",
        [](const Network& net, const UpdateSchedule& schedule) {
          return build_transition_graph(net, schedule);
        },
        py::arg("net"), py::arg("schedule"));
  m.def("to_dot", &to_dot, py::arg("graph"));

  py::class_<Attractor>(m, "Attractor")
      .def_property_readonly("kind",
                             [](const Attractor& a) {
                               switch (a.kind) {
                                 case AttractorKind::StableConfiguration:
                                   return "stable-configuration";
                                 case AttractorKind::StableOscillation:
                                   return "stable-oscillation";
                                 default:
                                   return "limit-cycle";
                               }
                             })
      .def_property_readonly("size", &Attractor::size)
      .def_property_readonly("period", &Attractor::period)
      .def_readonly("basin", &Attractor::basin)
      .def_readonly("member_codes", &Attractor::members);

  m.def("find_attractors", &find_attractors, py::arg("graph"));
  m.def("attractor_members",
        [](const TransitionGraph& g, const Attractor& a) {
          return config_strings(g.size(), a.members);
        },
        py::arg("graph"), py::arg("attractor"));
  m.def("attractor_report_text", &attractor_report_text, py::arg("graph"),
        py::arg("attractors"));
  m.def("attractor_report_json", &attractor_report_json, py::arg("graph"),
        py::arg("attractors"));

  py::class_<OrbitSummary>(m, "OrbitSummary")
      .def_readonly("transient", &OrbitSummary::transient)
      .def_readonly("period", &OrbitSummary::period)
      .def_property_readonly("cycle", [](const OrbitSummary& o) {
        return config_strings(o.start.size(), o.cycle);
      });

  m.def("orbit", &orbit, py::arg("net"), py::arg("schedule"), py::arg("start"));

  py::class_<ConvergenceProfile>(m, "ConvergenceProfile")
      .def_readonly("t_star", &ConvergenceProfile::t_star)
      .def_readonly("p_star", &ConvergenceProfile::p_star)
      .def_readonly("period_census", &ConvergenceProfile::period_census)
      .def_readonly("slowest_start", &ConvergenceProfile::slowest_start)
      .def_readonly("unit_attains_t_star", &ConvergenceProfile::unit_attains_t_star)
      .def_readonly("periods_divide_p_star",
                    &ConvergenceProfile::periods_divide_p_star);

  m.def("convergence_profile", &convergence_profile, py::arg("net"),
        py::arg("schedule"));

  m.def("is_sequentialisable",
        [](const Network& net, const Configuration& x, const std::vector<int>& w) {
          const Sequentialisation s = is_sequentialisable(net, x, w);
          py::list path;
          for (const WitnessStep& step : s.path) {
            path.append(py::make_tuple(step.automaton,
                                       config_str(net.size(), step.config)));
          }
          return py::make_tuple(s.possible, path);
        },
        py::arg("net"), py::arg("x"), py::arg("w"));

  m.def("sensitivity_scan",
        [](int n) {
          py::list out;
          for (const auto& [net, ev] : sensitivity_scan(n)) {
            py::dict evidence;
            evidence["from"] = config_str(n, ev.transition_from);
            evidence["to"] = config_str(n, ev.transition_to);
            std::vector<int> update;
            for (int i = 0; i < n; ++i) {
              if ((ev.transition_update >> i) & 1u) update.push_back(i);
            }
            evidence["update"] = update;
            evidence["asynchronous_recurrent"] =
                config_strings(n, ev.asynchronous_recurrent);
            evidence["general_recurrent"] = config_strings(n, ev.general_recurrent);
            out.append(py::make_tuple(net, evidence));
          }
          return out;
        },
        py::arg("n"));

  py::class_<CirculantSpec>(m, "CirculantSpec")
      .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("coeffs"))
      .def_static("parse",
                  [](const std::string& text) { return CirculantSpec::parse(text); },
                  py::arg("text"))
      .def_readonly("n", &CirculantSpec::n)
      .def_readonly("coeffs", &CirculantSpec::coeffs)
      .def_property_readonly("k", &CirculantSpec::k)
      .def_property_readonly("canonical", &CirculantSpec::canonical)
      .def("__str__", &CirculantSpec::to_string)
      .def("__eq__", [](const CirculantSpec& a, const CirculantSpec& b) { return a == b; })
      .def("__repr__", [](const CirculantSpec& s) {
        return "CirculantSpec.parse(\"" + s.to_string() + "\")";
      });

  m.def("make_circulant", &make_circulant, py::arg("spec"));
  m.def("enumerate_circulants", &enumerate_circulants, py::arg("n"), py::arg("k"));
  m.def("symmetric_network", &symmetric_network, py::arg("spec"));
  m.def("interaction_step", &interaction_step, py::arg("spec"));
  m.def("circuit_decomposition",
        [](const CirculantSpec& spec) {
          py::list out;
          for (const CircuitDecomposition& entry : circuit_decomposition(spec)) {
            out.append(py::make_tuple(entry.coefficient, entry.circuits, entry.length));
          }
          return out;
        },
        py::arg("spec"));
  m.def("parallel_step", &parallel_step, py::arg("spec"), py::arg("x"));

  py::class_<SpaceTimeDiagram>(m, "SpaceTimeDiagram")
      .def_readonly("rows", &SpaceTimeDiagram::rows)
      .def("to_text", &SpaceTimeDiagram::to_text)
      .def("to_pbm", &SpaceTimeDiagram::to_pbm);

  m.def("space_time", &space_time, py::arg("spec"), py::arg("x0"), py::arg("steps"));
  m.def("mask_table",
        [](const CirculantSpec& spec, int i, int horizon) {
          return mask_table(spec, i, horizon).masks;
        },
        py::arg("spec"), py::arg("i"), py::arg("horizon"));
  m.def("eval_via_masks", &eval_via_masks, py::arg("spec"), py::arg("x0"),
        py::arg("i"), py::arg("t"));
  m.def("check_symmetry",
        [](const CirculantSpec& spec, int i, int horizon) {
          const SymmetryCheck check = check_symmetry(spec, i, horizon);
          return py::make_tuple(check.ok, check.first_violation);
        },
        py::arg("spec"), py::arg("i"), py::arg("horizon"));
  m.def("repetition_degree", &repetition_degree, py::arg("x"));

  py::class_<ClaimResult>(m, "ClaimResult")
      .def_readonly("id", &ClaimResult::id)
      .def_property_readonly("status",
                             [](const ClaimResult& c) {
                               return std::string(to_string(c.status));
                             })
      .def_readonly("detail", &ClaimResult::detail)
      .def("__repr__", [](const ClaimResult& c) { return format_claim_line(c); });

  py::class_<PowerTwoReport>(m, "PowerTwoReport")
      .def_readonly("p", &PowerTwoReport::p)
      .def_readonly("n", &PowerTwoReport::n)
      .def_readonly("claims", &PowerTwoReport::claims)
      .def("all_passed", &PowerTwoReport::all_passed)
      .def("to_text", &PowerTwoReport::to_text);

  m.def("verify_power_two_suite", &verify_power_two_suite, py::arg("p"));
  m.def("run_verification_claims", &run_verification_claims, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
}
