#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "banet/attractors.hpp"
#include "banet/dynamics.hpp"
#include "banet/funcparse.hpp"
#include "banet/netcore.hpp"
#include "banet/verify.hpp"
#include "banet/xorcirculant.hpp"

namespace {

using namespace banet;

std::string read_input(const std::string& path, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string first_significant_line(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') return line;
  }
  throw DomainError("input holds no significant line");
}

Configuration parse_seed(const std::string& text, int n) {
  if (text.rfind("unit:", 0) == 0) {
    const std::string tail = text.substr(5);
    if (tail.empty() || tail.size() > 9 ||
        tail.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("seed 'unit:<i>' needs a numeric automaton index");
    }
    return Configuration::unit(n, std::stoi(tail));
  }
  const Configuration x = Configuration::from_string(text);
  if (x.size() != n) {
    throw DomainError("seed length " + std::to_string(x.size()) +
                      " does not match size " + std::to_string(n));
  }
  return x;
}

TransitionGraph build_graph(const Network& net, const std::string& mode,
                            const std::string& schedule_text) {
  if (!schedule_text.empty()) {
    return build_transition_graph(
        net, UpdateSchedule::parse(schedule_text, net.size()));
  }
  if (mode.empty()) throw CLI::RequiredError("--mode or --schedule");
  if (mode == "general") return build_transition_graph(net, UpdateMode::General);
  if (mode == "asynchronous" || mode == "async") {
    return build_transition_graph(net, UpdateMode::Asynchronous);
  }
  if (mode == "parallel") {
    return build_transition_graph(net, UpdateSchedule::parallel(net.size()));
  }
  throw DomainError("unknown mode '" + mode +
                    "' (expected general, asynchronous or parallel, or pass "
                    "--schedule)");
}

void print_ban_body(const Network& net, const std::string& indent) {
  std::istringstream lines(format_network(net));
  std::string line;
  std::getline(lines, line);  // drop the size header
  while (std::getline(lines, line)) std::cout << indent << line << "\n";
}

int run_show(const std::string& text) {
  const Network net = load_network(text);
  std::cout << format_network(net);
  const InteractionGraph graph = interaction_graph(net);
  std::cout << "# arcs:";
  for (const auto& [from, to] : graph.arcs) {
    std::cout << " (" << from << "," << to << ")";
  }
  std::cout << "\n";
  const MonotonicityReport report = network_monotone(net);
  for (int i = 0; i < report.n; ++i) {
    for (int j = 0; j < report.n; ++j) {
      const Monotonicity m = report.at(i, j);
      if (m == Monotonicity::Independent) continue;
      std::cout << "# monotonicity f" << i << "/x" << j << ": " << to_string(m);
      if (m == Monotonicity::NonMonotone) {
        for (const auto& [wi, wj, witness] : report.witnesses) {
          if (wi == i && wj == j) {
            std::cout << " (raise at "
                      << Configuration(report.n, witness.increase_at).to_string()
                      << ", lower at "
                      << Configuration(report.n, witness.decrease_at).to_string()
                      << ")";
          }
        }
      }
      std::cout << "\n";
    }
  }
  std::cout << "# network: " << (report.monotone ? "monotone" : "non-monotone")
            << "\n";
  return 0;
}

int run_scan(int size) {
  const auto hits = sensitivity_scan(size);
  std::uint64_t candidates = 1;
  for (int i = 0; i < size; ++i) candidates *= std::uint64_t{1} << (1 << size);
  std::cout << "scan-sensitivity size=" << size << " candidates=" << candidates
            << " hits=" << hits.size() << "\n";
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const auto& [net, evidence] = hits[h];
    std::cout << "network " << h << ":\n";
    print_ban_body(net, "  ");
    std::cout << "  monotone: "
              << (network_monotone(net).monotone ? "yes" : "no") << "\n";
    std::cout << "  non-sequentialisable: "
              << Configuration(size, evidence.transition_from).to_string();
    std::cout << " -{";
    bool first = true;
    for (int i = 0; i < size; ++i) {
      if ((evidence.transition_update >> i) & 1u) {
        if (!first) std::cout << ",";
        std::cout << i;
        first = false;
      }
    }
    std::cout << "}-> "
              << Configuration(size, evidence.transition_to).to_string() << "\n";
    std::cout << "  recurrent asynchronous:";
    for (std::uint32_t code : evidence.asynchronous_recurrent) {
      std::cout << " " << Configuration(size, code).to_string();
    }
    std::cout << "\n  recurrent general:";
    for (std::uint32_t code : evidence.general_recurrent) {
      std::cout << " " << Configuration(size, code).to_string();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_verify_all(int jobs) {
  const auto claims = run_verification_claims(jobs);
  int pass = 0, fail = 0, skip = 0;
  std::string lines;
  for (const ClaimResult& claim : claims) {
    lines += format_claim_line(claim);
    lines += '\n';
    switch (claim.status) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::Skip: ++skip; break;
    }
  }
  std::cout << lines << "summary: pass=" << pass << " fail=" << fail
            << " skip=" << skip << "\n";
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean automata network toolbox"};
  app.require_subcommand(1);
  int exit_code = 0;

  // Shared option storage; each subcommand binds the flags it uses.
  std::string input_path, inline_spec, schedule_text, mode, seed_text, format;
  int steps = 1, size = 2, enum_n = 0, enum_k = 0, power = 1, jobs = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "network file (.ban or circulant spec)");
    cmd->add_option("--spec", inline_spec, "inline network text");
  };
  auto input_text = [&]() -> std::string {
    if (input_path.empty() && inline_spec.empty()) {
      throw DomainError("no input: pass a file or --spec");
    }
    return read_input(input_path, inline_spec);
  };

  CLI::App* show = app.add_subcommand(
      "show", "parse a network and echo its canonical form and analysis");
  add_input(show);
  show->callback([&] { exit_code = run_show(input_text()); });

  CLI::App* step = app.add_subcommand("step", "apply an update schedule once");
  add_input(step);
  step->add_option("--schedule", schedule_text, "schedule text")->required();
  step->add_option("--seed", seed_text, "start configuration")->required();
  step->callback([&] {
    const Network net = load_network(input_text());
    const UpdateSchedule u = UpdateSchedule::parse(schedule_text, net.size());
    const Configuration x = parse_seed(seed_text, net.size());
    std::cout << apply_schedule(net, u, x).to_string() << "\n";
  });

  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "transient and period of one trajectory");
  add_input(orbit_cmd);
  orbit_cmd->add_option("--schedule", schedule_text, "schedule text (default parallel)");
  orbit_cmd->add_option("--seed", seed_text, "start configuration")->required();
  orbit_cmd->callback([&] {
    const Network net = load_network(input_text());
    const UpdateSchedule u =
        schedule_text.empty() ? UpdateSchedule::parallel(net.size())
                              : UpdateSchedule::parse(schedule_text, net.size());
    const OrbitSummary o = orbit(net, u, parse_seed(seed_text, net.size()));
    std::cout << "transient=" << o.transient << " period=" << o.period
              << " cycle=";
    for (std::size_t i = 0; i < o.cycle.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << Configuration(net.size(), o.cycle[i]).to_string();
    }
    std::cout << "\n";
  });

  CLI::App* graph_cmd = app.add_subcommand("graph", "DOT export of a transition graph");
  add_input(graph_cmd);
  graph_cmd->add_option("--mode", mode, "general | asynchronous | parallel");
  graph_cmd->add_option("--schedule", schedule_text, "deterministic schedule text");
  graph_cmd->callback([&] {
    const Network net = load_network(input_text());
    std::cout << to_dot(build_graph(net, mode, schedule_text));
  });

  CLI::App* attractors_cmd =
      app.add_subcommand("attractors", "attractor report for one updating mode");
  add_input(attractors_cmd);
  attractors_cmd->add_option("--mode", mode, "general | asynchronous | parallel");
  attractors_cmd->add_option("--schedule", schedule_text, "deterministic schedule text");
  attractors_cmd->add_option("--format", format, "text | json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  attractors_cmd->callback([&] {
    const Network net = load_network(input_text());
    const TransitionGraph graph = build_graph(net, mode, schedule_text);
    const auto found = find_attractors(graph);
    std::cout << (format == "json" ? attractor_report_json(graph, found)
                                   : attractor_report_text(graph, found));
  });

  CLI::App* spacetime =
      app.add_subcommand("spacetime", "space-time diagram of a circulant network");
  add_input(spacetime);
  spacetime->add_option("--seed", seed_text, "start configuration")->required();
  spacetime->add_option("--steps", steps, "number of parallel steps")->required();
  spacetime->add_option("--format", format, "text | pbm (default text)")
      ->check(CLI::IsMember({"text", "pbm"}));
  spacetime->callback([&] {
    const CirculantSpec spec =
        CirculantSpec::parse(first_significant_line(input_text()));
    const Configuration x0 = parse_seed(seed_text, spec.n);
    const SpaceTimeDiagram diagram = space_time(spec, x0, steps);
    std::cout << (format == "pbm" ? diagram.to_pbm() : diagram.to_text());
  });

  CLI::App* circulant = app.add_subcommand("circulant", "circulant network tools");
  circulant->require_subcommand(1);

  CLI::App* circ_enum = circulant->add_subcommand(
      "enum", "list every canonical spec of a given size and weight");
  circ_enum->add_option("--n", enum_n, "network size")->required();
  circ_enum->add_option("--k", enum_k, "coefficients per row")->required();
  circ_enum->callback([&] {
    for (const CirculantSpec& spec : enumerate_circulants(enum_n, enum_k)) {
      std::cout << spec.to_string() << "\n";
    }
  });

  CLI::App* circ_step = circulant->add_subcommand(
      "step", "simulate parallel steps of a circulant network");
  add_input(circ_step);
  circ_step->add_option("--seed", seed_text, "start configuration")->required();
  circ_step->add_option("--steps", steps, "number of steps (default 1)");
  circ_step->callback([&] {
    const CirculantSpec spec =
        CirculantSpec::parse(first_significant_line(input_text()));
    Configuration x = parse_seed(seed_text, spec.n);
    for (int t = 0; t < steps; ++t) x = parallel_step(spec, x);
    std::cout << x.to_string() << "\n";
  });

  CLI::App* circ_verify = circulant->add_subcommand(
      "verify", "run the power-of-two size verification suite");
  circ_verify->add_option("--p", power, "size exponent (n = 2^p)")->required();
  circ_verify->callback([&] {
    const PowerTwoReport report = verify_power_two_suite(power);
    std::cout << report.to_text();
    if (!report.all_passed()) exit_code = 1;
  });

  CLI::App* scan = app.add_subcommand(
      "scan-sensitivity",
      "enumerate all networks of one size and keep the synchronism-sensitive ones");
  scan->add_option("--size", size, "network size")->required();
  scan->callback([&] { exit_code = run_scan(size); });

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  CLI::App* verify_all =
      verify->add_subcommand("all", "run every verification claim");
  verify_all->add_option("--jobs", jobs, "worker cap (default 1)");
  verify_all->callback([&] { exit_code = run_verify_all(jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "banet: " << e.what() << "\n";
    return 2;
  } catch (const banet::ParseError& e) {
    std::cerr << "banet: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "banet: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
