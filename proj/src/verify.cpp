#include "banet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "banet/attractors.hpp"
#include "banet/dynamics.hpp"
#include "banet/funcparse.hpp"
#include "banet/sampling.hpp"
#include "banet/xorcirculant.hpp"

namespace banet {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<std::uint64_t>(n - i) /
             static_cast<std::uint64_t>(i + 1);
  }
  return result;
}

CirculantSpec random_spec(std::mt19937_64& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % (max_n - 1));
  const int k = 2 + static_cast<int>(rng() % (n - 1));
  std::vector<int> pool(n - 1);
  for (int i = 0; i < n - 1; ++i) pool[i] = i;
  for (int i = 0; i < k - 1; ++i) {
    const int j = i + static_cast<int>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> coeffs(pool.begin(), pool.begin() + (k - 1));
  coeffs.push_back(n - 1);
  return CirculantSpec(n, std::move(coeffs));
}

Network random_network(int n, std::mt19937_64& rng) {
  std::vector<LocalFunction> functions;
  functions.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> outputs(std::size_t{1} << n);
    for (std::size_t code = 0; code < outputs.size(); ++code) {
      outputs[code] = rng() & 1u;
    }
    functions.push_back(LocalFunction::from_bits(n, outputs));
  }
  return Network(std::move(functions));
}

UpdateSchedule random_schedule(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }
  UpdateSchedule u;
  std::size_t at = 0;
  while (at < order.size()) {
    const std::size_t take = 1 + rng() % (order.size() - at);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < take; ++i) mask |= std::uint32_t{1} << order[at + i];
    u.blocks.push_back(mask);
    at += take;
  }
  return u;
}

ClaimResult claim_scan_size_two() {
  const auto hits = sensitivity_scan(2);

  auto family_member = [](std::uint32_t t0, std::uint32_t t1) {
    std::vector<LocalFunction> fs;
    for (std::uint32_t t : {t0, t1}) {
      std::vector<bool> outputs(4);
      for (int code = 0; code < 4; ++code) outputs[code] = (t >> code) & 1u;
      fs.push_back(LocalFunction::from_bits(2, outputs));
    }
    return Network(std::move(fs));
  };
  // x0 xor x1 has table 0110 (codes 0..3), its negation 1001.
  const std::uint32_t kXor = 0x6, kXnor = 0x9;
  int family_found = 0;
  for (std::uint32_t t0 : {kXor, kXnor}) {
    for (std::uint32_t t1 : {kXor, kXnor}) {
      const Network member = family_member(t0, t1);
      for (const auto& [net, evidence] : hits) {
        if (net == member) {
          ++family_found;
          break;
        }
      }
    }
  }

  bool all_non_monotone = true;
  for (const auto& [net, evidence] : hits) {
    if (network_monotone(net).monotone) all_non_monotone = false;
  }

  bool both_xor_sets = false;
  const Network both_xor = family_member(kXor, kXor);
  for (const auto& [net, evidence] : hits) {
    if (net == both_xor) {
      both_xor_sets =
          evidence.asynchronous_recurrent == std::vector<std::uint32_t>{0, 1, 2, 3} &&
          evidence.general_recurrent == std::vector<std::uint32_t>{0};
    }
  }

  const bool ok = family_found == 4 && all_non_monotone && both_xor_sets;
  return {"P1-scan2", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
          "hits=" + std::to_string(hits.size()) + " xor-family=" +
              std::to_string(family_found) + "/4 non-monotone=" +
              (all_non_monotone ? "all" : "violated")};
}

ClaimResult claim_enumeration_count() {
  int pairs = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      ++pairs;
      if (enumerate_circulants(n, k).size() != binomial(n - 1, k - 1)) {
        return {"P2.1-count", ClaimStatus::Fail,
                "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    }
  }
  return {"P2.1-count", ClaimStatus::Pass, "pairs=" + std::to_string(pairs)};
}

ClaimResult claim_zero_fixed() {
  std::mt19937_64 rng(2201);
  for (int s = 0; s < 50; ++s) {
    const CirculantSpec spec = random_spec(rng, 64);
    const Configuration zero(spec.n);
    if (parallel_step(spec, zero) != zero) {
      return {"P2.2-zero", ClaimStatus::Fail, "violated by " + spec.to_string()};
    }
  }
  return {"P2.2-zero", ClaimStatus::Pass, "specs=50"};
}

ClaimResult claim_ones_parity() {
  std::mt19937_64 rng(2301);
  for (int s = 0; s < 50; ++s) {
    const CirculantSpec spec = random_spec(rng, 64);
    const Configuration ones = Configuration::ones(spec.n);
    const Configuration image = parallel_step(spec, ones);
    const bool ok = (spec.k() % 2 == 0) ? image == Configuration(spec.n)
                                        : image == ones;
    if (!ok) {
      return {"P2.3-ones", ClaimStatus::Fail, "violated by " + spec.to_string()};
    }
  }
  return {"P2.3-ones", ClaimStatus::Pass, "specs=50"};
}

ClaimResult claim_rotation_equivariance() {
  std::uint64_t checks = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const CirculantSpec& spec : enumerate_circulants(n, k)) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
          const Configuration x(n, code);
          const Configuration fx = parallel_step(spec, x);
          for (int r = 0; r < n; ++r) {
            ++checks;
            if (parallel_step(spec, rotate(x, r)) != rotate(fx, r)) {
              return {"P2.4-rotate", ClaimStatus::Fail,
                      "violated by " + spec.to_string() + " x=" + x.to_string() +
                          " r=" + std::to_string(r)};
            }
          }
        }
      }
    }
  }
  return {"P2.4-rotate", ClaimStatus::Pass, "checks=" + std::to_string(checks)};
}

bool masks_match_iteration(const CirculantSpec& spec,
                           const std::vector<Configuration>& seeds, int horizon) {
  const int n = spec.n;
  // masks[i][t] as configurations of the symmetric network's iterates
  std::vector<std::vector<Configuration>> masks;
  masks.reserve(n);
  const CirculantSpec sym = symmetric_network(spec);
  for (int i = 0; i < n; ++i) {
    std::vector<Configuration> per_time;
    per_time.reserve(horizon + 1);
    Configuration m = Configuration::unit(n, i);
    for (int t = 0; t <= horizon; ++t) {
      per_time.push_back(m);
      if (t < horizon) m = parallel_step(sym, m);
    }
    masks.push_back(std::move(per_time));
  }
  for (const Configuration& x0 : seeds) {
    Configuration x = x0;
    for (int t = 0; t <= horizon; ++t) {
      for (int i = 0; i < n; ++i) {
        if (x.bit(i) != dot_parity(x0, masks[i][t])) return false;
      }
      if (t < horizon) x = parallel_step(spec, x);
    }
  }
  return true;
}

ClaimResult claim_masks() {
  // Exhaustive over every two-coefficient spec up to n = 8.
  for (int n = 2; n <= 8; ++n) {
    for (const CirculantSpec& spec : enumerate_circulants(n, 2)) {
      std::vector<Configuration> seeds;
      seeds.reserve(std::size_t{1} << n);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        seeds.emplace_back(n, code);
      }
      if (!masks_match_iteration(spec, seeds, 2 * n)) {
        return {"L1-mask", ClaimStatus::Fail, "violated by " + spec.to_string()};
      }
      // The public single-bit evaluation must agree as well.
      const Configuration probe = seeds[seeds.size() / 2 + 1];
      Configuration x = probe;
      for (int t = 0; t <= 2 * n; ++t) {
        for (int i = 0; i < n; ++i) {
          if (eval_via_masks(spec, probe, i, t) != x.bit(i)) {
            return {"L1-mask", ClaimStatus::Fail,
                    "eval_via_masks mismatch for " + spec.to_string()};
          }
        }
        if (t < 2 * n) x = parallel_step(spec, x);
      }
    }
  }
  // Sampled at n = 64: the self-loop spec plus four random ones.
  std::mt19937_64 rng(6401);
  std::vector<CirculantSpec> large{CirculantSpec(64, {63, 0})};
  for (int s = 0; s < 4; ++s) {
    const int m = static_cast<int>(rng() % 63);
    large.push_back(CirculantSpec(64, {63, m}));
  }
  for (const CirculantSpec& spec : large) {
    std::vector<Configuration> seeds;
    seeds.reserve(200);
    for (int s = 0; s < 200; ++s) seeds.push_back(random_configuration(64, rng));
    if (!masks_match_iteration(spec, seeds, 128)) {
      return {"L1-mask", ClaimStatus::Fail, "violated by " + spec.to_string()};
    }
  }
  return {"L1-mask", ClaimStatus::Pass,
          "exhaustive n<=8, sampled n=64 (1000 seeds)"};
}

ClaimResult claim_commutation() {
  std::uint64_t checks = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const CirculantSpec& spec : enumerate_circulants(n, k)) {
        const CirculantSpec sym = symmetric_network(spec);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
          const Configuration x(n, code);
          const Configuration fx = parallel_step(spec, x);
          for (int i = 0; i < n; ++i) {
            ++checks;
            if (parallel_step(sym, symmetric_conf(x, i)) !=
                symmetric_conf(fx, i)) {
              return {"L2-commute", ClaimStatus::Fail,
                      "violated by " + spec.to_string() + " x=" + x.to_string() +
                          " i=" + std::to_string(i)};
            }
          }
        }
      }
    }
  }
  return {"L2-commute", ClaimStatus::Pass, "checks=" + std::to_string(checks)};
}

ClaimResult claim_mirror() {
  std::mt19937_64 rng(3301);
  for (int s = 0; s < 20; ++s) {
    const CirculantSpec spec = random_spec(rng, 64);
    const int i = static_cast<int>(rng() % spec.n);
    const SymmetryCheck check = check_symmetry(spec, i, 4 * spec.n);
    if (!check.ok) {
      return {"P3-mirror", ClaimStatus::Fail,
              "violated by " + spec.to_string() + " at t=" +
                  std::to_string(*check.first_violation)};
    }
  }
  return {"P3-mirror", ClaimStatus::Pass, "specs=20 horizon=4n"};
}

ClaimResult claim_density_extremal() {
  int specs = 0;
  for (int n = 2; n <= 12; ++n) {
    for (const CirculantSpec& spec : enumerate_circulants(n, 2)) {
      ++specs;
      const Network net = make_circulant(spec);
      const ConvergenceProfile profile =
          convergence_profile(net, UpdateSchedule::parallel(n));
      if (!profile.unit_attains_t_star || !profile.periods_divide_p_star) {
        return {"P4-density", ClaimStatus::Fail, "violated by " + spec.to_string()};
      }
    }
  }
  return {"P4-density", ClaimStatus::Pass, "specs=" + std::to_string(specs)};
}

// Suite claims for n = 2, 4, 8, 16, merged per claim id.
std::vector<ClaimResult> power_two_claims() {
  const std::vector<std::string> order{"L3-step", "P5-degree", "T1-power2",
                                       "P6-odd", "L4-half"};
  std::map<std::string, std::string> details;
  std::map<std::string, ClaimStatus> statuses;
  for (const std::string& id : order) statuses[id] = ClaimStatus::Skip;
  for (int p = 1; p <= 4; ++p) {
    const PowerTwoReport report = verify_power_two_suite(p);
    for (const ClaimResult& claim : report.claims) {
      std::string& detail = details[claim.id];
      if (!detail.empty()) detail += ' ';
      detail += "n=" + std::to_string(report.n) + ":" + to_string(claim.status);
      ClaimStatus& merged = statuses[claim.id];
      if (claim.status == ClaimStatus::Fail) {
        merged = ClaimStatus::Fail;
      } else if (claim.status == ClaimStatus::Pass &&
                 merged != ClaimStatus::Fail) {
        merged = ClaimStatus::Pass;
      }
    }
  }
  std::vector<ClaimResult> out;
  out.reserve(order.size());
  for (const std::string& id : order) {
    out.push_back({id, statuses[id], details[id]});
  }
  return out;
}

ClaimResult claim_orbit_oracle() {
  std::mt19937_64 rng(4401);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Network net = random_network(n, rng);
    std::vector<UpdateSchedule> schedules{UpdateSchedule::parallel(n),
                                          random_schedule(n, rng),
                                          random_schedule(n, rng)};
    for (const UpdateSchedule& u : schedules) {
      const TransitionGraph graph = build_transition_graph(net, u);
      const auto attractors = find_attractors(graph);
      const std::uint32_t count = graph.config_count();
      constexpr std::uint32_t kNone = ~std::uint32_t{0};
      std::vector<std::uint32_t> attr_of(count, kNone);
      for (std::uint32_t a = 0; a < attractors.size(); ++a) {
        for (std::uint32_t m : attractors[a].members) attr_of[m] = a;
      }
      for (std::uint32_t code = 0; code < count; ++code) {
        // graph-derived transient: walk to the first recurrent configuration
        std::uint64_t transient = 0;
        std::uint32_t at = code;
        while (attr_of[at] == kNone) {
          at = graph.successor(at, 0);
          ++transient;
        }
        const std::uint64_t period = attractors[attr_of[at]].size();
        const OrbitSummary o = orbit(net, u, Configuration(n, code));
        std::vector<std::uint32_t> cycle_sorted = o.cycle;
        std::sort(cycle_sorted.begin(), cycle_sorted.end());
        if (o.transient != transient || o.period != period ||
            cycle_sorted != attractors[attr_of[at]].members) {
          return {"oracle-orbit", ClaimStatus::Fail,
                  "mismatch at trial " + std::to_string(trial) + " start=" +
                      Configuration(n, code).to_string()};
        }
      }
    }
  }
  return {"oracle-orbit", ClaimStatus::Pass, "networks=20 schedules=3"};
}

ClaimResult claim_parser_roundtrip() {
  // All 256 networks of size 2.
  for (std::uint32_t t0 = 0; t0 < 16; ++t0) {
    for (std::uint32_t t1 = 0; t1 < 16; ++t1) {
      std::vector<LocalFunction> fs;
      for (std::uint32_t t : {t0, t1}) {
        std::vector<bool> outputs(4);
        for (int code = 0; code < 4; ++code) outputs[code] = (t >> code) & 1u;
        fs.push_back(LocalFunction::from_bits(2, outputs));
      }
      const Network net(std::move(fs));
      const std::string text = format_network(net);
      const Network reparsed = parse_network(text);
      if (!(reparsed == net) || format_network(reparsed) != text) {
        return {"parser-roundtrip", ClaimStatus::Fail,
                "size-2 network " + std::to_string(t0) + "/" + std::to_string(t1)};
      }
    }
  }
  // Random corpus at n <= 6.
  std::mt19937_64 rng(5501);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Network net = random_network(n, rng);
    const std::string text = format_network(net);
    const Network reparsed = parse_network(text);
    if (!(reparsed == net) || format_network(reparsed) != text) {
      return {"parser-roundtrip", ClaimStatus::Fail,
              "random network trial " + std::to_string(trial)};
    }
  }
  return {"parser-roundtrip", ClaimStatus::Pass, "size-2=256 random=50"};
}

}  // namespace

std::vector<ClaimResult> run_verification_claims(int jobs) {
  if (jobs < 1) throw DomainError("jobs must be at least 1");

  std::vector<std::function<std::vector<ClaimResult>()>> tasks{
      [] { return std::vector<ClaimResult>{claim_scan_size_two()}; },
      [] { return std::vector<ClaimResult>{claim_enumeration_count()}; },
      [] { return std::vector<ClaimResult>{claim_zero_fixed()}; },
      [] { return std::vector<ClaimResult>{claim_ones_parity()}; },
      [] { return std::vector<ClaimResult>{claim_rotation_equivariance()}; },
      [] { return std::vector<ClaimResult>{claim_masks()}; },
      [] { return std::vector<ClaimResult>{claim_commutation()}; },
      [] { return std::vector<ClaimResult>{claim_mirror()}; },
      [] { return std::vector<ClaimResult>{claim_density_extremal()}; },
      [] { return power_two_claims(); },
      [] { return std::vector<ClaimResult>{claim_orbit_oracle()}; },
      [] { return std::vector<ClaimResult>{claim_parser_roundtrip()}; },
  };

  std::vector<std::vector<ClaimResult>> results(tasks.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        results[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<ClaimResult> out;
  for (auto& group : results) {
    for (auto& claim : group) out.push_back(std::move(claim));
  }
  return out;
}

}  // namespace banet
