#include "banet/attractors.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace banet {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

const char* kind_word(AttractorKind k) {
  switch (k) {
    case AttractorKind::StableConfiguration:
      return "stable configuration";
    case AttractorKind::StableOscillation:
      return "stable oscillation";
    default:
      return "limit cycle";
  }
}

const char* kind_slug(AttractorKind k) {
  switch (k) {
    case AttractorKind::StableConfiguration:
      return "stable-configuration";
    case AttractorKind::StableOscillation:
      return "stable-oscillation";
    default:
      return "limit-cycle";
  }
}

// Strongly connected components by Tarjan's algorithm with an explicit DFS
// stack; 2^n vertices would overflow recursion.
std::pair<std::vector<std::uint32_t>, std::uint32_t> strongly_connected(
    const TransitionGraph& g) {
  const std::uint32_t count = g.config_count();
  const int degree = g.out_degree();
  std::vector<std::uint32_t> index(count, kNone);
  std::vector<std::uint32_t> lowlink(count, 0);
  std::vector<std::uint32_t> comp(count, kNone);
  std::vector<bool> on_stack(count, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, int>> dfs;
  std::uint32_t next_index = 0;
  std::uint32_t comp_count = 0;

  for (std::uint32_t root = 0; root < count; ++root) {
    if (index[root] != kNone) continue;
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    dfs.emplace_back(root, 0);
    while (!dfs.empty()) {
      const std::uint32_t v = dfs.back().first;
      if (dfs.back().second < degree) {
        const std::uint32_t w = g.successor(v, dfs.back().second);
        ++dfs.back().second;
        if (index[w] == kNone) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          dfs.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        dfs.pop_back();
        if (!dfs.empty()) {
          const std::uint32_t parent = dfs.back().first;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          while (true) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
      }
    }
  }
  return {std::move(comp), comp_count};
}

}  // namespace

std::vector<Attractor> find_attractors(const TransitionGraph& g) {
  const auto [comp, comp_count] = strongly_connected(g);
  const std::uint32_t count = g.config_count();
  const int degree = g.out_degree();

  std::vector<bool> terminal(comp_count, true);
  for (std::uint32_t code = 0; code < count; ++code) {
    for (int slot = 0; slot < degree; ++slot) {
      if (comp[g.successor(code, slot)] != comp[code]) {
        terminal[comp[code]] = false;
        break;
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> members(comp_count);
  for (std::uint32_t code = 0; code < count; ++code) {
    if (terminal[comp[code]]) members[comp[code]].push_back(code);
  }

  const bool deterministic = g.mode() == UpdateMode::Deterministic;
  std::vector<Attractor> attractors;
  std::vector<std::uint32_t> attractor_of;  // by component id
  attractor_of.assign(comp_count, kNone);
  for (std::uint32_t c = 0; c < comp_count; ++c) {
    if (!terminal[c]) continue;
    Attractor a;
    a.members = std::move(members[c]);
    a.kind = a.members.size() == 1
                 ? AttractorKind::StableConfiguration
                 : (deterministic ? AttractorKind::LimitCycle
                                  : AttractorKind::StableOscillation);
    attractors.push_back(std::move(a));
  }
  std::sort(attractors.begin(), attractors.end(),
            [](const Attractor& a, const Attractor& b) {
              return a.members.front() < b.members.front();
            });

  if (deterministic) {
    std::vector<std::uint32_t> attr_of(count, kNone);
    for (std::uint32_t a = 0; a < attractors.size(); ++a) {
      for (std::uint32_t m : attractors[a].members) attr_of[m] = a;
    }
    std::vector<std::uint32_t> trail;
    for (std::uint32_t code = 0; code < count; ++code) {
      std::uint32_t at = code;
      trail.clear();
      while (attr_of[at] == kNone) {
        trail.push_back(at);
        at = g.successor(at, 0);
      }
      for (std::uint32_t seen : trail) attr_of[seen] = attr_of[at];
    }
    std::vector<std::uint64_t> basin(attractors.size(), 0);
    for (std::uint32_t code = 0; code < count; ++code) ++basin[attr_of[code]];
    for (std::uint32_t a = 0; a < attractors.size(); ++a) {
      attractors[a].basin = basin[a];
    }
  }
  return attractors;
}

std::vector<std::uint32_t> recurrent_configurations(const TransitionGraph& g) {
  std::vector<std::uint32_t> out;
  for (const Attractor& a : find_attractors(g)) {
    out.insert(out.end(), a.members.begin(), a.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitSummary orbit(const Network& net, const UpdateSchedule& u,
                   const Configuration& start) {
  if (start.size() != net.size()) {
    throw DomainError("configuration size does not match network size");
  }
  u.validate(net.size());
  const auto f = [&](std::uint32_t c) { return apply_schedule_code(net, u, c); };
  const std::uint32_t x0 = static_cast<std::uint32_t>(start.code());

  // Brent's cycle detection: find the period first, then align two walkers
  // one period apart to locate the first recurrent configuration.
  std::uint64_t power = 1;
  std::uint64_t period = 1;
  std::uint32_t tortoise = x0;
  std::uint32_t hare = f(x0);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power <<= 1;
      period = 0;
    }
    hare = f(hare);
    ++period;
  }

  hare = x0;
  for (std::uint64_t i = 0; i < period; ++i) hare = f(hare);
  tortoise = x0;
  std::uint64_t transient = 0;
  while (tortoise != hare) {
    tortoise = f(tortoise);
    hare = f(hare);
    ++transient;
  }

  OrbitSummary summary{start, transient, period, {}};
  summary.cycle.reserve(period);
  std::uint32_t at = tortoise;
  do {
    summary.cycle.push_back(at);
    at = f(at);
  } while (at != tortoise);
  return summary;
}

ConvergenceProfile convergence_profile(const Network& net,
                                       const UpdateSchedule& u) {
  const int n = net.size();
  if (n > kMaxDeterministicGraphSize) {
    throw CapacityError("exhaustive profiles capped at n <= " +
                        std::to_string(kMaxDeterministicGraphSize) +
                        ", got n = " + std::to_string(n));
  }
  u.validate(n);

  ConvergenceProfile profile;
  std::vector<std::uint64_t> unit_transient(n, 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < count; ++code) {
    const OrbitSummary o =
        orbit(net, u, Configuration(n, code));
    ++profile.period_census[o.period];
    if (o.transient > profile.t_star) {
      profile.t_star = o.transient;
      profile.slowest_start = static_cast<std::uint32_t>(code);
    }
    if (std::popcount(code) == 1) {
      unit_transient[std::countr_zero(code)] = o.transient;
    }
    if (code == 1) profile.p_star = o.period;
  }
  profile.unit_attains_t_star =
      std::any_of(unit_transient.begin(), unit_transient.end(),
                  [&](std::uint64_t t) { return t == profile.t_star; });
  profile.periods_divide_p_star = std::all_of(
      profile.period_census.begin(), profile.period_census.end(),
      [&](const auto& entry) { return profile.p_star % entry.first == 0; });
  return profile;
}

std::string attractor_report_text(const TransitionGraph& g,
                                  const std::vector<Attractor>& attractors) {
  const int n = g.size();
  std::string out = "n=" + std::to_string(n) + " mode=" + to_string(g.mode());
  if (g.schedule() != nullptr) out += " schedule=" + g.schedule()->to_string();
  out += " attractors=" + std::to_string(attractors.size()) + "\n";
  for (std::size_t a = 0; a < attractors.size(); ++a) {
    const Attractor& attr = attractors[a];
    out += "attractor " + std::to_string(a) + ": " + kind_word(attr.kind);
    if (attr.kind == AttractorKind::LimitCycle) {
      out += " period=" + std::to_string(attr.period());
    } else {
      out += " size=" + std::to_string(attr.size());
    }
    out += " members=";
    for (std::size_t m = 0; m < attr.members.size(); ++m) {
      if (m > 0) out += ',';
      out += Configuration(n, attr.members[m]).to_string();
    }
    if (attr.basin) out += " basin=" + std::to_string(*attr.basin);
    out += '\n';
  }
  return out;
}

std::string attractor_report_json(const TransitionGraph& g,
                                  const std::vector<Attractor>& attractors) {
  nlohmann::ordered_json doc;
  doc["n"] = g.size();
  doc["mode"] = to_string(g.mode());
  if (g.schedule() != nullptr) doc["schedule"] = g.schedule()->to_string();
  doc["attractors"] = nlohmann::ordered_json::array();
  for (const Attractor& attr : attractors) {
    nlohmann::ordered_json entry;
    entry["kind"] = kind_slug(attr.kind);
    if (attr.kind == AttractorKind::LimitCycle) {
      entry["period"] = attr.period();
    }
    entry["size"] = attr.size();
    auto members = nlohmann::ordered_json::array();
    for (std::uint32_t m : attr.members) {
      members.push_back(Configuration(g.size(), m).to_string());
    }
    entry["members"] = std::move(members);
    if (attr.basin) entry["basin"] = *attr.basin;
    doc["attractors"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace banet
