#include "banet/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace banet {

namespace {

std::uint32_t mask_from_indices(const std::vector<int>& w, int n) {
  std::uint32_t mask = 0;
  for (int i : w) {
    if (i < 0 || i >= n) {
      throw DomainError("automaton index " + std::to_string(i) +
                        " out of range for size " + std::to_string(n));
    }
    mask |= std::uint32_t{1} << i;
  }
  return mask;
}

std::string mask_to_braces(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

// Images of every configuration under the full parallel update, used to
// assemble F_W(x) = (x & ~W) | (images[x] & W) without re-evaluating tables.
std::vector<std::uint32_t> parallel_images(const Network& net) {
  const int n = net.size();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::uint32_t> images(count, 0);
  for (int i = 0; i < n; ++i) {
    const LocalFunction& f = net.function(i);
    for (std::uint32_t code = 0; code < count; ++code) {
      images[code] |= static_cast<std::uint32_t>(f.eval(code)) << i;
    }
  }
  return images;
}

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + " capped at n <= " +
                        std::to_string(cap) + ", got n = " + std::to_string(n));
  }
}

}  // namespace

UpdateSchedule UpdateSchedule::parallel(int n) {
  if (n < 1 || n > 32) throw DomainError("schedule size out of range");
  return UpdateSchedule{{n == 32 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << n) - 1}};
}

UpdateSchedule UpdateSchedule::sequential(int n) {
  if (n < 1 || n > 32) throw DomainError("schedule size out of range");
  UpdateSchedule u;
  u.blocks.reserve(n);
  for (int i = 0; i < n; ++i) u.blocks.push_back(std::uint32_t{1} << i);
  return u;
}

UpdateSchedule UpdateSchedule::parse(std::string_view text, int n) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, 1, static_cast<int>(pos) + 1);
  };

  skip_ws();
  std::string_view rest = text.substr(pos);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) {
    rest.remove_suffix(1);
  }
  if (rest == "parallel") return parallel(n);
  if (rest == "sequential") return sequential(n);

  UpdateSchedule u;
  skip_ws();
  if (pos >= text.size()) throw fail("empty schedule text");
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '{') throw fail("expected '{'");
    ++pos;
    std::uint32_t mask = 0;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start) throw fail("expected an automaton index");
      if (pos - start > 9) throw fail("index too large");
      long long value = 0;
      for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
      if (value >= n) {
        pos = start;
        throw fail("automaton index " + std::to_string(value) +
                   " out of range (n=" + std::to_string(n) + ")");
      }
      mask |= std::uint32_t{1} << value;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != '}') throw fail("expected '}'");
    ++pos;
    u.blocks.push_back(mask);
  }
  u.validate(n);
  return u;
}

std::string UpdateSchedule::to_string() const {
  std::string out;
  for (std::uint32_t mask : blocks) out += mask_to_braces(mask);
  return out;
}

void UpdateSchedule::validate(int n) const {
  if (n < 1 || n > 32) throw DomainError("schedule size out of range");
  const std::uint32_t all =
      n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask : blocks) {
    if (mask == 0) throw DomainError("update sets must be non-empty");
    if (mask & ~all) {
      throw DomainError("update set " + mask_to_braces(mask) +
                        " exceeds network size " + std::to_string(n));
    }
  }
}

Configuration apply_update(const Network& net, const Configuration& x,
                           const std::vector<int>& w) {
  if (x.size() != net.size()) {
    throw DomainError("configuration size does not match network size");
  }
  if (w.empty()) throw DomainError("update sets must be non-empty");
  const std::uint32_t mask = mask_from_indices(w, net.size());
  const std::uint32_t next =
      apply_update_code(net, static_cast<std::uint32_t>(x.code()), mask);
  return Configuration(net.size(), next);
}

std::uint32_t apply_update_code(const Network& net, std::uint32_t code,
                                std::uint32_t w_mask) {
  if (w_mask == 0) throw DomainError("update sets must be non-empty");
  const int n = net.size();
  if (n < 32 && (w_mask >> n) != 0) {
    throw DomainError("update set exceeds network size " + std::to_string(n));
  }
  std::uint32_t image = 0;
  std::uint32_t rest = w_mask;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    image |= static_cast<std::uint32_t>(net.function(i).eval(code)) << i;
  }
  return (code & ~w_mask) | image;
}

Configuration apply_schedule(const Network& net, const UpdateSchedule& u,
                             const Configuration& x) {
  if (x.size() != net.size()) {
    throw DomainError("configuration size does not match network size");
  }
  const std::uint32_t next =
      apply_schedule_code(net, u, static_cast<std::uint32_t>(x.code()));
  return Configuration(net.size(), next);
}

std::uint32_t apply_schedule_code(const Network& net, const UpdateSchedule& u,
                                  std::uint32_t code) {
  u.validate(net.size());
  for (std::uint32_t mask : u.blocks) code = apply_update_code(net, code, mask);
  return code;
}

const char* to_string(UpdateMode m) {
  switch (m) {
    case UpdateMode::General:
      return "general";
    case UpdateMode::Asynchronous:
      return "asynchronous";
    default:
      return "deterministic";
  }
}

int TransitionGraph::out_degree() const {
  switch (mode_) {
    case UpdateMode::General:
      return static_cast<int>(config_count()) - 1;
    case UpdateMode::Asynchronous:
      return n_;
    default:
      return 1;
  }
}

std::uint32_t TransitionGraph::slot_label(int slot) const {
  switch (mode_) {
    case UpdateMode::General:
      return static_cast<std::uint32_t>(slot) + 1;
    case UpdateMode::Asynchronous:
      return std::uint32_t{1} << slot;
    default:
      throw DomainError("deterministic transitions carry no update-set label");
  }
}

TransitionGraph build_transition_graph(const Network& net, UpdateMode mode) {
  const int n = net.size();
  TransitionGraph g;
  g.n_ = n;
  g.mode_ = mode;
  const std::uint32_t count = std::uint32_t{1} << n;
  switch (mode) {
    case UpdateMode::General: {
      check_cap(n, kMaxGeneralGraphSize, "general transition graphs");
      const auto images = parallel_images(net);
      g.succ_.resize(static_cast<std::size_t>(count) * (count - 1));
      std::size_t at = 0;
      for (std::uint32_t code = 0; code < count; ++code) {
        for (std::uint32_t w = 1; w < count; ++w) {
          g.succ_[at++] = (code & ~w) | (images[code] & w);
        }
      }
      return g;
    }
    case UpdateMode::Asynchronous: {
      check_cap(n, kMaxAsynchronousGraphSize, "asynchronous transition graphs");
      const auto images = parallel_images(net);
      g.succ_.resize(static_cast<std::size_t>(count) * n);
      std::size_t at = 0;
      for (std::uint32_t code = 0; code < count; ++code) {
        for (int i = 0; i < n; ++i) {
          const std::uint32_t w = std::uint32_t{1} << i;
          g.succ_[at++] = (code & ~w) | (images[code] & w);
        }
      }
      return g;
    }
    default:
      throw DomainError("deterministic graphs need an update schedule");
  }
}

TransitionGraph build_transition_graph(const Network& net,
                                       const UpdateSchedule& schedule) {
  const int n = net.size();
  check_cap(n, kMaxDeterministicGraphSize, "deterministic transition graphs");
  schedule.validate(n);
  TransitionGraph g;
  g.n_ = n;
  g.mode_ = UpdateMode::Deterministic;
  g.schedule_ = schedule;
  const std::uint32_t count = std::uint32_t{1} << n;
  g.succ_.resize(count);
  for (std::uint32_t code = 0; code < count; ++code) {
    g.succ_[code] = apply_schedule_code(net, schedule, code);
  }
  return g;
}

std::string to_dot(const TransitionGraph& g) {
  const int n = g.size();
  std::string out = "digraph transitions {\n";
  for (std::uint32_t code = 0; code < g.config_count(); ++code) {
    out += "  \"" + Configuration(n, code).to_string() + "\";\n";
  }
  const int degree = g.out_degree();
  for (std::uint32_t code = 0; code < g.config_count(); ++code) {
    const std::string from = Configuration(n, code).to_string();
    if (g.mode() == UpdateMode::Deterministic) {
      out += "  \"" + from + "\" -> \"" +
             Configuration(n, g.successor(code, 0)).to_string() + "\";\n";
      continue;
    }
    std::map<std::uint32_t, std::string> merged;  // target -> label list
    for (int slot = 0; slot < degree; ++slot) {
      std::string& labels = merged[g.successor(code, slot)];
      if (!labels.empty()) labels += ',';
      labels += mask_to_braces(g.slot_label(slot));
    }
    for (const auto& [target, labels] : merged) {
      out += "  \"" + from + "\" -> \"" + Configuration(n, target).to_string() +
             "\" [label=\"" + labels + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

Sequentialisation is_sequentialisable(const Network& net, const Configuration& x,
                                      const std::vector<int>& w) {
  const int n = net.size();
  check_cap(n, kMaxAsynchronousGraphSize, "asynchronous reachability");
  if (x.size() != n) {
    throw DomainError("configuration size does not match network size");
  }
  if (w.empty()) throw DomainError("update sets must be non-empty");
  const std::uint32_t mask = mask_from_indices(w, n);
  const std::uint32_t start = static_cast<std::uint32_t>(x.code());
  const std::uint32_t target = apply_update_code(net, start, mask);
  if (target == start) return {true, {}};

  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::int32_t> pred(count, -1);
  std::vector<std::int8_t> via(count, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(count);
  queue.push_back(start);
  pred[start] = static_cast<std::int32_t>(start);

  std::vector<std::pair<std::uint32_t, int>> next;
  next.reserve(n);
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const std::uint32_t code = queue[head];
    next.clear();
    for (int i = 0; i < n; ++i) {
      next.emplace_back(apply_update_code(net, code, std::uint32_t{1} << i), i);
    }
    std::sort(next.begin(), next.end());  // ascending successor code
    for (const auto& [succ, i] : next) {
      if (pred[succ] >= 0) continue;
      pred[succ] = static_cast<std::int32_t>(code);
      via[succ] = static_cast<std::int8_t>(i);
      if (succ == target) {
        found = true;
        break;
      }
      queue.push_back(succ);
    }
  }
  if (!found) return {false, {}};

  std::vector<WitnessStep> path;
  for (std::uint32_t at = target; at != start;
       at = static_cast<std::uint32_t>(pred[at])) {
    path.push_back({via[at], at});
  }
  std::reverse(path.begin(), path.end());
  return {true, std::move(path)};
}

std::vector<std::pair<Network, SensitivityEvidence>> sensitivity_scan(int n) {
  if (n < 1) throw DomainError("network size must be at least 1");
  if (n > kMaxSensitivityScanSize) {
    throw CapacityError("sensitivity scan enumerates (2^(2^n))^n networks, "
                        "capped at n <= " +
                        std::to_string(kMaxSensitivityScanSize) + ", got n = " +
                        std::to_string(n));
  }

  const int nc = 1 << n;                              // configurations
  const std::uint32_t per_automaton = std::uint32_t{1} << nc;  // truth tables
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= per_automaton;

  std::vector<std::pair<Network, SensitivityEvidence>> hits;
  std::vector<std::uint32_t> tables(n);
  std::vector<std::uint32_t> images(nc);
  std::vector<std::uint32_t> reach_async(nc), reach_general(nc);

  auto closure = [&](std::vector<std::uint32_t>& reach) {
    // reach[x] starts as the direct-successor mask (plus x itself) and is
    // saturated by repeated propagation; nc is tiny here.
    for (bool changed = true; changed;) {
      changed = false;
      for (int x = 0; x < nc; ++x) {
        std::uint32_t acc = reach[x];
        std::uint32_t rest = acc;
        while (rest) {
          const int y = std::countr_zero(rest);
          rest &= rest - 1;
          acc |= reach[y];
        }
        if (acc != reach[x]) {
          reach[x] = acc;
          changed = true;
        }
      }
    }
  };
  auto recurrent_mask = [&](const std::vector<std::uint32_t>& reach) {
    std::uint32_t rec = 0;
    for (int x = 0; x < nc; ++x) {
      bool ok = true;
      std::uint32_t rest = reach[x];
      while (rest && ok) {
        const int y = std::countr_zero(rest);
        rest &= rest - 1;
        ok = (reach[y] >> x) & 1u;
      }
      if (ok) rec |= std::uint32_t{1} << x;
    }
    return rec;
  };
  auto members = [&](std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (int x = 0; x < nc; ++x) {
      if ((mask >> x) & 1u) out.push_back(static_cast<std::uint32_t>(x));
    }
    return out;
  };

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int i = 0; i < n; ++i) {
      tables[i] = static_cast<std::uint32_t>(idx >> (i * nc)) & (per_automaton - 1);
    }
    for (int x = 0; x < nc; ++x) {
      std::uint32_t img = 0;
      for (int i = 0; i < n; ++i) img |= ((tables[i] >> x) & 1u) << i;
      images[x] = img;
    }

    for (int x = 0; x < nc; ++x) {
      std::uint32_t adj = std::uint32_t{1} << x;
      for (int i = 0; i < n; ++i) {
        const std::uint32_t w = std::uint32_t{1} << i;
        adj |= std::uint32_t{1}
               << ((static_cast<std::uint32_t>(x) & ~w) | (images[x] & w));
      }
      reach_async[x] = adj;
    }
    closure(reach_async);

    for (int x = 0; x < nc; ++x) {
      std::uint32_t adj = std::uint32_t{1} << x;
      for (std::uint32_t w = 1; w < static_cast<std::uint32_t>(nc); ++w) {
        adj |= std::uint32_t{1}
               << ((static_cast<std::uint32_t>(x) & ~w) | (images[x] & w));
      }
      reach_general[x] = adj;
    }
    closure(reach_general);

    const std::uint32_t rec_async = recurrent_mask(reach_async);
    const std::uint32_t rec_general = recurrent_mask(reach_general);
    // Synchronism must destroy a limit behaviour: some configuration that is
    // recurrent asynchronously stops being recurrent in the general graph.
    // (Added transitions can only grow reachability, so a mere set difference
    // also catches networks where a transient configuration joins an
    // attractor; those keep their asynchronous limit behaviours.)
    if ((rec_async & ~rec_general) == 0) continue;

    bool found = false;
    SensitivityEvidence evidence;
    for (int x = 0; x < nc && !found; ++x) {
      for (std::uint32_t w = 1; w < static_cast<std::uint32_t>(nc); ++w) {
        if (std::popcount(w) < 2) continue;
        const std::uint32_t t =
            (static_cast<std::uint32_t>(x) & ~w) | (images[x] & w);
        if (!((reach_async[x] >> t) & 1u)) {
          evidence.transition_from = static_cast<std::uint32_t>(x);
          evidence.transition_update = w;
          evidence.transition_to = t;
          found = true;
          break;
        }
      }
    }
    if (!found) continue;

    evidence.asynchronous_recurrent = members(rec_async);
    evidence.general_recurrent = members(rec_general);

    std::vector<LocalFunction> functions;
    functions.reserve(n);
    for (int i = 0; i < n; ++i) {
      std::vector<bool> outputs(nc);
      for (int code = 0; code < nc; ++code) outputs[code] = (tables[i] >> code) & 1u;
      functions.push_back(LocalFunction::from_bits(n, outputs));
    }
    hits.emplace_back(Network(std::move(functions)), std::move(evidence));
  }
  return hits;
}

}  // namespace banet
