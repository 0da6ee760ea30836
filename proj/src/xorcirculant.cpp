#include "banet/xorcirculant.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "banet/sampling.hpp"

namespace banet {

namespace {

Configuration repeat_twice(const Configuration& half) {
  const int h = half.size();
  Configuration x(2 * h);
  for (int j = 0; j < h; ++j) {
    if (half.bit(j)) {
      x.set_bit(j, true);
      x.set_bit(j + h, true);
    }
  }
  return x;
}

Configuration alternating(int n, bool start) {
  Configuration x(n);
  for (int i = start ? 0 : 1; i < n; i += 2) x.set_bit(i, true);
  return x;
}

std::vector<Configuration> seed_pool(int n, std::size_t sample_count,
                                     std::uint64_t salt) {
  std::vector<Configuration> seeds;
  if (n <= 16) {
    seeds.reserve(std::size_t{1} << n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      seeds.emplace_back(n, code);
    }
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ salt);
    seeds.reserve(sample_count);
    for (std::size_t s = 0; s < sample_count; ++s) {
      seeds.push_back(random_configuration(n, rng));
    }
  }
  return seeds;
}

}  // namespace

CirculantSpec::CirculantSpec(int size, std::vector<int> coefficients)
    : n(size), coeffs(std::move(coefficients)) {
  if (n < 1 || n > kMaxSimulationSize) {
    throw CapacityError("circulant size must be in [1, " +
                        std::to_string(kMaxSimulationSize) + "], got " +
                        std::to_string(n));
  }
  std::sort(coeffs.begin(), coeffs.end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0 || coeffs[i] >= n) {
      throw DomainError("coefficient index " + std::to_string(coeffs[i]) +
                        " out of range for size " + std::to_string(n));
    }
    if (i > 0 && coeffs[i] == coeffs[i - 1]) {
      throw DomainError("duplicate coefficient " + std::to_string(coeffs[i]));
    }
  }
}

bool CirculantSpec::canonical() const { return has_coeff(n - 1); }

bool CirculantSpec::has_coeff(int m) const {
  return std::binary_search(coeffs.begin(), coeffs.end(), m);
}

CirculantSpec CirculantSpec::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, 1, static_cast<int>(pos) + 1);
  };
  auto expect_word = [&](std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) != word) {
      throw fail("expected '" + std::string(word) + "'");
    }
    pos += word.size();
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw fail("expected an integer");
    if (pos - start > 9) throw fail("integer too large");
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
    return value;
  };

  expect_word("circulant");
  expect_word("n=");
  const int n = parse_int();
  expect_word("coeffs=");
  std::vector<int> coeffs;
  coeffs.push_back(parse_int());
  skip_ws();
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    coeffs.push_back(parse_int());
    skip_ws();
  }
  skip_ws();
  if (pos != text.size()) throw fail("unexpected trailing text");
  try {
    return CirculantSpec(n, std::move(coeffs));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string CirculantSpec::to_string() const {
  std::string out = "circulant n=" + std::to_string(n) + " coeffs=";
  std::vector<int> order;
  if (canonical()) {
    order.push_back(n - 1);
    for (int m : coeffs) {
      if (m != n - 1) order.push_back(m);
    }
  } else {
    order = coeffs;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(order[i]);
  }
  return out;
}

Network make_circulant(const CirculantSpec& spec) {
  if (spec.k() < 2) {
    throw DomainError("k-xor circulant networks need k >= 2, got k = " +
                      std::to_string(spec.k()));
  }
  if (spec.n < spec.k()) {
    throw DomainError("size " + std::to_string(spec.n) +
                      " is smaller than k = " + std::to_string(spec.k()));
  }
  if (!spec.canonical()) {
    throw DomainError(
        "spec lacks coefficient n-1 (non-canonical numbering); use "
        "make_circulant_relaxed for symmetric networks");
  }
  return make_circulant_relaxed(spec);
}

Network make_circulant_relaxed(const CirculantSpec& spec) {
  if (spec.coeffs.empty()) throw DomainError("circulant needs at least one coefficient");
  if (spec.n > kMaxTableSize) {
    throw CapacityError("truth-table networks capped at n <= " +
                        std::to_string(kMaxTableSize) + ", got n = " +
                        std::to_string(spec.n) +
                        " (use parallel_step for larger sizes)");
  }
  const int n = spec.n;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<LocalFunction> functions;
  functions.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t in_mask = 0;
    for (int m : spec.coeffs) in_mask |= std::uint64_t{1} << ((i + m) % n);
    std::vector<std::uint64_t> words(std::max<std::uint64_t>(1, count / 64), 0);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (std::popcount(code & in_mask) & 1) {
        words[code >> 6] |= std::uint64_t{1} << (code & 63);
      }
    }
    functions.emplace_back(n, std::move(words));
  }
  return Network(std::move(functions));
}

std::vector<CirculantSpec> enumerate_circulants(int n, int k) {
  if (k < 2 || k > n) {
    throw DomainError("enumeration needs 2 <= k <= n, got k = " +
                      std::to_string(k) + ", n = " + std::to_string(n));
  }
  std::vector<CirculantSpec> out;
  std::vector<int> pick(k - 1);
  std::iota(pick.begin(), pick.end(), 0);
  const int limit = n - 1;  // choose from {0, ..., n-2}
  while (true) {
    std::vector<int> coeffs = pick;
    coeffs.push_back(n - 1);
    out.emplace_back(n, std::move(coeffs));
    // next combination in lexicographic order
    int i = k - 2;
    while (i >= 0 && pick[i] == limit - (k - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

CirculantSpec symmetric_network(const CirculantSpec& spec) {
  std::vector<int> coeffs;
  coeffs.reserve(spec.coeffs.size());
  for (int m : spec.coeffs) coeffs.push_back((spec.n - m) % spec.n);
  return CirculantSpec(spec.n, std::move(coeffs));
}

int interaction_step(const CirculantSpec& spec) {
  if (spec.k() != 2) {
    throw DomainError("interaction-step is defined for k = 2, got k = " +
                      std::to_string(spec.k()));
  }
  if (!spec.canonical()) {
    throw DomainError("interaction-step needs the canonical numbering");
  }
  const int m = spec.coeffs[0];  // ascending order puts n-1 last
  return (spec.n - m) % spec.n;
}

std::vector<CircuitDecomposition> circuit_decomposition(const CirculantSpec& spec) {
  std::vector<CircuitDecomposition> out;
  out.reserve(spec.coeffs.size());
  for (int j : spec.coeffs) {
    const int g = j == 0 ? spec.n : std::gcd(spec.n, j);
    out.push_back({j, g, spec.n / g});
  }
  return out;
}

Configuration parallel_step(const CirculantSpec& spec, const Configuration& x) {
  if (x.size() != spec.n) {
    throw DomainError("configuration size " + std::to_string(x.size()) +
                      " does not match circulant size " + std::to_string(spec.n));
  }
  Configuration acc(spec.n);
  for (int m : spec.coeffs) acc ^= rotate(x, spec.n - m);
  return acc;
}

std::string SpaceTimeDiagram::to_text() const {
  std::string out;
  for (const auto& row : rows) {
    std::string line = row.to_string();
    for (char& c : line) c = (c == '1') ? '#' : '.';
    out += line;
    out += '\n';
  }
  return out;
}

std::string SpaceTimeDiagram::to_pbm() const {
  const int width = rows.empty() ? 0 : rows.front().size();
  std::string out = "P1\n" + std::to_string(width) + " " +
                    std::to_string(rows.size()) + "\n";
  for (const auto& row : rows) {
    const std::string line = row.to_string();
    for (std::size_t start = 0; start < line.size(); start += 70) {
      out += line.substr(start, 70);
      out += '\n';
    }
  }
  return out;
}

SpaceTimeDiagram space_time(const CirculantSpec& spec, const Configuration& x0,
                            int steps) {
  if (steps < 0) throw DomainError("step count must be non-negative");
  SpaceTimeDiagram diagram;
  diagram.rows.reserve(static_cast<std::size_t>(steps) + 1);
  diagram.rows.push_back(x0);
  for (int t = 0; t < steps; ++t) {
    diagram.rows.push_back(parallel_step(spec, diagram.rows.back()));
  }
  return diagram;
}

MaskTable mask_table(const CirculantSpec& spec, int i, int horizon) {
  if (horizon < 0) throw DomainError("horizon must be non-negative");
  const CirculantSpec sym = symmetric_network(spec);
  Configuration state = Configuration::unit(spec.n, i);
  MaskTable table;
  table.automaton = i;
  table.masks.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int t = 0; t <= horizon; ++t) {
    std::vector<int> mask;
    for (int j = 0; j < spec.n; ++j) {
      if (state.bit(j)) mask.push_back(j);
    }
    table.masks.push_back(std::move(mask));
    if (t < horizon) state = parallel_step(sym, state);
  }
  return table;
}

bool eval_via_masks(const CirculantSpec& spec, const Configuration& x0, int i,
                    int t) {
  if (x0.size() != spec.n) {
    throw DomainError("configuration size does not match circulant size");
  }
  if (t < 0) throw DomainError("time must be non-negative");
  const CirculantSpec sym = symmetric_network(spec);
  Configuration mask = Configuration::unit(spec.n, i);
  for (int step = 0; step < t; ++step) mask = parallel_step(sym, mask);
  return dot_parity(x0, mask);
}

SymmetryCheck check_symmetry(const CirculantSpec& spec, int i, int horizon) {
  if (horizon < 0) throw DomainError("horizon must be non-negative");
  const CirculantSpec sym = symmetric_network(spec);
  Configuration forward = Configuration::unit(spec.n, i);
  Configuration mirrored = forward;
  for (int t = 0; t <= horizon; ++t) {
    if (mirrored != symmetric_conf(forward, i)) return {false, t};
    if (t < horizon) {
      forward = parallel_step(spec, forward);
      mirrored = parallel_step(sym, mirrored);
    }
  }
  return {true, std::nullopt};
}

int repetition_degree(const Configuration& x) {
  int len = x.size();
  int degree = 0;
  while (len % 2 == 0) {
    const int half = len / 2;
    bool repeated = true;
    for (int j = 0; j < half; ++j) {
      if (x.bit(j) != x.bit(j + half)) {
        repeated = false;
        break;
      }
    }
    if (!repeated) break;
    ++degree;
    len = half;
  }
  return degree;
}

bool PowerTwoReport::all_passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) {
    return c.status == ClaimStatus::Fail;
  });
}

std::string PowerTwoReport::to_text() const {
  std::string out =
      "power-two suite p=" + std::to_string(p) + " n=" + std::to_string(n) + "\n";
  for (const auto& claim : claims) {
    out += format_claim_line(claim);
    out += '\n';
  }
  out += all_passed() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

PowerTwoReport verify_power_two_suite(int p) {
  if (p < 1) throw DomainError("suite needs p >= 1");
  if ((1 << p) > kMaxSimulationSize) {
    throw CapacityError("suite capped at n <= " +
                        std::to_string(kMaxSimulationSize));
  }
  const int n = 1 << p;
  PowerTwoReport report;
  report.p = p;
  report.n = n;

  const CirculantSpec self_loop(n, {n - 1, 0});
  const Configuration zero(n);
  const auto seeds = seed_pool(n, 1000, static_cast<std::uint64_t>(n));
  const bool exhaustive = n <= 16;

  // Step-2^q identity: F^(2^q)(x) = rotate(x, 2^q) xor x for the self-loop
  // step; holds for every size, power of two or not.
  {
    std::vector<int> sizes{n};
    for (int extra : {3, 5, 6, 7, 12}) {
      if (extra != n) sizes.push_back(extra);
    }
    bool ok = true;
    for (int nn : sizes) {
      const CirculantSpec spec(nn, {nn - 1, 0});
      int q_max = 0;
      while ((1 << (q_max + 1)) <= 2 * nn) ++q_max;
      const auto pool = seed_pool(nn, 200, 0xabc0 + static_cast<std::uint64_t>(nn));
      for (const auto& x0 : pool) {
        Configuration x = x0;
        int t = 0;
        for (int q = 0; q <= q_max && ok; ++q) {
          const int target = 1 << q;
          while (t < target) {
            x = parallel_step(spec, x);
            ++t;
          }
          if (x != (rotate(x0, target) ^ x0)) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    std::string size_list;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i > 0) size_list += ',';
      size_list += std::to_string(sizes[i]);
    }
    report.claims.push_back({"L3-step", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                             "sizes=" + size_list +
                                 " (non-power-of-two sizes included)"});
  }

  // Repetition degree >= log2(n)-1 empties in at most two steps, whatever the
  // interaction-step.
  {
    const std::vector<Configuration> high_degree{
        zero, Configuration::ones(n), alternating(n, true), alternating(n, false)};
    bool ok = true;
    int step_count = 0;
    for (const auto& spec : enumerate_circulants(n, 2)) {
      ++step_count;
      for (const auto& x0 : high_degree) {
        Configuration x = x0;
        bool reached = x == zero;
        for (int t = 0; t < 2 && !reached; ++t) {
          x = parallel_step(spec, x);
          reached = x == zero;
        }
        if (!reached) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    report.claims.push_back({"P5-degree", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                             "n=" + std::to_string(n) +
                                 " steps=" + std::to_string(step_count) +
                                 " configs=4"});
  }

  // Convergence to zero within n steps, exact at n for odd-weight seeds.
  {
    bool within_ok = true;
    bool exact_ok = true;
    std::size_t odd_count = 0;
    for (const auto& x0 : seeds) {
      Configuration x = x0;
      int first_zero = x == zero ? 0 : -1;
      for (int t = 1; t <= n && first_zero < 0; ++t) {
        x = parallel_step(self_loop, x);
        if (x == zero) first_zero = t;
      }
      if (first_zero < 0) {
        within_ok = false;
        break;
      }
      if (x0.weight() % 2 == 1) {
        ++odd_count;
        if (first_zero != n) exact_ok = false;
      }
    }
    const std::string pool_note =
        std::to_string(seeds.size()) + (exhaustive ? "(exhaustive)" : "(sampled)");
    report.claims.push_back(
        {"T1-power2", within_ok ? ClaimStatus::Pass : ClaimStatus::Fail,
         "n=" + std::to_string(n) + " seeds=" + pool_note +
             " bound=" + std::to_string(n)});
    report.claims.push_back(
        {"P6-odd", (within_ok && exact_ok) ? ClaimStatus::Pass : ClaimStatus::Fail,
         "n=" + std::to_string(n) + " odd-seeds=" + std::to_string(odd_count) +
             " exact=" + std::to_string(n)});
  }

  // Repeated seeds track the half-size network.
  if (p < 2) {
    report.claims.push_back({"L4-half", ClaimStatus::Skip,
                             "needs n >= 4 (half-size network must have two "
                             "coefficients)"});
  } else {
    const int h = n / 2;
    const CirculantSpec half_spec(h, {h - 1, 0});
    const auto half_seeds = seed_pool(h, 256, 0x4a11 + static_cast<std::uint64_t>(h));
    bool ok = true;
    for (const auto& half0 : half_seeds) {
      Configuration whole = repeat_twice(half0);
      Configuration half = half0;
      for (int t = 0; t <= 2 * n && ok; ++t) {
        if (whole != repeat_twice(half)) ok = false;
        if (t < 2 * n) {
          whole = parallel_step(self_loop, whole);
          half = parallel_step(half_spec, half);
        }
      }
      if (!ok) break;
    }
    report.claims.push_back({"L4-half", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                             "n=" + std::to_string(n) + " half=" + std::to_string(h) +
                                 " half-seeds=" + std::to_string(half_seeds.size()) +
                                 " horizon=" + std::to_string(2 * n)});
  }

  return report;
}

}  // namespace banet
