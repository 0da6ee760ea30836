#include <random>
#include <vector>

#include "banet/netcore.hpp"
#include "doctest.h"

using namespace banet;

namespace {

Configuration conf(const char* bits) { return Configuration::from_string(bits); }

// Independent rotation oracle: plain index arithmetic, no word tricks.
Configuration naive_rotate(const Configuration& x, long long r) {
  const int n = x.size();
  Configuration out(n);
  for (int i = 0; i < n; ++i) {
    const int j = static_cast<int>((((i + r) % n) + n) % n);
    if (x.bit(i)) out.set_bit(j, true);
  }
  return out;
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("configuration basics") {
  const Configuration x = conf("0110");
  CHECK(x.size() == 4);
  CHECK(x.weight() == 2);
  CHECK(x.code() == 6);
  CHECK(x.to_string() == "0110");
  CHECK(Configuration(4, 6) == x);
  CHECK(Configuration::unit(4, 2) == conf("0010"));
  CHECK(Configuration::ones(3) == conf("111"));

  CHECK_THROWS_AS(Configuration(0), CapacityError);
  CHECK_THROWS_AS(Configuration(kMaxSimulationSize + 1), CapacityError);
  CHECK_THROWS_AS(Configuration(2, 4), DomainError);
  CHECK_THROWS_AS(Configuration::from_string("01x"), DomainError);
  CHECK_THROWS_AS(Configuration::unit(3, 3), DomainError);
}

TEST_CASE("flip") {
  CHECK(flip(conf("000"), {1}) == conf("010"));
  CHECK(flip(conf("101"), {0, 2}) == conf("000"));
  CHECK(flip(conf("11"), {}) == conf("11"));
  CHECK_THROWS_AS(flip(conf("11"), {2}), DomainError);

  // involution, exhaustively up to n = 6
  for (int n = 1; n <= 6; ++n) {
    for (unsigned code = 0; code < (1u << n); ++code) {
      const Configuration x(n, code);
      for (unsigned w = 0; w < (1u << n); ++w) {
        const auto indices = mask_indices(w);
        CHECK(flip(flip(x, indices), indices) == x);
      }
    }
  }
}

TEST_CASE("density") {
  CHECK(density(conf("10000")) == Ratio(1, 5));
  CHECK(density(conf("000")) == Ratio(0));
  CHECK(density(conf("111")) == Ratio(1));
  CHECK(density(conf("0110")) == Ratio(1, 2));
  CHECK(Ratio(2, 4) == Ratio(1, 2));
  CHECK(Ratio(1, 5).to_string() == "1/5");
  CHECK(Ratio(0, 7).to_string() == "0");

  // complement: density(flip(x, V)) = 1 - density(x)
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Configuration x(n);
    for (int i = 0; i < n; ++i) x.set_bit(i, rng() & 1u);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    const Ratio d = density(x);
    CHECK(density(flip(x, all)) == Ratio(d.den - d.num, d.den));
  }
}

TEST_CASE("rotate") {
  CHECK(rotate(conf("100"), 1) == conf("010"));
  CHECK(rotate(conf("100"), 3) == conf("100"));
  CHECK(rotate(conf("1100"), -1) == conf("1001"));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 200);  // crosses word boundaries
    Configuration x(n);
    for (int i = 0; i < n; ++i) x.set_bit(i, rng() & 1u);
    const long long r = static_cast<long long>(rng() % 500) - 250;
    CHECK(rotate(x, r) == naive_rotate(x, r));
    CHECK(rotate(rotate(x, r), -r) == x);
    CHECK(rotate(x, n) == x);
  }
}

TEST_CASE("symmetric_conf") {
  CHECK(symmetric_conf(conf("1000"), 1) == conf("0010"));
  CHECK(symmetric_conf(conf("1000"), 0) == conf("1000"));
  CHECK(symmetric_conf(symmetric_conf(conf("110"), 0), 0) == conf("110"));
  CHECK_THROWS_AS(symmetric_conf(conf("10"), 2), DomainError);

  // involution for all sizes up to 8
  for (int n = 1; n <= 8; ++n) {
    for (unsigned code = 0; code < (1u << n); ++code) {
      const Configuration x(n, code);
      for (int i = 0; i < n; ++i) {
        CHECK(symmetric_conf(symmetric_conf(x, i), i) == x);
        CHECK(symmetric_conf(x, i).bit(i) == x.bit(i));  // mirror centre fixed
      }
    }
  }
}

TEST_CASE("local function support") {
  const LocalFunction xor2 = LocalFunction::from_bits(2, {false, true, true, false});
  CHECK(support_of(xor2) == std::vector<int>{0, 1});

  CHECK(support_of(LocalFunction::constant(2, true)).empty());

  // x0 or (x1 and not x1) collapses to x0
  const LocalFunction proj = LocalFunction::from_bits(2, {false, true, false, true});
  CHECK(support_of(proj) == std::vector<int>{0});

  CHECK_THROWS_AS(LocalFunction::from_bits({true, false, true}), DomainError);
  CHECK_THROWS_AS(LocalFunction::from_bits(3, {true, false}), DomainError);
  CHECK_THROWS_AS(LocalFunction(2, std::vector<std::uint64_t>{1, 2}), DomainError);
}

TEST_CASE("support is invariant under flip conjugation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<bool> bits(std::size_t{1} << n);
    for (auto&& b : bits) b = rng() & 1u;
    const LocalFunction f = LocalFunction::from_bits(n, bits);
    for (int j = 0; j < n; ++j) {
      std::vector<bool> conjugated(bits.size());
      for (std::size_t code = 0; code < bits.size(); ++code) {
        conjugated[code] = bits[code ^ (std::size_t{1} << j)];
      }
      CHECK(support_of(LocalFunction::from_bits(n, conjugated)) == f.support());
    }
  }
}

TEST_CASE("interaction graph") {
  // one negation automaton: a self-loop
  const Network negation({LocalFunction::from_bits(1, {true, false})});
  CHECK(interaction_graph(negation).arcs ==
        std::vector<std::pair<int, int>>{{0, 0}});

  // all-constant network: no arcs
  const Network constants({LocalFunction::constant(2, false),
                           LocalFunction::constant(2, true)});
  CHECK(interaction_graph(constants).arcs.empty());

  // f_i = x_{i-1} xor x_i on four automata
  std::vector<LocalFunction> fs;
  for (int i = 0; i < 4; ++i) {
    std::vector<bool> bits(16);
    for (unsigned code = 0; code < 16; ++code) {
      bits[code] = ((code >> ((i + 3) % 4)) ^ (code >> i)) & 1u;
    }
    fs.push_back(LocalFunction::from_bits(4, bits));
  }
  const InteractionGraph g = interaction_graph(Network(fs));
  CHECK(g.arcs.size() == 8);
  for (int i = 0; i < 4; ++i) {
    CHECK(g.has_arc((i + 3) % 4, i));
    CHECK(g.has_arc(i, i));
  }
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(Network({}), DomainError);
  CHECK_THROWS_AS(Network({LocalFunction::constant(2, false)}), DomainError);
  const Network net({LocalFunction::constant(2, false),
                     LocalFunction::constant(2, false)});
  CHECK(net.size() == 2);
  CHECK_THROWS_AS(net.function(2), DomainError);
}
