#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "banet/errors.hpp"

namespace banet {

// Hard size caps. Anything that materialises 2^n entries (truth tables,
// transition graphs, exhaustive sweeps) is bounded by kMaxTableSize; plain
// word-packed simulation of circulant networks goes up to kMaxSimulationSize.
inline constexpr int kMaxTableSize = 24;
inline constexpr int kMaxSimulationSize = 4096;

// Exact fraction in lowest terms, den > 0.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t value) : num(value), den(1) {}  // NOLINT: implicit from integers
  Ratio(std::int64_t n, std::int64_t d);

  bool operator==(const Ratio&) const = default;
  std::string to_string() const;
};

// State of all n automata. Bit i is the state of automaton i; bits are packed
// into 64-bit words with automaton 0 at the least significant position, so
// code() == sum of bit(i) * 2^i.
class Configuration {
 public:
  explicit Configuration(int n);
  Configuration(int n, std::uint64_t code);

  static Configuration zeros(int n) { return Configuration(n); }
  static Configuration ones(int n);
  static Configuration unit(int n, int i);
  static Configuration from_string(std::string_view text);

  int size() const { return n_; }
  bool bit(int i) const;
  void set_bit(int i, bool value);
  int weight() const;
  std::uint64_t code() const;
  std::string to_string() const;  // automaton 0 leftmost

  Configuration& operator^=(const Configuration& other);
  friend Configuration operator^(Configuration lhs, const Configuration& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const Configuration&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_index(int i) const;

  friend Configuration rotate(const Configuration& x, long long r);

  int n_;
  std::vector<std::uint64_t> words_;
};

// x with every automaton of w negated; w is treated as a set.
Configuration flip(const Configuration& x, const std::vector<int>& w);

// Fraction of automata at state 1, exact.
Ratio density(const Configuration& x);

// y with y[(i + r) mod n] = x[i]; r may be negative.
Configuration rotate(const Configuration& x, long long r);

// Mirror of x around automaton i: result[j] = x[(2i - j) mod n].
Configuration symmetric_conf(const Configuration& x, int i);

// Parity of the AND of two equal-length configurations (GF(2) dot product).
bool dot_parity(const Configuration& a, const Configuration& b);

// Local transition function of one automaton, stored as a full truth table
// over the 2^n configuration codes. The support (set of automata the function
// effectively depends on) is derived from the table at construction.
class LocalFunction {
 public:
  LocalFunction(int n, std::vector<std::uint64_t> table_words);

  static LocalFunction from_bits(const std::vector<bool>& outputs);
  static LocalFunction from_bits(int n, const std::vector<bool>& outputs);
  static LocalFunction constant(int n, bool value);

  int arity() const { return n_; }
  bool eval(std::uint64_t code) const {
    return (table_[code >> 6] >> (code & 63)) & 1u;
  }
  bool eval(const Configuration& x) const;
  const std::vector<int>& support() const { return support_; }
  const std::vector<std::uint64_t>& table() const { return table_; }

  bool operator==(const LocalFunction& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> table_;
  std::vector<int> support_;
};

// Effective dependencies of f: the automata j for which some configuration x
// has f(x) != f(x with automaton j negated).
std::vector<int> support_of(const LocalFunction& f);

// A Boolean automata network: one local function per automaton, all with the
// same arity context n.
class Network {
 public:
  explicit Network(std::vector<LocalFunction> functions);

  int size() const { return n_; }
  const LocalFunction& function(int i) const;
  const std::vector<LocalFunction>& functions() const { return functions_; }

  bool operator==(const Network&) const = default;

 private:
  int n_;
  std::vector<LocalFunction> functions_;
};

// Digraph with an arc (j, i) exactly when j is in the support of f_i.
struct InteractionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted ascending

  bool has_arc(int from, int to) const;
  bool operator==(const InteractionGraph&) const = default;
};

InteractionGraph interaction_graph(const Network& net);

}  // namespace banet
