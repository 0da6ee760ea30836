#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "banet/netcore.hpp"

namespace banet {

// Expression over variables x0..x{n-1}, constants 0/1 and NOT/AND/OR/XOR.
struct Expr {
  enum class Op { Const, Var, Not, And, Or, Xor };

  Op op = Op::Const;
  bool value = false;      // Const
  int var = 0;             // Var
  std::vector<Expr> args;  // Not: 1 argument; connectives: 2 or more

  bool eval(std::uint64_t code) const;
};

// Parsed .ban source: declared size plus one expression per automaton.
struct NetworkSource {
  int n = 0;
  std::vector<Expr> lines;
};

// Text grammar (precedence NOT > AND > XOR > OR, parentheses override):
//   file  := {comment | blank} "n=<int>" {comment | blank | definition}
//   definition := <index> ":" expression
// Keywords !/not, &/and, |/or, ^/xor are case-insensitive; comment lines
// start with '#'.
NetworkSource parse_source(std::string_view text);

// Truth tables from evaluating each expression over all 2^n configurations.
Network compile_source(const NetworkSource& source);

Network parse_network(std::string_view text);

// Canonical .ban text; each function rendered as a xor of conjunctions of
// positive literals, so parsing the output reproduces the same tables.
std::string format_network(const Network& net);

// Dispatches on content: a one-line circulant spec or full .ban text.
Network load_network(std::string_view text);

enum class Polarity { Absent, Positive, Negative, Mixed };

// Syntactic occurrence polarities in the stored expression of one automaton.
// Variables under a xor act with both polarities once expanded and are
// reported Mixed.
std::vector<Polarity> literal_polarities(const NetworkSource& source,
                                         int automaton);

enum class Monotonicity { Increasing, Decreasing, Independent, NonMonotone };

const char* to_string(Monotonicity m);

// Codes (with automaton j at state 0) where raising x_j raises, resp.
// lowers, the function value.
struct MonotonicityWitness {
  std::uint64_t increase_at = 0;
  std::uint64_t decrease_at = 0;
};

Monotonicity local_monotonicity(const LocalFunction& f, int j);
Monotonicity local_monotonicity(const LocalFunction& f, int j,
                                std::optional<MonotonicityWitness>& witness);

struct MonotonicityReport {
  int n = 0;
  bool monotone = true;
  std::vector<Monotonicity> classes;  // classes[i * n + j]
  // One witness per non-monotone (automaton, variable) pair, ascending.
  std::vector<std::tuple<int, int, MonotonicityWitness>> witnesses;

  Monotonicity at(int i, int j) const { return classes[static_cast<std::size_t>(i) * n + j]; }
};

MonotonicityReport network_monotone(const Network& net);

}  // namespace banet
