#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "banet/claims.hpp"
#include "banet/netcore.hpp"

namespace banet {

// A circulant GF(2) matrix of order n, given by the set of non-null first-row
// coefficients. Row i is the right-cyclic shift of row 0 by i, so the matrix
// entry at (i, j) is coeff((j - i) mod n). Coefficient m induces the arcs
// (i + m mod n, i); the canonical numbering keeps n-1 among the coefficients,
// which puts the circuit (i, i+1 mod n) under every network.
struct CirculantSpec {
  int n = 0;
  std::vector<int> coeffs;  // distinct, ascending, each in [0, n)

  CirculantSpec() = default;
  CirculantSpec(int size, std::vector<int> coefficients);

  int k() const { return static_cast<int>(coeffs.size()); }
  bool canonical() const;
  bool has_coeff(int m) const;

  static CirculantSpec parse(std::string_view text);
  std::string to_string() const;  // "circulant n=<n> coeffs=<j1,j2,...>"

  bool operator==(const CirculantSpec&) const = default;
};

// Truth-table network of the spec: f_i(x) = xor of x_j over the in-neighbours
// j = i + m mod n, m in coeffs. Requires the canonical numbering, k >= 2 and
// n >= k; arities are table-backed, so n is capped at kMaxTableSize.
Network make_circulant(const CirculantSpec& spec);

// Same, without the canonical-numbering requirement (symmetric networks of
// canonical specs need not carry coefficient n-1).
Network make_circulant_relaxed(const CirculantSpec& spec);

// All canonical specs of size n with k coefficients, in lexicographic order
// of the chosen non-forced coefficients. Count is C(n-1, k-1).
std::vector<CirculantSpec> enumerate_circulants(int n, int k);

// Spec of the transposed interaction matrix: coefficients (n - j) mod n.
CirculantSpec symmetric_network(const CirculantSpec& spec);

// For k = 2: the offset s != 1 with (i, i + s mod n) an arc for every i,
// i.e. s = (n - m) mod n for the non-forced coefficient m.
int interaction_step(const CirculantSpec& spec);

struct CircuitDecomposition {
  int coefficient = 0;
  int circuits = 0;  // gcd(n, coefficient), with gcd(n, 0) = n
  int length = 0;    // n / circuits

  bool operator==(const CircuitDecomposition&) const = default;
};

// One entry per non-null coefficient, ascending.
std::vector<CircuitDecomposition> circuit_decomposition(const CirculantSpec& spec);

// One parallel update: the matrix-vector product over GF(2), computed as the
// xor of rotated copies of x (one rotation per coefficient).
Configuration parallel_step(const CirculantSpec& spec, const Configuration& x);

// Rows x(0), ..., x(T) under the parallel mode; column i is the trace of
// automaton i.
struct SpaceTimeDiagram {
  std::vector<Configuration> rows;

  std::string to_text() const;  // '#' for 1, '.' for 0, automaton 0 leftmost
  std::string to_pbm() const;   // PBM P1, width n, height T+1, 1 rendered black
};

SpaceTimeDiagram space_time(const CirculantSpec& spec, const Configuration& x0,
                            int steps);

// Masks of automaton i: masks[t] is the set of automata at state 1 in the
// t-th parallel iterate of the unit configuration at i under the symmetric
// network. The state of automaton i after t steps is the xor of the initial
// states over masks[t].
struct MaskTable {
  int automaton = 0;
  std::vector<std::vector<int>> masks;  // masks[t], indices ascending
};

MaskTable mask_table(const CirculantSpec& spec, int i, int horizon);

// Xor of x0 over the mask of automaton i at time t; equals bit i of the t-th
// parallel iterate of x0.
bool eval_via_masks(const CirculantSpec& spec, const Configuration& x0, int i,
                    int t);

// Checks that the symmetric network's iterates of the unit configuration at i
// mirror the network's own iterates around i, for every t <= horizon.
struct SymmetryCheck {
  bool ok = true;
  std::optional<int> first_violation;
};

SymmetryCheck check_symmetry(const CirculantSpec& spec, int i, int horizon);

// Number of times the configuration halves into two identical
// semi-configurations; odd lengths (including 1) have degree 0.
int repetition_degree(const Configuration& x);

// Pass/fail report over the power-of-two size family n = 2^p with the
// self-loop interaction-step, plus the claims that hold for every step or
// every size. Per-claim preconditions that cannot be met are reported as
// skips, not thrown.
struct PowerTwoReport {
  int p = 0;
  int n = 0;
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  std::string to_text() const;
};

PowerTwoReport verify_power_two_suite(int p);

}  // namespace banet
