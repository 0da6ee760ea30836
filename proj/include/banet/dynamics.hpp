#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "banet/netcore.hpp"

namespace banet {

// Memory envelopes: the general graph stores 2^n - 1 labelled arcs per
// configuration, the asynchronous graph n, the deterministic graph one.
inline constexpr int kMaxGeneralGraphSize = 10;
inline constexpr int kMaxAsynchronousGraphSize = 16;
inline constexpr int kMaxDeterministicGraphSize = 24;
inline constexpr int kMaxSensitivityScanSize = 3;

// Ordered blocks of automata, applied left to right. Each block updates its
// automata simultaneously from the configuration left by the previous blocks.
// The parallel schedule is the single block of all automata; sequential
// schedules have one singleton block per automaton.
struct UpdateSchedule {
  std::vector<std::uint32_t> blocks;  // non-empty update-set masks

  static UpdateSchedule parallel(int n);
  static UpdateSchedule sequential(int n);
  // "{0}{1,2}" block syntax, or the keywords "parallel" / "sequential".
  static UpdateSchedule parse(std::string_view text, int n);

  std::string to_string() const;
  void validate(int n) const;
  bool operator==(const UpdateSchedule&) const = default;
};

// F_W: automata in w take their function value on the pre-update x,
// everything else keeps its state. w must be non-empty.
Configuration apply_update(const Network& net, const Configuration& x,
                           const std::vector<int>& w);
std::uint32_t apply_update_code(const Network& net, std::uint32_t code,
                                std::uint32_t w_mask);

// Composition of the schedule blocks; the empty schedule is the identity.
Configuration apply_schedule(const Network& net, const UpdateSchedule& u,
                             const Configuration& x);
std::uint32_t apply_schedule_code(const Network& net, const UpdateSchedule& u,
                                  std::uint32_t code);

enum class UpdateMode { General, Asynchronous, Deterministic };

const char* to_string(UpdateMode m);

// Fully materialised successor structure over the 2^n configurations. Every
// labelled transition is stored distinctly: slot s of a configuration holds
// the target of update set slot_label(s).
class TransitionGraph {
 public:
  int size() const { return n_; }
  UpdateMode mode() const { return mode_; }
  std::uint32_t config_count() const { return std::uint32_t{1} << n_; }
  int out_degree() const;
  std::uint32_t successor(std::uint32_t code, int slot) const {
    return succ_[static_cast<std::size_t>(code) * out_degree() + slot];
  }
  std::uint32_t slot_label(int slot) const;  // general / asynchronous modes
  const UpdateSchedule* schedule() const {
    return schedule_ ? &*schedule_ : nullptr;
  }

 private:
  friend TransitionGraph build_transition_graph(const Network&, UpdateMode);
  friend TransitionGraph build_transition_graph(const Network&,
                                                const UpdateSchedule&);

  TransitionGraph() = default;

  int n_ = 0;
  UpdateMode mode_ = UpdateMode::General;
  std::optional<UpdateSchedule> schedule_;
  std::vector<std::uint32_t> succ_;
};

TransitionGraph build_transition_graph(const Network& net, UpdateMode mode);
TransitionGraph build_transition_graph(const Network& net,
                                       const UpdateSchedule& schedule);

// Vertices named by bitstring (automaton 0 leftmost); arcs with identical
// endpoints are merged into one arc with comma-separated update-set labels.
// Deterministic graphs omit labels.
std::string to_dot(const TransitionGraph& g);

struct WitnessStep {
  int automaton = 0;
  std::uint32_t config = 0;

  bool operator==(const WitnessStep&) const = default;
};

// Whether some chain of asynchronous transitions from x ends exactly at
// F_W(x); the witness is a shortest such chain (empty when F_W(x) = x).
struct Sequentialisation {
  bool possible = false;
  std::vector<WitnessStep> path;
};

Sequentialisation is_sequentialisable(const Network& net, const Configuration& x,
                                      const std::vector<int>& w);

struct SensitivityEvidence {
  std::uint32_t transition_from = 0;
  std::uint32_t transition_update = 0;  // mask with at least two automata
  std::uint32_t transition_to = 0;
  std::vector<std::uint32_t> asynchronous_recurrent;
  std::vector<std::uint32_t> general_recurrent;
};

// Every size-n network that (a) has a synchronous transition no asynchronous
// chain can reproduce and (b) loses an asynchronously-recurrent configuration
// in the general graph. Exhaustive over all (2^(2^n))^n networks.
std::vector<std::pair<Network, SensitivityEvidence>> sensitivity_scan(int n);

}  // namespace banet
