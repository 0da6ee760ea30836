#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "banet/dynamics.hpp"
#include "banet/netcore.hpp"

namespace banet {

enum class AttractorKind { StableConfiguration, StableOscillation, LimitCycle };

// Terminal strongly connected component of a transition graph. Singletons are
// stable configurations; larger ones are stable oscillations, or limit cycles
// (period = size) when the graph is deterministic. Basin sizes are defined
// for deterministic graphs only.
struct Attractor {
  AttractorKind kind = AttractorKind::StableConfiguration;
  std::vector<std::uint32_t> members;  // sorted ascending
  std::optional<std::uint64_t> basin;

  std::uint64_t size() const { return members.size(); }
  std::uint64_t period() const { return members.size(); }
};

// All terminal SCCs of g, ordered by smallest member code.
std::vector<Attractor> find_attractors(const TransitionGraph& g);

// Union of the attractor member sets, sorted.
std::vector<std::uint32_t> recurrent_configurations(const TransitionGraph& g);

// Trajectory profile of one start under a deterministic schedule, computed by
// cycle detection on the successor function without materialising the graph.
struct OrbitSummary {
  Configuration start;
  std::uint64_t transient = 0;  // steps to the first recurrent configuration
  std::uint64_t period = 1;
  std::vector<std::uint32_t> cycle;  // attractor members in visit order
};

OrbitSummary orbit(const Network& net, const UpdateSchedule& u,
                   const Configuration& start);

// Exhaustive orbit statistics over every configuration.
struct ConvergenceProfile {
  std::uint64_t t_star = 0;  // maximal transient
  std::uint64_t p_star = 1;  // period reached from the unit configuration at 0
  std::uint32_t slowest_start = 0;  // smallest code attaining t_star
  std::map<std::uint64_t, std::uint64_t> period_census;  // period -> starts
  bool unit_attains_t_star = false;   // some one-automaton seed is slowest
  bool periods_divide_p_star = false;
};

ConvergenceProfile convergence_profile(const Network& net,
                                       const UpdateSchedule& u);

std::string attractor_report_text(const TransitionGraph& g,
                                  const std::vector<Attractor>& attractors);
std::string attractor_report_json(const TransitionGraph& g,
                                  const std::vector<Attractor>& attractors);

}  // namespace banet
