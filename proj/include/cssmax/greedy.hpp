#ifndef CSSMAX_GREEDY_HPP
#define CSSMAX_GREEDY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cssmax/policy_tree.hpp"

namespace cssmax {

enum class PolicyKind {
  kCostAverage,      // pi_1: maximize delta(x|D) / Delta c(x|X_D)
  kCostInsensitive,  // pi_2: maximize delta(x|D)
  kCombinedHalf,     // pi_1/2: pi_1 at K/2, then pi_2 at K/2 from scratch
};

std::string policy_kind_name(PolicyKind kind);
std::optional<PolicyKind> parse_policy_kind(const std::string& name);

/// One repeat-loop iteration of a greedy run: the item considered, its
/// criterion value, and whether it was affordable (and hence selected).
struct GreedyDecision {
  int considered_item = -1;
  double ratio_or_gain = 0.0;
  bool affordable = false;
  bool selected = false;
  std::optional<int> observed_state;
};

struct PolicyRunTrace {
  std::vector<GreedyDecision> decisions;
  Mask final_selected = 0;
  double final_cost = 0.0;
};

/// Result of one online run of the combined half-budget policy.
struct CombinedRunResult {
  Mask s1 = 0;     // selected by pi_1 at budget K/2
  Mask s2 = 0;     // selected by pi_2 at budget K/2, fresh start
  Mask union_set = 0;
  double value_on_realization = 0.0;
};

/// Algorithm 1 run against the realization h: repeatedly pick the item of U
/// maximizing delta(x|D)/Delta c(x|X_D) (ties to the lowest index), select
/// it when still affordable, and drop it from U either way.
PolicyRunTrace run_greedy_cost_average(const Instance& inst,
                                       const Realization& h, double budget);

/// Algorithm 2 run: identical skeleton with criterion delta(x|D).
PolicyRunTrace run_greedy_cost_insensitive(const Instance& inst,
                                           const Realization& h,
                                           double budget);

/// pi_1 at budget K/2, then pi_2 at budget K/2 starting from an empty
/// observation history (re-selected items observe the same h and pay their
/// cost again within step 2's accounting). Returns both parts and the value
/// of the union under h.
CombinedRunResult run_combined_half(const Instance& inst,
                                    const Realization& h);

/// Unrolls an online policy into its full tree by simulating it against
/// every state branch; the trace of the result under any h matches the
/// online run. Throws CapError when the branch count would exceed the cap.
PolicyTree materialize_policy_tree(const Instance& inst, PolicyKind kind,
                                   double budget,
                                   std::uint64_t realization_cap =
                                       kRealizationCap);

/// Materializes both greedy trees at the full budget, evaluates f_worst
/// exactly for each, and returns the better kind with its value; ties go
/// to pi_2.
std::pair<PolicyKind, double> best_of_two(const Instance& inst);

}  // namespace cssmax

#endif  // CSSMAX_GREEDY_HPP
