#include "cssmax/greedy.hpp"

#include <utility>

#include "cssmax/utility.hpp"

namespace cssmax {

namespace {

struct Candidate {
  int item = -1;
  double value = 0.0;
};

double criterion_value(const Instance& inst, int item,
                       const PartialRealization& d, bool cost_average) {
  const double gain = marginal_gain_delta(inst, item, d);
  if (!cost_average) return gain;
  const double inc = cost_increment(*inst.cost, item, d.selected_mask());
  if (inc <= kTol) {
    throw CostViolationError(
        "cost model produced a non-positive increment for item " +
        inst.items[item]);
  }
  return gain / inc;
}

/// Argmax of the greedy criterion over U = items not in `removed`; ties go
/// to the lowest item index. Returns item -1 when U is empty.
Candidate pick_candidate(const Instance& inst, const PartialRealization& d,
                         Mask removed, bool cost_average) {
  Candidate best;
  for (int x = 0; x < inst.item_count(); ++x) {
    if (mask_has(removed, x)) continue;
    const double v = criterion_value(inst, x, d, cost_average);
    if (best.item < 0 || v > best.value + kTol) {
      best = {x, v};
    }
  }
  return best;
}

bool affordable(const Instance& inst, Mask selected, int item, double budget) {
  return inst.cost->eval(selected | mask_bit(item)) <= budget + kTol;
}

PolicyRunTrace run_greedy(const Instance& inst, const Realization& h,
                          double budget, bool cost_average) {
  if (!(budget > 0.0)) throw PreconditionError("budget must be > 0");
  if (h.item_count() != inst.item_count()) {
    throw PreconditionError("realization does not cover the item set");
  }
  PolicyRunTrace trace;
  PartialRealization d(inst.item_count());
  Mask removed = 0;
  const Mask all = mask_full(inst.item_count());
  while (removed != all) {
    const Candidate pick = pick_candidate(inst, d, removed, cost_average);
    removed |= mask_bit(pick.item);
    GreedyDecision decision;
    decision.considered_item = pick.item;
    decision.ratio_or_gain = pick.value;
    decision.affordable = affordable(inst, d.selected_mask(), pick.item, budget);
    decision.selected = decision.affordable;
    if (decision.selected) {
      const int y = h.state_of(pick.item);
      d.observe(pick.item, y);
      decision.observed_state = y;
    }
    trace.decisions.push_back(decision);
  }
  trace.final_selected = d.selected_mask();
  trace.final_cost = inst.cost->eval(trace.final_selected);
  return trace;
}

/// Recursive unroll of a single greedy phase. At each exhausted U the
/// `on_leaf` continuation supplies the subtree hanging below (null for the
/// plain policies, the pi_2 phase for the combined policy).
template <typename LeafFn>
std::unique_ptr<PolicyNode> build_greedy(const Instance& inst,
                                         PartialRealization d, Mask removed,
                                         double budget, bool cost_average,
                                         const LeafFn& on_leaf) {
  const Mask all = mask_full(inst.item_count());
  while (removed != all) {
    const Candidate pick = pick_candidate(inst, d, removed, cost_average);
    removed |= mask_bit(pick.item);
    if (!affordable(inst, d.selected_mask(), pick.item, budget)) continue;
    auto node = std::make_unique<PolicyNode>();
    node->item = pick.item;
    node->children.resize(inst.state_count());
    for (int y = 0; y < inst.state_count(); ++y) {
      PartialRealization next = d;
      next.observe(pick.item, y);
      node->children[y] =
          build_greedy(inst, std::move(next), removed, budget, cost_average,
                       on_leaf);
    }
    return node;
  }
  return on_leaf(d);
}

/// The pi_2 phase of the combined policy. Decisions condition on the fresh
/// history d2 only, but an item already observed along the tree path keeps
/// its known state instead of branching again.
std::unique_ptr<PolicyNode> build_combined_phase2(const Instance& inst,
                                                  PartialRealization d2,
                                                  Mask removed,
                                                  const PartialRealization& path,
                                                  double half_budget) {
  const Mask all = mask_full(inst.item_count());
  while (removed != all) {
    const Candidate pick = pick_candidate(inst, d2, removed, false);
    removed |= mask_bit(pick.item);
    if (!affordable(inst, d2.selected_mask(), pick.item, half_budget)) continue;
    if (path.observed(pick.item)) {
      d2.observe(pick.item, path.state_of(pick.item));
      continue;
    }
    auto node = std::make_unique<PolicyNode>();
    node->item = pick.item;
    node->children.resize(inst.state_count());
    for (int y = 0; y < inst.state_count(); ++y) {
      PartialRealization next_d2 = d2;
      next_d2.observe(pick.item, y);
      PartialRealization next_path = path;
      next_path.observe(pick.item, y);
      node->children[y] = build_combined_phase2(inst, std::move(next_d2),
                                                removed, next_path,
                                                half_budget);
    }
    return node;
  }
  return nullptr;
}

}  // namespace

std::string policy_kind_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCostAverage:
      return "pi1";
    case PolicyKind::kCostInsensitive:
      return "pi2";
    case PolicyKind::kCombinedHalf:
      return "combined";
  }
  return "unknown";
}

std::optional<PolicyKind> parse_policy_kind(const std::string& name) {
  if (name == "pi1") return PolicyKind::kCostAverage;
  if (name == "pi2") return PolicyKind::kCostInsensitive;
  if (name == "combined") return PolicyKind::kCombinedHalf;
  return std::nullopt;
}

PolicyRunTrace run_greedy_cost_average(const Instance& inst,
                                       const Realization& h, double budget) {
  return run_greedy(inst, h, budget, true);
}

PolicyRunTrace run_greedy_cost_insensitive(const Instance& inst,
                                           const Realization& h,
                                           double budget) {
  return run_greedy(inst, h, budget, false);
}

CombinedRunResult run_combined_half(const Instance& inst,
                                    const Realization& h) {
  const double half = inst.budget / 2.0;
  CombinedRunResult result;
  result.s1 = run_greedy_cost_average(inst, h, half).final_selected;
  result.s2 = run_greedy_cost_insensitive(inst, h, half).final_selected;
  result.union_set = result.s1 | result.s2;
  result.value_on_realization = inst.utility->eval_full(result.union_set, h);
  return result;
}

PolicyTree materialize_policy_tree(const Instance& inst, PolicyKind kind,
                                   double budget,
                                   std::uint64_t realization_cap) {
  realization_count_or_throw(inst.item_count(), inst.state_count(),
                             realization_cap);
  if (!(budget > 0.0)) throw PreconditionError("budget must be > 0");
  PolicyTree tree;
  switch (kind) {
    case PolicyKind::kCostAverage:
    case PolicyKind::kCostInsensitive: {
      const bool cost_average = kind == PolicyKind::kCostAverage;
      tree.root = build_greedy(
          inst, PartialRealization(inst.item_count()), 0, budget, cost_average,
          [](const PartialRealization&) -> std::unique_ptr<PolicyNode> {
            return nullptr;
          });
      break;
    }
    case PolicyKind::kCombinedHalf: {
      const double half = budget / 2.0;
      tree.root = build_greedy(
          inst, PartialRealization(inst.item_count()), 0, half, true,
          [&](const PartialRealization& path) {
            return build_combined_phase2(
                inst, PartialRealization(inst.item_count()), 0, path, half);
          });
      break;
    }
  }
  return tree;
}

std::pair<PolicyKind, double> best_of_two(const Instance& inst) {
  const PolicyTree t1 =
      materialize_policy_tree(inst, PolicyKind::kCostAverage, inst.budget);
  const PolicyTree t2 =
      materialize_policy_tree(inst, PolicyKind::kCostInsensitive, inst.budget);
  const double v1 = worst_case_value(t1, inst).worst_value;
  const double v2 = worst_case_value(t2, inst).worst_value;
  if (v1 > v2 + kTol) return {PolicyKind::kCostAverage, v1};
  return {PolicyKind::kCostInsensitive, v2};
}

}  // namespace cssmax
