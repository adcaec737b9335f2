#include "cssmax/policy_tree.hpp"

#include <limits>

#include "cssmax/utility.hpp"

namespace cssmax {

namespace {

void validate_node(const PolicyNode& node, Mask path, const Instance& inst,
                   double budget) {
  if (node.item < 0 || node.item >= inst.item_count()) {
    throw ConfigError("policy node item index out of range");
  }
  if (mask_has(path, node.item)) {
    throw ConfigError("item repeats along a policy tree path: " +
                      inst.items[node.item]);
  }
  if (static_cast<int>(node.children.size()) != inst.state_count()) {
    throw ConfigError("policy node must have one child slot per state");
  }
  const Mask here = path | mask_bit(node.item);
  for (const auto& child : node.children) {
    if (child) {
      validate_node(*child, here, inst, budget);
    } else if (inst.cost->eval(here) > budget + kTol) {
      throw ConfigError("policy tree path exceeds the budget");
    }
  }
}

template <typename LeafFn>
void for_each_leaf_path(const PolicyNode* node, PartialRealization& d,
                        LeafFn&& fn) {
  if (node == nullptr) {
    fn(d);
    return;
  }
  for (int y = 0; y < static_cast<int>(node->children.size()); ++y) {
    PartialRealization next = d;
    next.observe(node->item, y);
    for_each_leaf_path(node->children[y].get(), next, fn);
  }
}

}  // namespace

void validate_policy(const PolicyTree& tree, const Instance& inst,
                     double budget) {
  if (tree.empty()) return;
  validate_node(*tree.root, 0, inst, budget);
}

PartialRealization trace_policy(const PolicyTree& tree, const Instance& inst,
                                const Realization& h) {
  if (h.item_count() != inst.item_count()) {
    throw PreconditionError("realization does not cover the item set");
  }
  PartialRealization d(inst.item_count());
  const PolicyNode* node = tree.root.get();
  while (node != nullptr) {
    const int y = h.state_of(node->item);
    if (y < 0 || y >= static_cast<int>(node->children.size())) {
      throw ConfigError("policy node missing the edge for an observed state");
    }
    d.observe(node->item, y);
    node = node->children[y].get();
  }
  return d;
}

double policy_cost(const PolicyTree& tree, const Instance& inst) {
  if (tree.empty()) return 0.0;
  double worst = 0.0;
  PartialRealization d(inst.item_count());
  for_each_leaf_path(tree.root.get(), d, [&](const PartialRealization& leaf) {
    worst = std::max(worst, inst.cost->eval(leaf.selected_mask()));
  });
  return worst;
}

PolicyValueReport worst_case_value(const PolicyTree& tree,
                                   const Instance& inst, WorstCaseMode mode,
                                   std::uint64_t realization_cap) {
  PolicyValueReport report;
  report.max_path_cost = policy_cost(tree, inst);

  if (tree.empty()) {
    report.worst_value = 0.0;
    report.worst_realization =
        Realization(std::vector<int>(inst.item_count(), 0));
    return report;
  }

  double worst = std::numeric_limits<double>::infinity();
  Realization witness;

  if (mode == WorstCaseMode::kLeafPaths) {
    if (!inst.utility->minimal_dependency_contract()) {
      throw PreconditionError(
          "leaf-path evaluation requires a minimal-dependency utility");
    }
    PartialRealization d(inst.item_count());
    for_each_leaf_path(tree.root.get(), d, [&](const PartialRealization& leaf) {
      const double value =
          inst.utility->eval_partial(leaf.selected_mask(), leaf);
      if (value < worst) {
        worst = value;
        // Extend the leaf path arbitrarily (state 0) into a full witness.
        std::vector<int> states(inst.item_count(), 0);
        for (const auto& [item, state] : leaf.observations()) {
          states[item] = state;
        }
        witness = Realization(std::move(states));
      }
    });
  } else {
    realization_count_or_throw(inst.item_count(), inst.state_count(),
                               realization_cap);
    for_each_realization(inst.item_count(), inst.state_count(),
                         [&](const Realization& h) {
                           const PartialRealization d =
                               trace_policy(tree, inst, h);
                           const double value =
                               inst.utility->eval_full(d.selected_mask(), h);
                           if (value < worst) {
                             worst = value;
                             witness = h;
                           }
                         });
  }

  report.worst_value = worst;
  report.worst_realization = std::move(witness);
  return report;
}

}  // namespace cssmax
