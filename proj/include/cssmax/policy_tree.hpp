#ifndef CSSMAX_POLICY_TREE_HPP
#define CSSMAX_POLICY_TREE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cssmax/instance.hpp"

namespace cssmax {

/// Decision-tree encoding of a deterministic policy: each node selects an
/// item, each state has its own child subtree, a null child is a leaf
/// (the policy stops on that branch). An empty tree (null root) is legal
/// and selects nothing.
struct PolicyNode {
  int item = -1;
  std::vector<std::unique_ptr<PolicyNode>> children;  // one slot per state
};

struct PolicyTree {
  std::unique_ptr<PolicyNode> root;

  bool empty() const { return root == nullptr; }
};

/// Exact worst-case evaluation of a policy tree.
struct PolicyValueReport {
  double worst_value = 0.0;
  Realization worst_realization;  // witness attaining the minimum
  double max_path_cost = 0.0;     // c(pi)
};

/// Structural validation: every internal node has one child slot per state,
/// no item repeats along a root-to-leaf path, items in range, and every
/// path's item-set cost is within the budget. Throws on violation.
void validate_policy(const PolicyTree& tree, const Instance& inst,
                     double budget);

/// Descends the tree under the total realization h, recording the
/// observation sequence; the selected set of the result is x^pi_h.
PartialRealization trace_policy(const PolicyTree& tree, const Instance& inst,
                                const Realization& h);

/// c(pi) = max over root-to-leaf paths of the path item-set cost.
double policy_cost(const PolicyTree& tree, const Instance& inst);

enum class WorstCaseMode {
  kLeafPaths,         // minimize f over leaf partial realizations
  kFullEnumeration,   // minimize over all |Y|^|X| realizations
};

/// f_worst(pi) = min over realizations h of f(x^pi_h, h), with a witness.
/// Leaf-path mode is exact for minimal-dependency utilities and visits one
/// term per leaf; full enumeration is the slow cross-check and requires
/// |Y|^|X| within the cap.
PolicyValueReport worst_case_value(
    const PolicyTree& tree, const Instance& inst,
    WorstCaseMode mode = WorstCaseMode::kLeafPaths,
    std::uint64_t realization_cap = kRealizationCap);

}  // namespace cssmax

#endif  // CSSMAX_POLICY_TREE_HPP
