#ifndef CSSMAX_BRUTE_FORCE_HPP
#define CSSMAX_BRUTE_FORCE_HPP

#include <utility>

#include "cssmax/policy_tree.hpp"

namespace cssmax {

/// Enumeration limits for the exact optimal-policy search. The search is
/// doubly exponential, so the defaults are deliberately small; callers may
/// raise them explicitly (the CLI does so only behind loud flags).
struct BruteForceCaps {
  int max_items = 6;
  int max_states = 3;
};

/// Exact optimal worst-case policy via recursion with memoization on the
/// (selected set, observed states) pair: V(D) = max(f(X_D, D), max over
/// affordable x of min over y of V(D + (x,y))). Returns an optimal tree and
/// f_worst(pi*). The explicit stop option never strictly helps for
/// pointwise monotone utilities but is kept for safety.
std::pair<PolicyTree, double> brute_force_optimal(
    const Instance& inst, double budget, BruteForceCaps caps = {});

}  // namespace cssmax

#endif  // CSSMAX_BRUTE_FORCE_HPP
