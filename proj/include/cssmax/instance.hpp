#ifndef CSSMAX_INSTANCE_HPP
#define CSSMAX_INSTANCE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cssmax/cost.hpp"
#include "cssmax/types.hpp"

namespace cssmax {

/// Total assignment of a state to every item: the hidden ground truth h.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<int> state_by_item)
      : state_by_item_(std::move(state_by_item)) {}

  int state_of(int item) const { return state_by_item_[item]; }
  int item_count() const { return static_cast<int>(state_by_item_.size()); }
  const std::vector<int>& states() const { return state_by_item_; }

  bool operator==(const Realization&) const = default;

 private:
  std::vector<int> state_by_item_;
};

/// Ordered observations (item, state) made so far; the policy's knowledge
/// state D. No item may be observed twice.
class PartialRealization {
 public:
  explicit PartialRealization(int item_count)
      : state_by_item_(item_count, -1) {}

  void observe(int item, int state) {
    if (item < 0 || item >= static_cast<int>(state_by_item_.size())) {
      throw PreconditionError("observed item out of range");
    }
    if (mask_has(selected_, item)) {
      throw PreconditionError("item observed twice in partial realization");
    }
    observations_.emplace_back(item, state);
    state_by_item_[item] = state;
    selected_ |= mask_bit(item);
  }

  Mask selected_mask() const { return selected_; }
  int size() const { return static_cast<int>(observations_.size()); }
  bool observed(int item) const { return mask_has(selected_, item); }

  /// State of an observed item; -1 if unobserved.
  int state_of(int item) const { return state_by_item_[item]; }

  const std::vector<std::pair<int, int>>& observations() const {
    return observations_;
  }

 private:
  std::vector<std::pair<int, int>> observations_;
  std::vector<int> state_by_item_;
  Mask selected_ = 0;
};

class UtilityModel;

/// Complete problem statement: item/state identifier lists, utility, cost,
/// and budget. Identifiers are opaque strings externally; all library
/// operations work on dense indices into these lists.
struct Instance {
  std::vector<std::string> items;
  std::vector<std::string> states;
  std::shared_ptr<const UtilityModel> utility;
  std::shared_ptr<const CostModel> cost;
  double budget = 0.0;

  int item_count() const { return static_cast<int>(items.size()); }
  int state_count() const { return static_cast<int>(states.size()); }
  int item_index(const std::string& id) const;
  int state_index(const std::string& id) const;
};

/// Validates the instance invariants (non-empty unique identifiers,
/// positive budget, models sized to the item set) and returns the instance.
Instance make_instance(std::vector<std::string> items,
                       std::vector<std::string> states,
                       std::shared_ptr<const UtilityModel> utility,
                       std::shared_ptr<const CostModel> cost, double budget);

/// Number of realizations |Y|^|X|, or nullopt if it exceeds the cap.
std::uint64_t realization_count_or_throw(int item_count, int state_count,
                                         std::uint64_t cap);

/// Enumerates all |Y|^|X| realizations in mixed-radix order (item 0 is the
/// least significant digit), invoking fn on each.
template <typename Fn>
void for_each_realization(int item_count, int state_count, Fn&& fn) {
  std::vector<int> states(item_count, 0);
  while (true) {
    fn(Realization(states));
    int i = 0;
    while (i < item_count && ++states[i] == state_count) {
      states[i] = 0;
      ++i;
    }
    if (i == item_count) break;
  }
}

/// delta(x|D): worst-case (over the next state) utility gain of selecting x
/// after observing D. Requires x unselected and a utility that supports
/// partial-realization evaluation.
double marginal_gain_delta(const Instance& inst, int item,
                           const PartialRealization& d);

}  // namespace cssmax

#endif  // CSSMAX_INSTANCE_HPP
