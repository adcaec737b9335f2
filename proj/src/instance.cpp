#include "cssmax/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "cssmax/utility.hpp"

namespace cssmax {

int Instance::item_index(const std::string& id) const {
  auto it = std::find(items.begin(), items.end(), id);
  if (it == items.end()) throw ConfigError("unknown item identifier: " + id);
  return static_cast<int>(it - items.begin());
}

int Instance::state_index(const std::string& id) const {
  auto it = std::find(states.begin(), states.end(), id);
  if (it == states.end()) throw ConfigError("unknown state identifier: " + id);
  return static_cast<int>(it - states.begin());
}

Instance make_instance(std::vector<std::string> items,
                       std::vector<std::string> states,
                       std::shared_ptr<const UtilityModel> utility,
                       std::shared_ptr<const CostModel> cost, double budget) {
  if (items.empty()) throw ConfigError("instance requires at least one item");
  if (states.empty()) throw ConfigError("instance requires at least one state");
  if (static_cast<int>(items.size()) > kMaxMaskItems) {
    throw ConfigError("instance exceeds the supported item count");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : items) {
    if (!seen.insert(id).second) {
      throw ConfigError("duplicate item identifier: " + id);
    }
  }
  seen.clear();
  for (const auto& id : states) {
    if (!seen.insert(id).second) {
      throw ConfigError("duplicate state identifier: " + id);
    }
  }
  if (!(budget > 0.0)) throw ConfigError("budget must be > 0");
  if (!utility) throw ConfigError("instance requires a utility model");
  if (!cost) throw ConfigError("instance requires a cost model");
  if (utility->item_count() != static_cast<int>(items.size()) ||
      utility->state_count() != static_cast<int>(states.size())) {
    throw ConfigError("utility model does not match the item/state sets");
  }
  if (cost->item_count() != static_cast<int>(items.size())) {
    throw ConfigError("cost model does not match the item set");
  }
  return Instance{std::move(items), std::move(states), std::move(utility),
                  std::move(cost), budget};
}

std::uint64_t realization_count_or_throw(int item_count, int state_count,
                                         std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < item_count; ++i) {
    if (total > cap / static_cast<std::uint64_t>(state_count)) {
      throw CapError("instance too large for exact evaluation: |Y|^|X| > cap");
    }
    total *= static_cast<std::uint64_t>(state_count);
  }
  return total;
}

double marginal_gain_delta(const Instance& inst, int item,
                           const PartialRealization& d) {
  if (d.observed(item)) {
    throw PreconditionError("delta requires an unselected item");
  }
  const UtilityModel& u = *inst.utility;
  if (!u.minimal_dependency_contract()) {
    throw PreconditionError(
        "delta is undefined for utilities without minimal dependency");
  }
  const double base = u.eval_partial(d.selected_mask(), d);
  double worst = 0.0;
  bool first = true;
  for (int y = 0; y < inst.state_count(); ++y) {
    PartialRealization next = d;
    next.observe(item, y);
    const double gain = u.eval_partial(next.selected_mask(), next) - base;
    if (first || gain < worst) {
      worst = gain;
      first = false;
    }
  }
  return worst;
}

}  // namespace cssmax
