#include "cssmax/cost.hpp"

#include <cmath>

namespace cssmax {

namespace {

void require_mask_range(int n) {
  if (n < 1 || n > kMaxMaskItems) {
    throw ConfigError("item count out of range: " + std::to_string(n));
  }
}

void validate_inner_monotone(const InnerSetFunction& g) {
  const int n = g.item_count();
  if (n > 8) return;  // validated on demand above the structural cap
  if (std::abs(g.eval(0)) > kTol) {
    throw ConfigError("inner set function must have g(empty) = 0");
  }
  const Mask full = mask_full(n);
  for (Mask s = 0; s <= full; ++s) {
    for (int x = 0; x < n; ++x) {
      if (mask_has(s, x)) continue;
      if (g.eval(s | mask_bit(x)) < g.eval(s) - kTol) {
        throw ConfigError("inner set function is not monotone");
      }
    }
  }
}

}  // namespace

ModularWeightsInner::ModularWeightsInner(std::vector<double> weights)
    : weights_(std::move(weights)) {
  require_mask_range(static_cast<int>(weights_.size()));
  for (double w : weights_) {
    if (w < 0.0) throw ConfigError("inner modular weights must be >= 0");
  }
}

double ModularWeightsInner::eval(Mask s) const {
  double total = 0.0;
  for (int i = 0; i < item_count(); ++i) {
    if (mask_has(s, i)) total += weights_[i];
  }
  return total;
}

CoverageCountInner::CoverageCountInner(int universe_size,
                                       std::vector<std::vector<int>> cells)
    : universe_size_(universe_size), cells_(std::move(cells)) {
  require_mask_range(static_cast<int>(cells_.size()));
  if (universe_size_ <= 0) throw ConfigError("universe size must be positive");
  for (const auto& region : cells_) {
    for (int cell : region) {
      if (cell < 0 || cell >= universe_size_) {
        throw ConfigError("coverage cell index out of universe");
      }
    }
  }
}

double CoverageCountInner::eval(Mask s) const {
  std::vector<bool> covered(universe_size_, false);
  int count = 0;
  for (int i = 0; i < item_count(); ++i) {
    if (!mask_has(s, i)) continue;
    for (int cell : cells_[i]) {
      if (!covered[cell]) {
        covered[cell] = true;
        ++count;
      }
    }
  }
  return count;
}

ModularCost::ModularCost(std::vector<double> weights)
    : weights_(std::move(weights)) {
  require_mask_range(static_cast<int>(weights_.size()));
  for (double w : weights_) {
    if (!(w > 0.0)) throw ConfigError("modular cost weights must be > 0");
  }
}

double ModularCost::eval(Mask s) const {
  double total = 0.0;
  for (int i = 0; i < item_count(); ++i) {
    if (mask_has(s, i)) total += weights_[i];
  }
  return total;
}

TableCost::TableCost(int item_count, std::vector<double> by_mask)
    : n_(item_count), by_mask_(std::move(by_mask)) {
  require_mask_range(n_);
  if (n_ > 20) throw ConfigError("table cost limited to 20 items");
  if (by_mask_.size() != (std::size_t{1} << n_)) {
    throw ConfigError("table cost must list every subset exactly once");
  }
}

double TableCost::eval(Mask s) const {
  if (s >= by_mask_.size()) throw PreconditionError("subset out of item range");
  return by_mask_[s];
}

PolyOfGCost::PolyOfGCost(std::vector<double> coefficients,
                         std::shared_ptr<const InnerSetFunction> inner)
    : coefficients_(std::move(coefficients)), inner_(std::move(inner)) {
  if (!inner_) throw ConfigError("poly_of_g requires an inner set function");
  if (coefficients_.empty()) {
    throw ConfigError("poly_of_g requires at least one coefficient");
  }
  double total = 0.0;
  for (double a : coefficients_) {
    if (a < 0.0) throw ConfigError("poly_of_g coefficients must be >= 0");
    total += a;
  }
  if (!(total > 0.0)) {
    throw ConfigError("poly_of_g coefficients must not all be zero");
  }
  validate_inner_monotone(*inner_);
}

double PolyOfGCost::eval(Mask s) const {
  const double g = inner_->eval(s);
  double power = 1.0;
  double total = 0.0;
  for (double a : coefficients_) {
    power *= g;
    total += a * power;
  }
  return total;
}

ExpOfGCost::ExpOfGCost(double alpha,
                       std::shared_ptr<const InnerSetFunction> inner)
    : alpha_(alpha), inner_(std::move(inner)) {
  if (!inner_) throw ConfigError("exp_of_g requires an inner set function");
  if (!(alpha_ > 0.0)) throw ConfigError("exp_of_g alpha must be > 0");
  validate_inner_monotone(*inner_);
}

double ExpOfGCost::eval(Mask s) const {
  return alpha_ * (std::exp(inner_->eval(s)) - 1.0);
}

CombinedCost::CombinedCost(std::shared_ptr<const CostModel> c1,
                           std::shared_ptr<const CostModel> c2, double alpha,
                           double beta)
    : c1_(std::move(c1)), c2_(std::move(c2)), alpha_(alpha), beta_(beta) {
  if (!c1_ || !c2_) throw ConfigError("combined cost requires two components");
  if (c1_->item_count() != c2_->item_count()) {
    throw ConfigError("combined cost components must share the item set");
  }
  if (alpha_ < 0.0 || beta_ < 0.0) {
    throw ConfigError("combination multipliers must be >= 0");
  }
  if (!(alpha_ + beta_ > 0.0)) {
    throw ConfigError("degenerate combination: alpha + beta must be > 0");
  }
}

double CombinedCost::eval(Mask s) const {
  return alpha_ * c1_->eval(s) + beta_ * c2_->eval(s);
}

double cost_increment(const CostModel& c, int item, Mask s) {
  if (item < 0 || item >= c.item_count()) {
    throw PreconditionError("item index out of range");
  }
  if (mask_has(s, item)) {
    throw PreconditionError("cost increment requires x not in S");
  }
  return c.eval(s | mask_bit(item)) - c.eval(s);
}

std::shared_ptr<const CostModel> combine_costs(
    std::shared_ptr<const CostModel> c1, std::shared_ptr<const CostModel> c2,
    double alpha, double beta) {
  return std::make_shared<CombinedCost>(std::move(c1), std::move(c2), alpha,
                                        beta);
}

}  // namespace cssmax
