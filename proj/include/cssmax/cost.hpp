#ifndef CSSMAX_COST_HPP
#define CSSMAX_COST_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cssmax/types.hpp"

namespace cssmax {

/// Monotone non-negative set function g with g(empty) = 0, used as the inner
/// function of polynomial and exponential cost constructions.
class InnerSetFunction {
 public:
  virtual ~InnerSetFunction() = default;
  virtual double eval(Mask s) const = 0;
  virtual int item_count() const = 0;
  virtual std::string kind() const = 0;
};

/// g(S) = sum of per-item weights, weights > 0.
class ModularWeightsInner final : public InnerSetFunction {
 public:
  explicit ModularWeightsInner(std::vector<double> weights);
  double eval(Mask s) const override;
  int item_count() const override { return static_cast<int>(weights_.size()); }
  std::string kind() const override { return "modular_weights"; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// g(S) = number of distinct cells covered by the items of S.
class CoverageCountInner final : public InnerSetFunction {
 public:
  CoverageCountInner(int universe_size, std::vector<std::vector<int>> cells);
  double eval(Mask s) const override;
  int item_count() const override { return static_cast<int>(cells_.size()); }
  std::string kind() const override { return "coverage_count"; }
  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

 private:
  int universe_size_;
  std::vector<std::vector<int>> cells_;  // per item, sorted unique cell ids
};

/// Cost set function over item subsets. Values are immutable after
/// construction and evaluation is pure; structural axioms (c(empty)=0,
/// strict monotonicity, triangle inequality) are verified separately by
/// check_cost_axioms.
class CostModel {
 public:
  virtual ~CostModel() = default;
  virtual double eval(Mask s) const = 0;
  virtual int item_count() const = 0;
  virtual std::string kind() const = 0;
};

class ModularCost final : public CostModel {
 public:
  explicit ModularCost(std::vector<double> weights);
  double eval(Mask s) const override;
  int item_count() const override { return static_cast<int>(weights_.size()); }
  std::string kind() const override { return "modular"; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Explicit table over all 2^n subsets. Construction rejects partial tables.
class TableCost final : public CostModel {
 public:
  TableCost(int item_count, std::vector<double> by_mask);
  double eval(Mask s) const override;
  int item_count() const override { return n_; }
  std::string kind() const override { return "table"; }

 private:
  int n_;
  std::vector<double> by_mask_;
};

/// c(S) = sum_i a_i * g(S)^i with non-negative coefficients, not all zero.
class PolyOfGCost final : public CostModel {
 public:
  PolyOfGCost(std::vector<double> coefficients,
              std::shared_ptr<const InnerSetFunction> inner);
  double eval(Mask s) const override;
  int item_count() const override { return inner_->item_count(); }
  std::string kind() const override { return "poly_of_g"; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const InnerSetFunction& inner() const { return *inner_; }

 private:
  std::vector<double> coefficients_;  // a_1 .. a_n
  std::shared_ptr<const InnerSetFunction> inner_;
};

/// c(S) = alpha * (e^{g(S)} - 1). The -1 shift keeps c(empty) = 0; all
/// increments Delta c are unchanged relative to the unshifted form, so the
/// cost-sensitive submodularity of g with respect to c is unaffected.
class ExpOfGCost final : public CostModel {
 public:
  ExpOfGCost(double alpha, std::shared_ptr<const InnerSetFunction> inner);
  double eval(Mask s) const override;
  int item_count() const override { return inner_->item_count(); }
  std::string kind() const override { return "exp_of_g"; }
  double alpha() const { return alpha_; }
  const InnerSetFunction& inner() const { return *inner_; }

 private:
  double alpha_;
  std::shared_ptr<const InnerSetFunction> inner_;
};

/// alpha*c1(S) + beta*c2(S).
class CombinedCost final : public CostModel {
 public:
  CombinedCost(std::shared_ptr<const CostModel> c1,
               std::shared_ptr<const CostModel> c2, double alpha, double beta);
  double eval(Mask s) const override;
  int item_count() const override { return c1_->item_count(); }
  std::string kind() const override { return "combined"; }

 private:
  std::shared_ptr<const CostModel> c1_, c2_;
  double alpha_, beta_;
};

/// Delta c(x|S) = c(S u {x}) - c(S). Requires x not in S.
double cost_increment(const CostModel& c, int item, Mask s);

/// Weighted sum of two cost models over the same item set; alpha+beta must
/// be positive.
std::shared_ptr<const CostModel> combine_costs(
    std::shared_ptr<const CostModel> c1, std::shared_ptr<const CostModel> c2,
    double alpha, double beta);

}  // namespace cssmax

#endif  // CSSMAX_COST_HPP
