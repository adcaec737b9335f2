#ifndef CSSMAX_UTILITY_HPP
#define CSSMAX_UTILITY_HPP

#include <memory>
#include <string>
#include <vector>

#include "cssmax/instance.hpp"
#include "cssmax/types.hpp"

namespace cssmax {

/// Utility f(S, h) over a selected set S and a (possibly partial)
/// realization. Shipped utilities satisfy minimal dependency: f(S, .)
/// reads only the states of items in S, so evaluation on a partial
/// realization covering S is well defined.
class UtilityModel {
 public:
  virtual ~UtilityModel() = default;

  /// f(S, h) for a total realization.
  virtual double eval_full(Mask s, const Realization& h) const = 0;

  /// f(S, D) for a partial realization with S a subset of selected(D).
  double eval_partial(Mask s, const PartialRealization& d) const;

  virtual int item_count() const = 0;
  virtual int state_count() const = 0;
  virtual std::string kind() const = 0;

  /// Whether the model guarantees minimal dependency by construction. The
  /// library refuses delta evaluation for models that do not.
  virtual bool minimal_dependency_contract() const { return true; }

 protected:
  /// f(S, states) where states[x] is valid for every x in S. Items outside
  /// S may carry -1; implementations must not read them.
  virtual double eval_states(Mask s, const std::vector<int>& states) const = 0;
  friend class VersionSpaceUtility;
};

/// f(S, h) = sum over x in S of w(x, h(x)).
class ModularUtility final : public UtilityModel {
 public:
  /// w indexed as w[item][state], all entries >= 0.
  explicit ModularUtility(std::vector<std::vector<double>> w);
  double eval_full(Mask s, const Realization& h) const override;
  int item_count() const override { return static_cast<int>(w_.size()); }
  int state_count() const override { return static_cast<int>(w_[0].size()); }
  std::string kind() const override { return "modular"; }
  double weight(int item, int state) const { return w_[item][state]; }

 protected:
  double eval_states(Mask s, const std::vector<int>& states) const override;

 private:
  std::vector<std::vector<double>> w_;
};

/// f(S, h) = |union over x in S of R_{x, h(x)}| over a finite cell universe.
class CoverageUtility final : public UtilityModel {
 public:
  /// regions indexed as regions[item][state] = cell ids within the universe.
  CoverageUtility(int universe_size,
                  std::vector<std::vector<std::vector<int>>> regions);
  double eval_full(Mask s, const Realization& h) const override;
  int item_count() const override { return static_cast<int>(regions_.size()); }
  int state_count() const override {
    return static_cast<int>(regions_[0].size());
  }
  std::string kind() const override { return "coverage"; }
  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<std::vector<int>>>& regions() const {
    return regions_;
  }

 protected:
  double eval_states(Mask s, const std::vector<int>& states) const override;

 private:
  int universe_size_;
  std::vector<std::vector<std::vector<int>>> regions_;
};

/// Version space reduction: f(S, h) = total prior mass of hypotheses that
/// disagree with h on at least one item of S.
class VersionSpaceUtility final : public UtilityModel {
 public:
  /// Explicit hypothesis class (each a total labeling) with a prior summing
  /// to 1 within tolerance.
  VersionSpaceUtility(int item_count, int state_count,
                      std::vector<Realization> hypotheses,
                      std::vector<double> prior);

  /// Uniform prior over all |Y|^|X| labelings.
  static std::shared_ptr<const VersionSpaceUtility> uniform_full_class(
      int item_count, int state_count);

  double eval_full(Mask s, const Realization& h) const override;
  int item_count() const override { return n_items_; }
  int state_count() const override { return n_states_; }
  std::string kind() const override { return "vsr"; }

  const std::vector<Realization>& hypotheses() const { return hypotheses_; }
  const std::vector<double>& prior() const { return prior_; }

  /// Prior mass of hypotheses consistent with every observation of D.
  double consistent_mass(const PartialRealization& d) const;

 protected:
  double eval_states(Mask s, const std::vector<int>& states) const override;

 private:
  int n_items_;
  int n_states_;
  std::vector<Realization> hypotheses_;
  std::vector<double> prior_;
};

/// Posterior probability p_D[y; x] that item x has state y, given the
/// observations D: prior mass restricted to hypotheses consistent with D
/// and renormalized. Throws EvidenceError when no consistent mass remains.
double posterior_label_prob(const VersionSpaceUtility& u,
                            const PartialRealization& d, int item, int state);

}  // namespace cssmax

#endif  // CSSMAX_UTILITY_HPP
