#include "cssmax/utility.hpp"

#include <cmath>

namespace cssmax {

double UtilityModel::eval_partial(Mask s, const PartialRealization& d) const {
  if ((s & ~d.selected_mask()) != 0) {
    throw PreconditionError(
        "insufficient observations: S must be a subset of selected(D)");
  }
  std::vector<int> states(item_count(), -1);
  for (const auto& [item, state] : d.observations()) states[item] = state;
  return eval_states(s, states);
}

ModularUtility::ModularUtility(std::vector<std::vector<double>> w)
    : w_(std::move(w)) {
  if (w_.empty()) throw ConfigError("modular utility requires items");
  const std::size_t n_states = w_[0].size();
  if (n_states == 0) throw ConfigError("modular utility requires states");
  for (const auto& row : w_) {
    if (row.size() != n_states) {
      throw ConfigError("modular utility requires a weight per (item, state)");
    }
    for (double v : row) {
      if (v < 0.0) throw ConfigError("modular utility weights must be >= 0");
    }
  }
}

double ModularUtility::eval_full(Mask s, const Realization& h) const {
  return eval_states(s, h.states());
}

double ModularUtility::eval_states(Mask s,
                                   const std::vector<int>& states) const {
  double total = 0.0;
  for (int x = 0; x < item_count(); ++x) {
    if (mask_has(s, x)) total += w_[x][states[x]];
  }
  return total;
}

CoverageUtility::CoverageUtility(
    int universe_size, std::vector<std::vector<std::vector<int>>> regions)
    : universe_size_(universe_size), regions_(std::move(regions)) {
  if (universe_size_ <= 0) throw ConfigError("universe size must be positive");
  if (regions_.empty()) throw ConfigError("coverage utility requires items");
  const std::size_t n_states = regions_[0].size();
  if (n_states == 0) throw ConfigError("coverage utility requires states");
  for (const auto& by_state : regions_) {
    if (by_state.size() != n_states) {
      throw ConfigError("coverage utility requires a region per (item, state)");
    }
    for (const auto& region : by_state) {
      for (int cell : region) {
        if (cell < 0 || cell >= universe_size_) {
          throw ConfigError("coverage cell index out of universe");
        }
      }
    }
  }
}

double CoverageUtility::eval_full(Mask s, const Realization& h) const {
  return eval_states(s, h.states());
}

double CoverageUtility::eval_states(Mask s,
                                    const std::vector<int>& states) const {
  std::vector<bool> covered(universe_size_, false);
  int count = 0;
  for (int x = 0; x < item_count(); ++x) {
    if (!mask_has(s, x)) continue;
    for (int cell : regions_[x][states[x]]) {
      if (!covered[cell]) {
        covered[cell] = true;
        ++count;
      }
    }
  }
  return count;
}

VersionSpaceUtility::VersionSpaceUtility(int item_count, int state_count,
                                         std::vector<Realization> hypotheses,
                                         std::vector<double> prior)
    : n_items_(item_count),
      n_states_(state_count),
      hypotheses_(std::move(hypotheses)),
      prior_(std::move(prior)) {
  if (n_items_ <= 0 || n_states_ <= 0) {
    throw ConfigError("vsr utility requires items and states");
  }
  if (hypotheses_.empty()) {
    throw ConfigError("vsr utility requires a non-empty hypothesis class");
  }
  if (prior_.size() != hypotheses_.size()) {
    throw ConfigError("vsr prior must have one entry per hypothesis");
  }
  double total = 0.0;
  for (double p : prior_) {
    if (p < 0.0) throw ConfigError("vsr prior entries must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > kTol) {
    throw ConfigError("vsr prior must sum to 1");
  }
  for (const auto& h : hypotheses_) {
    if (h.item_count() != n_items_) {
      throw ConfigError("vsr hypothesis must label every item");
    }
    for (int x = 0; x < n_items_; ++x) {
      if (h.state_of(x) < 0 || h.state_of(x) >= n_states_) {
        throw ConfigError("vsr hypothesis state out of range");
      }
    }
  }
}

std::shared_ptr<const VersionSpaceUtility>
VersionSpaceUtility::uniform_full_class(int item_count, int state_count) {
  realization_count_or_throw(item_count, state_count, kRealizationCap);
  std::vector<Realization> hs;
  for_each_realization(item_count, state_count,
                       [&](const Realization& h) { hs.push_back(h); });
  std::vector<double> prior(hs.size(), 1.0 / static_cast<double>(hs.size()));
  return std::make_shared<VersionSpaceUtility>(item_count, state_count,
                                               std::move(hs), std::move(prior));
}

double VersionSpaceUtility::eval_full(Mask s, const Realization& h) const {
  return eval_states(s, h.states());
}

double VersionSpaceUtility::eval_states(Mask s,
                                        const std::vector<int>& states) const {
  double disagreeing = 0.0;
  for (std::size_t i = 0; i < hypotheses_.size(); ++i) {
    const Realization& hp = hypotheses_[i];
    for (int x = 0; x < n_items_; ++x) {
      if (mask_has(s, x) && hp.state_of(x) != states[x]) {
        disagreeing += prior_[i];
        break;
      }
    }
  }
  return disagreeing;
}

double VersionSpaceUtility::consistent_mass(const PartialRealization& d) const {
  double mass = 0.0;
  for (std::size_t i = 0; i < hypotheses_.size(); ++i) {
    bool consistent = true;
    for (const auto& [item, state] : d.observations()) {
      if (hypotheses_[i].state_of(item) != state) {
        consistent = false;
        break;
      }
    }
    if (consistent) mass += prior_[i];
  }
  return mass;
}

double posterior_label_prob(const VersionSpaceUtility& u,
                            const PartialRealization& d, int item, int state) {
  double consistent = 0.0;
  double matching = 0.0;
  const auto& hs = u.hypotheses();
  const auto& prior = u.prior();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    bool ok = true;
    for (const auto& [obs_item, obs_state] : d.observations()) {
      if (hs[i].state_of(obs_item) != obs_state) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    consistent += prior[i];
    if (hs[i].state_of(item) == state) matching += prior[i];
  }
  if (consistent <= kTol) {
    throw EvidenceError("observations have zero prior mass");
  }
  return matching / consistent;
}

}  // namespace cssmax
