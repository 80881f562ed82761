#include "netlines/dataset.hpp"

#include <algorithm>
#include <string>

namespace netlines {

Dataset::Dataset(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) return;
  const std::size_t n = patterns_.front().features.size();
  for (std::size_t i = 1; i < patterns_.size(); ++i) {
    if (patterns_[i].features.size() != n) {
      throw DimensionMismatch("pattern " + std::to_string(i) + " has " +
                              std::to_string(patterns_[i].features.size()) +
                              " features, expected " + std::to_string(n));
    }
  }
}

std::vector<int> Dataset::class_ids() const {
  std::vector<int> ids;
  for (const Pattern& p : patterns_) {
    if (std::find(ids.begin(), ids.end(), p.label) == ids.end()) {
      ids.push_back(p.label);
    }
  }
  return ids;
}

std::size_t Dataset::count_label(int label) const {
  std::size_t n = 0;
  for (const Pattern& p : patterns_) {
    if (p.label == label) ++n;
  }
  return n;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Pattern> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(patterns_.at(i));
  return Dataset(std::move(out));
}

Dataset Dataset::without_class(int label) const {
  std::vector<Pattern> out;
  out.reserve(patterns_.size());
  for (const Pattern& p : patterns_) {
    if (p.label != label) out.push_back(p);
  }
  return Dataset(std::move(out));
}

BinaryLabeledSet::BinaryLabeledSet(std::vector<std::vector<double>> augmented_inputs,
                                   std::vector<int> targets)
    : inputs_(std::move(augmented_inputs)), targets_(std::move(targets)) {
  if (inputs_.size() != targets_.size()) {
    throw DimensionMismatch("input count " + std::to_string(inputs_.size()) +
                            " does not match target count " +
                            std::to_string(targets_.size()));
  }
  dim_ = inputs_.empty() ? 0 : inputs_.front().size();
  for (std::size_t mu = 0; mu < inputs_.size(); ++mu) {
    if (inputs_[mu].size() != dim_) {
      throw DimensionMismatch("augmented input " + std::to_string(mu) +
                              " has inconsistent length");
    }
    if (inputs_[mu].empty() || inputs_[mu][0] != 1.0) {
      throw DimensionMismatch("augmented input " + std::to_string(mu) +
                              " must start with the bias component 1");
    }
    if (targets_[mu] != 1 && targets_[mu] != -1) {
      throw Error("target " + std::to_string(mu) + " must be -1 or +1");
    }
  }
}

BinaryLabeledSet BinaryLabeledSet::from_raw(
    const std::vector<std::vector<double>>& features,
    const std::vector<int>& targets) {
  std::vector<std::vector<double>> rows;
  rows.reserve(features.size());
  for (const auto& f : features) rows.push_back(augment(f));
  return BinaryLabeledSet(std::move(rows), targets);
}

BinaryLabeledSet BinaryLabeledSet::from_dataset(const Dataset& data,
                                                int positive_label) {
  std::vector<std::vector<double>> rows;
  std::vector<int> targets;
  rows.reserve(data.size());
  targets.reserve(data.size());
  for (const Pattern& p : data.patterns()) {
    rows.push_back(augment(p.features));
    targets.push_back(p.label == positive_label ? 1 : -1);
  }
  return BinaryLabeledSet(std::move(rows), std::move(targets));
}

std::vector<double> augment(const std::vector<double>& features) {
  std::vector<double> row;
  row.reserve(features.size() + 1);
  row.push_back(1.0);
  row.insert(row.end(), features.begin(), features.end());
  return row;
}

}  // namespace netlines
