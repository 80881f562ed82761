#pragma once

#include <cstddef>
#include <vector>

#include "netlines/errors.hpp"

namespace netlines {

// One labeled sample in user units.
struct Pattern {
  std::vector<double> features;
  int label = 0;
};

// Multi-class sample container. Every pattern must have the same feature count.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Pattern> patterns);

  std::size_t size() const { return patterns_.size(); }
  std::size_t feature_dim() const {
    return patterns_.empty() ? 0 : patterns_.front().features.size();
  }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
  const std::vector<Pattern>& patterns() const { return patterns_; }

  /// Distinct labels in first-appearance order.
  std::vector<int> class_ids() const;
  std::size_t count_label(int label) const;
  Dataset subset(const std::vector<std::size_t>& indices) const;
  Dataset without_class(int label) const;

 private:
  std::vector<Pattern> patterns_;
};

// Binary training set. Inputs are stored augmented: component 0 is fixed to 1
// so the bias can be treated as one more weight. Targets are -1 or +1.
class BinaryLabeledSet {
 public:
  BinaryLabeledSet() = default;
  BinaryLabeledSet(std::vector<std::vector<double>> augmented_inputs,
                   std::vector<int> targets);

  static BinaryLabeledSet from_raw(const std::vector<std::vector<double>>& features,
                                   const std::vector<int>& targets);
  static BinaryLabeledSet from_dataset(const Dataset& data, int positive_label);

  std::size_t size() const { return inputs_.size(); }
  std::size_t feature_dim() const { return dim_ == 0 ? 0 : dim_ - 1; }
  std::size_t augmented_dim() const { return dim_; }
  const std::vector<double>& input(std::size_t mu) const { return inputs_[mu]; }
  int target(std::size_t mu) const { return targets_[mu]; }
  const std::vector<std::vector<double>>& inputs() const { return inputs_; }
  const std::vector<int>& targets() const { return targets_; }

 private:
  std::vector<std::vector<double>> inputs_;
  std::vector<int> targets_;
  std::size_t dim_ = 0;
};

/// Prepends the constant bias component.
std::vector<double> augment(const std::vector<double>& features);

}  // namespace netlines
