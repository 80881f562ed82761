#pragma once

#include <vector>

#include "netlines/dataset.hpp"

namespace netlines {

// Per-feature location and scale estimated on a training set.
// Deviations use the population convention (divide by the pattern count).
struct Standardizer {
  std::vector<double> means;
  std::vector<double> deviations;

  std::size_t feature_dim() const { return means.size(); }
  static Standardizer identity(std::size_t feature_count);
};

/// Fits means and deviations in one pass over the patterns.
/// Throws ConstantFeature for columns with zero spread and EmptyDataset for
/// sets with fewer than two patterns.
Standardizer fit_standardizer(const BinaryLabeledSet& set);

/// Rescales every feature to zero mean and unit deviation. The bias component
/// and the targets are untouched.
BinaryLabeledSet standardize(const BinaryLabeledSet& set, const Standardizer& s);

std::vector<double> standardize_features(const std::vector<double>& features,
                                         const Standardizer& s);

/// Maps weights trained on standardized inputs back to user units so the unit
/// classifies raw data directly. Every decision sign is preserved and the
/// result has norm sqrt(N+1).
std::vector<double> unstandardize_weights(const std::vector<double>& weights,
                                          const Standardizer& s);

}  // namespace netlines
