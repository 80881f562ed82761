#include "netlines/standardize.hpp"

#include <cmath>
#include <string>

namespace netlines {

Standardizer Standardizer::identity(std::size_t feature_count) {
  Standardizer s;
  s.means.assign(feature_count, 0.0);
  s.deviations.assign(feature_count, 1.0);
  return s;
}

Standardizer fit_standardizer(const BinaryLabeledSet& set) {
  const std::size_t p = set.size();
  if (p < 2) throw EmptyDataset("standardizer needs at least two patterns");
  const std::size_t n = set.feature_dim();

  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0), lo(n, 0.0), hi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) lo[i] = hi[i] = set.input(0)[i + 1];
  for (std::size_t mu = 0; mu < p; ++mu) {
    const std::vector<double>& row = set.input(mu);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = row[i + 1];
      sum[i] += v;
      sum_sq[i] += v * v;
      if (v < lo[i]) lo[i] = v;
      if (v > hi[i]) hi[i] = v;
    }
  }

  Standardizer s;
  s.means.resize(n);
  s.deviations.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.means[i] = sum[i] / static_cast<double>(p);
    const double var = sum_sq[i] / static_cast<double>(p) - s.means[i] * s.means[i];
    if (lo[i] == hi[i] || var <= 0.0) throw ConstantFeature(i);
    s.deviations[i] = std::sqrt(var);
  }
  return s;
}

BinaryLabeledSet standardize(const BinaryLabeledSet& set, const Standardizer& s) {
  if (s.feature_dim() != set.feature_dim()) {
    throw DimensionMismatch("standardizer covers " + std::to_string(s.feature_dim()) +
                            " features, set has " + std::to_string(set.feature_dim()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(set.size());
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    const std::vector<double>& in = set.input(mu);
    std::vector<double> row(in.size());
    row[0] = 1.0;
    for (std::size_t i = 0; i < s.feature_dim(); ++i) {
      row[i + 1] = (in[i + 1] - s.means[i]) / s.deviations[i];
    }
    rows.push_back(std::move(row));
  }
  return BinaryLabeledSet(std::move(rows), set.targets());
}

std::vector<double> standardize_features(const std::vector<double>& features,
                                         const Standardizer& s) {
  if (features.size() != s.feature_dim()) {
    throw DimensionMismatch("feature count does not match standardizer");
  }
  std::vector<double> out(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    out[i] = (features[i] - s.means[i]) / s.deviations[i];
  }
  return out;
}

std::vector<double> unstandardize_weights(const std::vector<double>& weights,
                                          const Standardizer& s) {
  const std::size_t n = s.feature_dim();
  if (weights.size() != n + 1) {
    throw DimensionMismatch("weight vector length must be feature count + 1");
  }

  // The transformed unit computes a positive multiple of the standardized-space
  // weighted sum on raw inputs, so every decision carries over.
  double bias = weights[0];
  std::vector<double> scaled(n);
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i + 1] / s.deviations[i];
    bias -= weights[i + 1] * s.means[i] / s.deviations[i];
    sq += scaled[i] * scaled[i];
  }
  const double denom = std::sqrt(bias * bias + sq);
  if (denom == 0.0) {
    throw DegenerateWeights("all-zero weight vector cannot be mapped to user units");
  }
  const double scale = std::sqrt(static_cast<double>(n + 1)) / denom;

  std::vector<double> out(n + 1);
  out[0] = scale * bias;
  for (std::size_t i = 0; i < n; ++i) out[i + 1] = scale * scaled[i];
  return out;
}

}  // namespace netlines
