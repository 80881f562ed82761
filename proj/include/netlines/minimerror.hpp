#pragma once

#include <cstdint>
#include <vector>

#include "netlines/dataset.hpp"

namespace netlines {

using PerceptronWeights = std::vector<double>;

// Hyperparameters of the annealed single-unit trainer (Minimerror).
//
// The trainer runs batch epochs at a pair of temperatures: wrongly classified
// patterns are seen at the higher temperature error_ratio * T, correct ones at
// T. After every epoch 1/T grows by annealing_rate, narrowing the window of
// patterns that still contribute, and the weights are renormalized to
// sqrt(N+1). Together with input standardization this keeps one set of
// defaults usable across problems.
struct MinimerrorConfig {
  double learning_rate = 0.02;
  double annealing_rate = 1e-3;     // added to 1/T every epoch
  double temperature_ratio = 6.0;   // error temperature over correct temperature
  double initial_temperature = 0.0; // <= 0 selects sqrt(N+1)
  double stop_temperature = 0.2;
  int max_epochs = 20000;
  std::uint64_t rng_seed = 0;       // drives the random start when used
  bool random_init = false;         // skip the Hebbian start; used for restarts
};

struct TrainReport {
  PerceptronWeights weights;     // norm sqrt(N+1)
  int training_errors = 0;       // patterns with stability <= 0 under weights
  double final_cost = 0.0;
  int epochs_run = 0;
  double final_temperature = 0.0;
};

/// Signed distance of the pattern to the unit's hyperplane times its target;
/// positive exactly when the pattern is classified correctly. Independent of
/// the weight norm.
double stability(const PerceptronWeights& w, const std::vector<double>& input,
                 int target);

/// Smooth error count: each pattern contributes (1 - tanh(stability/2T))/2,
/// close to 1 for large negative stabilities and vanishing for large positive
/// ones.
double cost(const PerceptronWeights& w, const BinaryLabeledSet& set,
            double temperature);

/// Batch update direction: wrong patterns are weighted through the error
/// temperature window, correct ones through the (narrower) correct window.
/// The learning rate is applied by the caller. Accumulated in dataset order.
PerceptronWeights weight_update_direction(const PerceptronWeights& w,
                                          const BinaryLabeledSet& set,
                                          double correct_temperature,
                                          double error_temperature);

/// Rescales to norm sqrt(dim) without changing direction.
PerceptronWeights normalize(PerceptronWeights w);

/// Number of patterns with stability <= 0 (points on the plane count as wrong).
int count_errors(const PerceptronWeights& w, const BinaryLabeledSet& set);

/// tanh of the pattern's distance to the plane over 2T; 0 on the plane,
/// saturating to 1 far away. Invariant under positive rescaling of w.
double confidence(const PerceptronWeights& w, const std::vector<double>& input,
                  double temperature);

/// Deterministic annealing run. Returns the weights with the lowest error
/// count seen over the whole run (ties resolved toward the latest epoch).
/// Stops early once the error count is zero and the temperature has annealed
/// below stop_temperature.
TrainReport train_perceptron(const BinaryLabeledSet& set,
                             const MinimerrorConfig& config);

}  // namespace netlines
