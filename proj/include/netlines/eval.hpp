#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netlines/model.hpp"

namespace netlines {

// Everything needed to train one model from a dataset. `seed` drives every
// random choice (unit initialization fallbacks, ensemble sequences); repeated
// runs derive their own seeds from it, so a fixed seed fixes the whole
// experiment.
struct TrainSpec {
  ModelKind kind = ModelKind::binary;
  int positive_class = 1;        // binary: class mapped to +1
  bool positive_set = false;     // false: use the first class in the data
  std::vector<int> sequence;     // ton: explicit learning sequence (empty: data order)
  int ensemble_size = 0;         // 0: min(C!, 3) rounded down to odd
  GrowthConfig growth;
  std::uint64_t seed = 0;
};

struct TrainOutcome {
  Model model;
  std::vector<GrowthReport> reports;  // canonical network order
};

TrainOutcome train_model(const Dataset& data, const TrainSpec& spec);

/// Fraction of patterns whose prediction differs from the label.
double error_fraction(const Model& m, const Dataset& data);

struct RunResult {
  int run_id = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t hidden_total = 0;
  std::size_t weights = 0;
  double train_error = 0.0;
  double test_error = 0.0;
  std::vector<double> per_ton_test_error;  // ensembles only
};

struct EvalSummary {
  std::vector<RunResult> runs;

  double mean_test_error() const;
  double stddev_test_error() const;  // sample standard deviation
  double mean_train_error() const;
  double mean_hidden() const;
  double mean_weights() const;
  /// Mean over members and runs of the individual chain errors.
  double mean_per_ton_error() const;
};

/// Repeated seeded splits: each run trains on train_size randomly chosen
/// patterns and tests on the rest, or on fixed_test when given.
EvalSummary holdout_eval(const Dataset& data, std::size_t train_size, int repeats,
                         const std::optional<Dataset>& fixed_test,
                         const TrainSpec& spec);

/// One fit per pattern, testing on the held-out pattern. For ensembles the
/// per-member columns record each chain's own leave-one-out errors.
EvalSummary loo_eval(const Dataset& data, const TrainSpec& spec);

/// Single train/test run on fixed sets.
EvalSummary fixed_eval(const Dataset& train, const Dataset& test,
                       const TrainSpec& spec);

/// Machine-readable report: one row per run.
std::string report_csv(const EvalSummary& summary);

}  // namespace netlines
