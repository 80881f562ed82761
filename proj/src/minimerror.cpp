#include "netlines/minimerror.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "netlines/util.hpp"

namespace netlines {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_of(const std::vector<double>& w) { return std::sqrt(dot(w, w)); }

// 1/cosh^2 with the far tail clamped to zero; beyond |x| = 300 the true value
// is below 1e-260.
double window(double x) {
  if (x > 300.0 || x < -300.0) return 0.0;
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

void check_dim(const PerceptronWeights& w, const std::vector<double>& input) {
  if (w.size() != input.size()) {
    throw DimensionMismatch("weight length " + std::to_string(w.size()) +
                            " does not match input length " +
                            std::to_string(input.size()));
  }
}

void validate(const MinimerrorConfig& cfg) {
  if (cfg.learning_rate <= 0.0) throw Error("learning_rate must be positive");
  if (cfg.annealing_rate <= 0.0) throw Error("annealing_rate must be positive");
  if (cfg.temperature_ratio < 1.0) throw Error("temperature_ratio must be >= 1");
  if (cfg.stop_temperature <= 0.0) throw Error("stop_temperature must be positive");
  if (cfg.initial_temperature > 0.0 &&
      cfg.initial_temperature <= cfg.stop_temperature) {
    throw Error("initial_temperature must exceed stop_temperature");
  }
  if (cfg.max_epochs < 0) throw Error("max_epochs must be non-negative");
}

}  // namespace

double stability(const PerceptronWeights& w, const std::vector<double>& input,
                 int target) {
  check_dim(w, input);
  const double norm = norm_of(w);
  if (norm == 0.0) throw ZeroWeights("stability of the zero weight vector");
  return target * dot(w, input) / norm;
}

double cost(const PerceptronWeights& w, const BinaryLabeledSet& set,
            double temperature) {
  if (temperature <= 0.0) throw NonPositiveTemperature("cost needs T > 0");
  const double norm = norm_of(w);
  if (norm == 0.0) throw ZeroWeights("cost of the zero weight vector");
  double e = 0.0;
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    check_dim(w, set.input(mu));
    const double stab = set.target(mu) * dot(w, set.input(mu)) / norm;
    e += 0.5 * (1.0 - std::tanh(stab / (2.0 * temperature)));
  }
  return e;
}

PerceptronWeights weight_update_direction(const PerceptronWeights& w,
                                          const BinaryLabeledSet& set,
                                          double correct_temperature,
                                          double error_temperature) {
  if (correct_temperature <= 0.0 || error_temperature <= 0.0) {
    throw NonPositiveTemperature("update direction needs positive temperatures");
  }
  const double norm = norm_of(w);
  if (norm == 0.0) throw ZeroWeights("update direction of the zero weight vector");
  PerceptronWeights dir(w.size(), 0.0);
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    const std::vector<double>& x = set.input(mu);
    check_dim(w, x);
    const int tgt = set.target(mu);
    const double stab = tgt * dot(w, x) / norm;
    const double t = stab <= 0.0 ? error_temperature : correct_temperature;
    const double c = window(stab / (2.0 * t));
    if (c == 0.0) continue;
    for (std::size_t i = 0; i < x.size(); ++i) dir[i] += c * tgt * x[i];
  }
  return dir;
}

PerceptronWeights normalize(PerceptronWeights w) {
  const double norm = norm_of(w);
  if (norm == 0.0) throw ZeroWeights("cannot normalize the zero weight vector");
  const double scale = std::sqrt(static_cast<double>(w.size())) / norm;
  for (double& v : w) v *= scale;
  return w;
}

int count_errors(const PerceptronWeights& w, const BinaryLabeledSet& set) {
  int errors = 0;
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    check_dim(w, set.input(mu));
    if (set.target(mu) * dot(w, set.input(mu)) <= 0.0) ++errors;
  }
  return errors;
}

double confidence(const PerceptronWeights& w, const std::vector<double>& input,
                  double temperature) {
  if (temperature <= 0.0) throw NonPositiveTemperature("confidence needs T > 0");
  check_dim(w, input);
  const double norm = norm_of(w);
  if (norm == 0.0) throw ZeroWeights("confidence of the zero weight vector");
  return std::tanh(std::fabs(dot(w, input)) / (norm * 2.0 * temperature));
}

TrainReport train_perceptron(const BinaryLabeledSet& set,
                             const MinimerrorConfig& config) {
  validate(config);
  const std::size_t p = set.size();
  if (p == 0) throw EmptyDataset("cannot train on an empty set");
  const std::size_t dim = set.augmented_dim();
  if (dim < 2) throw DimensionMismatch("need at least one feature");

  // Hebbian start; a seeded random direction when restarting or when the
  // class/input correlation vanishes (symmetric tasks).
  PerceptronWeights w(dim, 0.0);
  if (!config.random_init) {
    for (std::size_t mu = 0; mu < p; ++mu) {
      const std::vector<double>& x = set.input(mu);
      for (std::size_t i = 0; i < dim; ++i) w[i] += set.target(mu) * x[i];
    }
  }
  {
    double sq = 0.0;
    for (double v : w) sq += v * v;
    if (std::sqrt(sq) < 1e-12) {
      std::mt19937_64 rng(config.rng_seed);
      std::normal_distribution<double> gauss(0.0, 1.0);
      do {
        sq = 0.0;
        for (double& v : w) {
          v = gauss(rng);
          sq += v * v;
        }
      } while (std::sqrt(sq) < 1e-12);
    }
  }
  w = normalize(std::move(w));

  double t_correct = config.initial_temperature > 0.0
                         ? config.initial_temperature
                         : std::sqrt(static_cast<double>(dim));
  double inv_t = 1.0 / t_correct;

  std::vector<double> acts(p);
  double w_norm = std::sqrt(static_cast<double>(dim));
  auto evaluate = [&]() {
    int errors = 0;
    for (std::size_t mu = 0; mu < p; ++mu) {
      acts[mu] = dot(w, set.input(mu));
      if (set.target(mu) * acts[mu] <= 0.0) ++errors;
    }
    return errors;
  };

  int best_errors = std::numeric_limits<int>::max();
  PerceptronWeights best_w;
  int errors = evaluate();
  best_errors = errors;
  best_w = w;

  int epochs = 0;
  while (epochs < config.max_epochs &&
         !(errors == 0 && t_correct <= config.stop_temperature)) {
    const double t_error = config.temperature_ratio * t_correct;
    PerceptronWeights dir(dim, 0.0);
    for (std::size_t mu = 0; mu < p; ++mu) {
      const int tgt = set.target(mu);
      const double stab = tgt * acts[mu] / w_norm;
      const double t = stab <= 0.0 ? t_error : t_correct;
      const double c = window(stab / (2.0 * t));
      if (c == 0.0) continue;
      const std::vector<double>& x = set.input(mu);
      for (std::size_t i = 0; i < dim; ++i) dir[i] += c * tgt * x[i];
    }
    for (std::size_t i = 0; i < dim; ++i) w[i] += config.learning_rate * dir[i];
    w = normalize(std::move(w));

    inv_t += config.annealing_rate;
    t_correct = 1.0 / inv_t;
    ++epochs;

    errors = evaluate();
    if (errors <= best_errors) {  // ties resolved toward the latest weights
      best_errors = errors;
      best_w = w;
    }
  }

  TrainReport report;
  report.weights = std::move(best_w);
  report.training_errors = best_errors;
  report.epochs_run = epochs;
  report.final_temperature = t_correct;
  report.final_cost = cost(report.weights, set, t_correct);
  return report;
}

}  // namespace netlines
