#include "netlines/netlines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "netlines/util.hpp"

namespace netlines {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Weighted sum of a unit over an augmented input row.
double unit_sum(const PerceptronWeights& w, const std::vector<double>& row) {
  return dot(w, row);
}

double output_sum(const PerceptronWeights& output, const std::vector<int>& states) {
  double s = output[0];
  for (std::size_t k = 0; k < states.size(); ++k) s += output[k + 1] * states[k];
  return s;
}

// Error-free learning is impossible when the same feature vector carries both
// targets; reject up front instead of growing to the unit budget.
void reject_conflicting_duplicates(const BinaryLabeledSet& set) {
  std::map<std::vector<double>, int> seen;
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    auto [it, inserted] = seen.emplace(set.input(mu), set.target(mu));
    if (!inserted && it->second != set.target(mu)) {
      throw ConflictingLabels("patterns with identical features carry opposite "
                              "targets; error-free training is impossible");
    }
  }
}

}  // namespace

InternalRepresentation compute_ir(const NetLinesNetwork& net,
                                  const std::vector<double>& features) {
  if (features.size() != net.input_dim) {
    throw DimensionMismatch("expected " + std::to_string(net.input_dim) +
                            " features, got " + std::to_string(features.size()));
  }
  InternalRepresentation ir(net.hidden.size() + 1);
  ir[0] = 1;
  for (std::size_t k = 0; k < net.hidden.size(); ++k) {
    const PerceptronWeights& w = net.hidden[k];
    double s = w[0];
    for (std::size_t i = 0; i < features.size(); ++i) s += w[i + 1] * features[i];
    ir[k + 1] = sign(s);
  }
  return ir;
}

int forward(const NetLinesNetwork& net, const std::vector<double>& features) {
  const InternalRepresentation ir = compute_ir(net, features);
  double s = 0.0;
  for (std::size_t k = 0; k < ir.size(); ++k) s += net.output[k] * ir[k];
  return sign(s);
}

namespace {

// Core of the fallback construction: a unit parallel to `direction`, shifted
// towards the pivot. The pivot lands strictly on the -1 side; every correct
// pattern strictly between the plane and the pivot keeps a +1 state thanks to
// the shift bound. Patterns at or beyond the pivot's offset flip to -1.
FallbackSplit slab_split(const PerceptronWeights& direction, std::size_t pivot,
                         const BinaryLabeledSet& set,
                         const std::vector<int>& stage_targets) {
  const std::size_t p = set.size();
  std::vector<double> sums(p);
  for (std::size_t mu = 0; mu < p; ++mu) {
    sums[mu] = unit_sum(direction, set.input(mu));
  }
  const double side = sums[pivot] >= 0.0 ? 1.0 : -1.0;
  const double pivot_dist = std::fabs(sums[pivot]);

  FallbackSplit split;
  split.pivot = pivot;
  double bound = 1.0;
  if (pivot_dist > 0.0) {
    for (std::size_t mu = 0; mu < p; ++mu) {
      if (stage_targets[mu] != 1) continue;
      const double toward = side * sums[mu];
      if (toward > 0.0 && toward < pivot_dist) {
        split.preserved.push_back(mu);
        bound = std::min(bound, (pivot_dist - toward) / pivot_dist);
      }
    }
  }
  split.shift_fraction = 0.5 * bound;

  PerceptronWeights unit(direction.size());
  for (std::size_t i = 0; i < direction.size(); ++i) {
    unit[i] = -side * direction[i];
  }
  unit[0] += (1.0 - split.shift_fraction) * side * sums[pivot];
  split.weights = normalize(std::move(unit));
  return split;
}

std::size_t nearest_wrong_pattern(const PerceptronWeights& w,
                                  const BinaryLabeledSet& set,
                                  const std::vector<int>& stage_targets) {
  if (stage_targets.size() != set.size()) {
    throw DimensionMismatch("stage target count does not match the set");
  }
  double sq = 0.0;
  for (double v : w) sq += v * v;
  if (sq == 0.0) throw ZeroWeights("fallback split from the zero weight vector");

  bool found = false;
  std::size_t pivot = 0;
  double best = 0.0;
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    if (stage_targets[mu] != -1) continue;
    const double dist = std::fabs(unit_sum(w, set.input(mu)));
    if (!found || dist < best) {
      pivot = mu;
      best = dist;
      found = true;
    }
  }
  if (!found) throw NoWronglyLearnedPattern("no pattern is marked wrong");
  return pivot;
}

}  // namespace

FallbackSplit fallback_split_unit(const PerceptronWeights& w,
                                  const BinaryLabeledSet& set,
                                  const std::vector<int>& stage_targets) {
  const std::size_t pivot = nearest_wrong_pattern(w, set, stage_targets);
  return slab_split(w, pivot, set, stage_targets);
}

PerceptronWeights fallback_output_update(const PerceptronWeights& output,
                                         int pivot_target) {
  if (pivot_target != 1 && pivot_target != -1) {
    throw Error("pivot target must be -1 or +1");
  }
  PerceptronWeights next = output;
  next[0] += pivot_target;
  next.push_back(-pivot_target);
  return next;
}

GrowthReport train_netlines(const BinaryLabeledSet& set, const GrowthConfig& config) {
  const std::size_t p = set.size();
  if (p == 0) throw EmptyDataset("cannot grow a network on an empty set");
  const std::size_t n = set.feature_dim();
  if (n < 1) throw DimensionMismatch("need at least one feature");
  if (config.max_errors < 0) throw Error("max_errors must be non-negative");
  if (config.max_hidden < 0) throw Error("max_hidden must be non-negative");
  if (config.unit_restarts < 1) throw Error("unit_restarts must be at least 1");
  const int max_hidden = config.max_hidden > 0 ? config.max_hidden
                                               : static_cast<int>(p);
  if (config.max_errors == 0) reject_conflicting_duplicates(set);

  GrowthReport report;
  report.standardizer =
      p >= 2 ? fit_standardizer(set) : Standardizer::identity(n);
  const BinaryLabeledSet scaled = standardize(set, report.standardizer);

  NetLinesNetwork& net = report.network;
  net.input_dim = n;

  // Per-pattern hidden states, grown alongside the network.
  std::vector<std::vector<int>> states(p);

  // Best-of-restarts annealing: the Hebbian start first, then seeded random
  // starts, keeping the run with the fewest errors (first such run on ties).
  auto train_best = [&](const BinaryLabeledSet& task, std::uint64_t salt) {
    TrainReport best;
    for (int attempt = 0; attempt < config.unit_restarts; ++attempt) {
      MinimerrorConfig cfg = config.trainer;
      cfg.rng_seed = mix_seed(mix_seed(config.trainer.rng_seed, salt),
                              static_cast<std::uint64_t>(attempt));
      cfg.random_init = attempt > 0;
      TrainReport r = train_perceptron(task, cfg);
      report.weight_updates_total += static_cast<long long>(r.epochs_run) *
                                     static_cast<long long>(task.augmented_dim());
      if (attempt == 0 || r.training_errors < best.training_errors) {
        best = std::move(r);
      }
      if (best.training_errors == 0) break;
    }
    return best;
  };
  auto train_unit = [&](const std::vector<int>& targets, std::uint64_t salt) {
    return train_best(BinaryLabeledSet(scaled.inputs(), targets), salt);
  };
  auto append_unit = [&](const PerceptronWeights& unit) {
    net.hidden.push_back(unit);
    for (std::size_t mu = 0; mu < p; ++mu) {
      states[mu].push_back(sign(unit_sum(unit, set.input(mu))));
    }
  };
  auto ir_rows = [&]() {
    std::vector<std::vector<double>> rows(p);
    for (std::size_t mu = 0; mu < p; ++mu) {
      std::vector<double>& row = rows[mu];
      row.reserve(states[mu].size() + 1);
      row.push_back(1.0);
      for (int s : states[mu]) row.push_back(static_cast<double>(s));
    }
    return rows;
  };

  // First unit learns the raw targets; a perfect answer means the set is
  // linearly separable and the output simply copies the unit.
  std::vector<int> stage_targets = set.targets();
  long long kept_units = 0;
  {
    TrainReport r1 = train_unit(stage_targets, 1);
    append_unit(unstandardize_weights(r1.weights, report.standardizer));
    kept_units = static_cast<long long>(r1.epochs_run) * static_cast<long long>(n + 1);
    int e = 0;
    for (std::size_t mu = 0; mu < p; ++mu) {
      if (states[mu][0] != set.target(mu)) ++e;
    }
    report.trace.push_back({1, e, false});
    if (e == 0) {
      net.linearly_separable = true;
      net.output = {0.0, std::sqrt(2.0)};
      report.weight_updates_kept = kept_units;
      return report;
    }
    for (std::size_t mu = 0; mu < p; ++mu) {
      stage_targets[mu] = states[mu][0] * set.target(mu);
    }
  }

  int best_errors = report.trace.back().errors;
  PerceptronWeights output = {0.0, 1.0};  // prediction is the first unit for now
  long long kept_output = 0;
  int stalls = 0;

  while (true) {
    const int h = static_cast<int>(net.hidden.size()) + 1;

    // Candidate unit plus retrained output.
    TrainReport unit_run = train_unit(stage_targets, 2 * h);
    const PerceptronWeights candidate =
        unstandardize_weights(unit_run.weights, report.standardizer);
    std::vector<int> cand_states(p);
    for (std::size_t mu = 0; mu < p; ++mu) {
      cand_states[mu] = sign(unit_sum(candidate, set.input(mu)));
    }
    std::vector<std::vector<double>> rows = ir_rows();
    for (std::size_t mu = 0; mu < p; ++mu) {
      rows[mu].push_back(static_cast<double>(cand_states[mu]));
    }
    TrainReport out_run = train_best(
        BinaryLabeledSet(std::move(rows), set.targets()), 2 * h + 1);

    auto errors_of = [&](const PerceptronWeights& w) {
      int e = 0;
      for (std::size_t mu = 0; mu < p; ++mu) {
        std::vector<int> ir = states[mu];
        ir.push_back(cand_states[mu]);
        if (sign(output_sum(w, ir)) != set.target(mu)) ++e;
      }
      return e;
    };

    // Besides the trained output, consider the constructive patch of the
    // previous output: rescale it so the new unit's vote dominates, absorb one
    // class into the bias and let the unit vote against it. When the new unit
    // isolates the wrong patterns this fixes them without touching anything
    // else, which keeps growth moving where the trained output falls short.
    PerceptronWeights stage_output = out_run.weights;
    int cand_errors = errors_of(stage_output);
    bool output_trained = true;
    {
      double max_sum = 0.0;
      for (std::size_t mu = 0; mu < p; ++mu) {
        max_sum = std::max(max_sum, std::fabs(output_sum(output, states[mu])));
      }
      PerceptronWeights base = output;
      if (max_sum > 0.0) {
        for (double& v : base) v /= max_sum;
      }
      for (int cls : {1, -1}) {
        const PerceptronWeights patched = fallback_output_update(base, cls);
        const int patched_errors = errors_of(patched);
        if (patched_errors < cand_errors) {
          cand_errors = patched_errors;
          stage_output = patched;
          output_trained = false;
        }
      }
    }

    bool used_fallback = false;
    if (cand_errors < best_errors || !config.fallback_enabled) {
      if (!config.fallback_enabled && cand_errors >= best_errors) {
        if (++stalls == 2 && cand_errors > config.max_errors && h < max_hidden) {
          throw FallbackExhausted("two consecutive stages without progress");
        }
      } else {
        stalls = 0;
      }
      append_unit(candidate);
      output = stage_output;
      kept_units += static_cast<long long>(unit_run.epochs_run) *
                    static_cast<long long>(n + 1);
      kept_output =
          output_trained ? static_cast<long long>(out_run.epochs_run) * (h + 1) : 0;
    } else {
      // Substitute the guaranteed-progress construction: isolate the nearest
      // wrong pattern with a shifted plane and patch the output so the new
      // unit's vote flips it. Both the last unit's direction and the pivot's
      // own direction are tried; the latter cuts a corner rather than a slab,
      // which on discrete inputs usually breaks nothing else.
      used_fallback = true;
      const std::size_t pivot =
          nearest_wrong_pattern(net.hidden.back(), set, stage_targets);
      double max_sum = 0.0;
      for (std::size_t mu = 0; mu < p; ++mu) {
        max_sum = std::max(max_sum, std::fabs(output_sum(output, states[mu])));
      }
      PerceptronWeights base = output;
      if (max_sum > 0.0) {
        for (double& v : base) v /= max_sum;
      }
      const PerceptronWeights patched =
          fallback_output_update(base, set.target(pivot));

      PerceptronWeights best_unit;
      int best_after = -1;
      for (const PerceptronWeights& direction :
           {net.hidden.back(), set.input(pivot)}) {
        const FallbackSplit split =
            slab_split(direction, pivot, set, stage_targets);
        int after = 0;
        for (std::size_t mu = 0; mu < p; ++mu) {
          std::vector<int> ir = states[mu];
          ir.push_back(sign(unit_sum(split.weights, set.input(mu))));
          if (sign(output_sum(patched, ir)) != set.target(mu)) ++after;
        }
        if (best_after < 0 || after < best_after) {
          best_after = after;
          best_unit = split.weights;
        }
      }
      append_unit(best_unit);
      output = patched;
      kept_output = 0;
    }

    int errors = 0;
    for (std::size_t mu = 0; mu < p; ++mu) {
      const int prediction = sign(output_sum(output, states[mu]));
      stage_targets[mu] = prediction * set.target(mu);
      if (prediction != set.target(mu)) ++errors;
    }
    best_errors = std::min(best_errors, errors);
    report.trace.push_back({h, errors, used_fallback});
    if (errors <= config.max_errors || h >= max_hidden) break;
  }

  net.output = normalize(std::move(output));
  report.weight_updates_kept = kept_units + kept_output;
  return report;
}

}  // namespace netlines
