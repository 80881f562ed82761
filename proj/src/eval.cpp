#include "netlines/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "netlines/csv.hpp"
#include "netlines/util.hpp"

namespace netlines {

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double sq = 0.0;
  for (double x : v) sq += (x - m) * (x - m);
  return std::sqrt(sq / static_cast<double>(v.size() - 1));
}

}  // namespace

TrainOutcome train_model(const Dataset& data, const TrainSpec& spec) {
  if (data.size() == 0) throw EmptyDataset("cannot train on an empty dataset");
  TrainOutcome out;
  Model& m = out.model;
  m.kind = spec.kind;
  m.input_dim = data.feature_dim();

  GrowthConfig growth = spec.growth;
  growth.trainer.rng_seed = mix_seed(spec.seed, 1);

  switch (spec.kind) {
    case ModelKind::binary: {
      const std::vector<int> classes = data.class_ids();
      if (classes.size() != 2) {
        throw Error("binary training needs exactly two classes, found " +
                    std::to_string(classes.size()));
      }
      const int positive = spec.positive_set ? spec.positive_class : classes[0];
      if (std::find(classes.begin(), classes.end(), positive) == classes.end()) {
        throw Error("positive class " + std::to_string(positive) +
                    " is not present in the data");
      }
      m.positive_class = positive;
      m.negative_class = classes[0] == positive ? classes[1] : classes[0];
      GrowthReport rep =
          train_netlines(BinaryLabeledSet::from_dataset(data, positive), growth);
      m.binary = rep.network;
      m.standardizers.push_back(rep.standardizer);
      out.reports.push_back(std::move(rep));
      break;
    }
    case ModelKind::ton: {
      const std::vector<int> sequence =
          spec.sequence.empty() ? data.class_ids() : spec.sequence;
      TonReport rep = train_ton(data, sequence, growth);
      m.ton = rep.ton;
      for (auto& r : rep.reports) {
        m.standardizers.push_back(r.standardizer);
        out.reports.push_back(std::move(r));
      }
      break;
    }
    case ModelKind::ensemble: {
      EnsembleReport rep =
          train_ton_ensemble(data, spec.ensemble_size, growth, spec.seed);
      m.ensemble = rep.ensemble;
      for (auto& tr : rep.tons) {
        for (auto& r : tr.reports) {
          m.standardizers.push_back(r.standardizer);
          out.reports.push_back(std::move(r));
        }
      }
      break;
    }
    case ModelKind::wta: {
      WtaReport rep = train_wta(data, growth);
      m.wta = rep.classifier;
      for (auto& r : rep.reports) {
        m.standardizers.push_back(r.standardizer);
        out.reports.push_back(std::move(r));
      }
      break;
    }
  }
  return out;
}

double error_fraction(const Model& m, const Dataset& data) {
  if (data.size() == 0) throw EmptyDataset("cannot evaluate on an empty dataset");
  std::size_t wrong = 0;
  for (const Pattern& p : data.patterns()) {
    if (predict(m, p.features) != p.label) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

double EvalSummary::mean_test_error() const {
  std::vector<double> v;
  for (const RunResult& r : runs) v.push_back(r.test_error);
  return mean_of(v);
}

double EvalSummary::stddev_test_error() const {
  std::vector<double> v;
  for (const RunResult& r : runs) v.push_back(r.test_error);
  return sample_stddev(v);
}

double EvalSummary::mean_train_error() const {
  std::vector<double> v;
  for (const RunResult& r : runs) v.push_back(r.train_error);
  return mean_of(v);
}

double EvalSummary::mean_hidden() const {
  std::vector<double> v;
  for (const RunResult& r : runs) v.push_back(static_cast<double>(r.hidden_total));
  return mean_of(v);
}

double EvalSummary::mean_weights() const {
  std::vector<double> v;
  for (const RunResult& r : runs) v.push_back(static_cast<double>(r.weights));
  return mean_of(v);
}

double EvalSummary::mean_per_ton_error() const {
  std::vector<double> v;
  for (const RunResult& r : runs) {
    for (double e : r.per_ton_test_error) v.push_back(e);
  }
  return mean_of(v);
}

namespace {

RunResult run_once(const Dataset& train, const Dataset& test, const TrainSpec& spec,
                   int run_id) {
  const TrainOutcome outcome = train_model(train, spec);
  RunResult r;
  r.run_id = run_id;
  r.train_size = train.size();
  r.test_size = test.size();
  r.hidden_total = total_hidden_units(outcome.model);
  r.weights = weight_count(outcome.model);
  r.train_error = error_fraction(outcome.model, train);
  r.test_error = error_fraction(outcome.model, test);
  if (outcome.model.kind == ModelKind::ensemble) {
    for (const Ton& ton : outcome.model.ensemble.tons) {
      std::size_t wrong = 0;
      for (const Pattern& p : test.patterns()) {
        if (ton_predict(ton, p.features) != p.label) ++wrong;
      }
      r.per_ton_test_error.push_back(static_cast<double>(wrong) /
                                     static_cast<double>(test.size()));
    }
  }
  return r;
}

}  // namespace

EvalSummary holdout_eval(const Dataset& data, std::size_t train_size, int repeats,
                         const std::optional<Dataset>& fixed_test,
                         const TrainSpec& spec) {
  if (train_size == 0 || train_size > data.size()) {
    throw Error("holdout train size must lie in [1, dataset size]");
  }
  if (!fixed_test && train_size == data.size()) {
    throw Error("holdout needs at least one held-out pattern or a fixed test set");
  }
  if (repeats < 1) throw Error("need at least one repeat");

  EvalSummary summary;
  for (int run = 0; run < repeats; ++run) {
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(mix_seed(spec.seed, 200 + static_cast<std::uint64_t>(run)));
    std::shuffle(order.begin(), order.end(), rng);

    const std::vector<std::size_t> train_idx(order.begin(),
                                             order.begin() + train_size);
    const Dataset train = data.subset(train_idx);
    Dataset test;
    if (fixed_test) {
      test = *fixed_test;
    } else {
      const std::vector<std::size_t> test_idx(order.begin() + train_size,
                                              order.end());
      test = data.subset(test_idx);
    }

    TrainSpec run_spec = spec;
    run_spec.seed = mix_seed(spec.seed, 100 + static_cast<std::uint64_t>(run));
    summary.runs.push_back(run_once(train, test, run_spec, run));
  }
  return summary;
}

EvalSummary loo_eval(const Dataset& data, const TrainSpec& spec) {
  if (data.size() < 2) throw EmptyDataset("leave-one-out needs at least two patterns");
  EvalSummary summary;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::vector<std::size_t> train_idx;
    train_idx.reserve(data.size() - 1);
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (j != i) train_idx.push_back(j);
    }
    const Dataset train = data.subset(train_idx);
    const Dataset test = data.subset({i});

    TrainSpec run_spec = spec;
    run_spec.seed = mix_seed(spec.seed, 300 + static_cast<std::uint64_t>(i));
    summary.runs.push_back(run_once(train, test, run_spec, static_cast<int>(i)));
  }
  return summary;
}

EvalSummary fixed_eval(const Dataset& train, const Dataset& test,
                       const TrainSpec& spec) {
  EvalSummary summary;
  summary.runs.push_back(run_once(train, test, spec, 0));
  return summary;
}

std::string report_csv(const EvalSummary& summary) {
  std::ostringstream out;
  out << "run_id,P,G,H,weights,et,eg\n";
  for (const RunResult& r : summary.runs) {
    out << r.run_id << ',' << r.train_size << ',' << r.test_size << ','
        << r.hidden_total << ',' << r.weights << ',' << format_double(r.train_error)
        << ',' << format_double(r.test_error) << '\n';
  }
  return out.str();
}

}  // namespace netlines
