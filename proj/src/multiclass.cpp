#include "netlines/multiclass.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "netlines/util.hpp"

namespace netlines {

namespace {

void check_sequence(const Dataset& data, const std::vector<int>& sequence) {
  const std::vector<int> ids = data.class_ids();
  if (sequence.size() < 2) throw Error("a learning sequence needs at least two classes");
  std::set<int> seq(sequence.begin(), sequence.end());
  if (seq.size() != sequence.size()) throw Error("learning sequence repeats a class");
  std::set<int> present(ids.begin(), ids.end());
  if (seq != present) {
    throw Error("learning sequence must be a permutation of the dataset's classes");
  }
}

double network_sum(const NetLinesNetwork& net, const std::vector<double>& features) {
  const InternalRepresentation ir = compute_ir(net, features);
  double s = 0.0;
  for (std::size_t k = 0; k < ir.size(); ++k) s += net.output[k] * ir[k];
  return s;
}

}  // namespace

TonReport train_ton(const Dataset& data, const std::vector<int>& sequence,
                    const GrowthConfig& config) {
  check_sequence(data, sequence);
  TonReport report;
  report.ton.sequence = sequence;

  Dataset remaining = data;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (remaining.class_ids().size() < 2) {
      throw DegenerateClass("stage " + std::to_string(i + 1) +
                            " has a single class left");
    }
    GrowthConfig stage = config;
    stage.trainer.rng_seed = mix_seed(config.trainer.rng_seed, 1000 + i);
    GrowthReport grown = train_netlines(
        BinaryLabeledSet::from_dataset(remaining, sequence[i]), stage);
    report.ton.chain.push_back(grown.network);
    report.reports.push_back(std::move(grown));
    remaining = remaining.without_class(sequence[i]);
  }
  return report;
}

int ton_predict(const Ton& ton, const std::vector<double>& features) {
  for (std::size_t i = 0; i < ton.chain.size(); ++i) {
    if (forward(ton.chain[i], features) == 1) return ton.sequence[i];
  }
  return ton.sequence.back();
}

std::vector<std::vector<int>> ensemble_sequences(const std::vector<int>& classes,
                                                 int requested, std::uint64_t seed) {
  if (classes.size() < 2) throw Error("need at least two classes");
  std::vector<int> sorted = classes;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<int>> all;
  std::mt19937_64 rng(seed);
  if (classes.size() <= 8) {
    std::vector<int> perm = sorted;
    do {
      all.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::shuffle(all.begin(), all.end(), rng);
  } else {
    // Too many permutations to enumerate; draw distinct shuffles directly.
    std::set<std::vector<int>> seen;
    while (static_cast<int>(all.size()) < std::max(requested, 3)) {
      std::vector<int> perm = sorted;
      std::shuffle(perm.begin(), perm.end(), rng);
      if (seen.insert(perm).second) all.push_back(perm);
    }
  }

  std::size_t want = requested > 0 ? static_cast<std::size_t>(requested)
                                   : std::min<std::size_t>(all.size(), 3);
  want = std::min(want, all.size());
  if (want % 2 == 0) --want;  // the committee must be odd
  if (want == 0) want = 1;
  all.resize(want);
  return all;
}

EnsembleReport train_ton_ensemble(const Dataset& data, int requested,
                                  const GrowthConfig& config, std::uint64_t seed) {
  const std::vector<std::vector<int>> sequences =
      ensemble_sequences(data.class_ids(), requested, mix_seed(seed, 2));
  EnsembleReport report;
  for (std::size_t t = 0; t < sequences.size(); ++t) {
    GrowthConfig member = config;
    member.trainer.rng_seed = mix_seed(seed, 5000 + t);
    TonReport tr = train_ton(data, sequences[t], member);
    report.ensemble.tons.push_back(tr.ton);
    report.tons.push_back(std::move(tr));
  }
  return report;
}

int vote_predict(const TonEnsemble& ensemble, const std::vector<double>& features) {
  if (ensemble.tons.empty()) throw Error("empty ensemble");
  std::vector<int> votes;
  votes.reserve(ensemble.tons.size());
  for (const Ton& ton : ensemble.tons) {
    votes.push_back(ton_predict(ton, features));
  }
  int best = votes[0];
  std::size_t best_count = 0;
  for (int vote : votes) {
    const std::size_t count =
        static_cast<std::size_t>(std::count(votes.begin(), votes.end(), vote));
    if (count > best_count) {
      best = vote;
      best_count = count;
    }
    // Earlier members win ties because later equal counts never replace.
  }
  return best;
}

WtaReport train_wta(const Dataset& data, const GrowthConfig& config) {
  const std::vector<int> classes = data.class_ids();
  if (classes.size() < 2) throw Error("need at least two classes");
  WtaReport report;
  report.classifier.classes = classes;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    GrowthConfig member = config;
    member.trainer.rng_seed = mix_seed(config.trainer.rng_seed, 9000 + k);
    GrowthReport grown =
        train_netlines(BinaryLabeledSet::from_dataset(data, classes[k]), member);
    report.classifier.networks.push_back(grown.network);
    report.reports.push_back(std::move(grown));
  }
  return report;
}

int wta_predict(const WtaClassifier& wta, const std::vector<double>& features) {
  if (wta.networks.empty()) throw Error("classifier has no networks");
  int best_class = wta.classes[0];
  double best_sum = network_sum(wta.networks[0], features);
  for (std::size_t k = 1; k < wta.networks.size(); ++k) {
    const double s = network_sum(wta.networks[k], features);
    if (s > best_sum || (s == best_sum && wta.classes[k] < best_class)) {
      best_sum = s;
      best_class = wta.classes[k];
    }
  }
  return best_class;
}

}  // namespace netlines
