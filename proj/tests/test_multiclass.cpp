#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "netlines/multiclass.hpp"

using namespace netlines;

namespace {

// Bias-only network forced to a constant answer.
NetLinesNetwork constant_net(int answer, std::size_t input_dim) {
  NetLinesNetwork net;
  net.input_dim = input_dim;
  std::vector<double> w(input_dim + 1, 0.0);
  w[0] = answer;
  net.hidden = {normalize(std::move(w))};
  net.output = {0.0, std::sqrt(2.0)};
  net.linearly_separable = true;
  return net;
}

// Three well separated clusters on a line.
Dataset three_clusters(std::mt19937_64& rng, std::size_t per_class) {
  std::normal_distribution<double> gauss(0.0, 0.15);
  std::vector<Pattern> patterns;
  const double centers[3] = {-4.0, 0.0, 4.0};
  const int labels[3] = {7, 8, 9};
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      patterns.push_back({{centers[c] + gauss(rng), gauss(rng)}, labels[c]});
    }
  }
  return Dataset(std::move(patterns));
}

}  // namespace

TEST_CASE("ton_predict follows the first positive network") {
  Ton ton;
  ton.sequence = {10, 20, 30};
  SUBCASE("first network fires") {
    ton.chain = {constant_net(1, 2), constant_net(-1, 2)};
    CHECK(ton_predict(ton, {0.0, 0.0}) == 10);
  }
  SUBCASE("second network fires") {
    ton.chain = {constant_net(-1, 2), constant_net(1, 2)};
    CHECK(ton_predict(ton, {0.0, 0.0}) == 20);
  }
  SUBCASE("nobody fires: trailing class") {
    ton.chain = {constant_net(-1, 2), constant_net(-1, 2)};
    CHECK(ton_predict(ton, {0.0, 0.0}) == 30);
  }
}

TEST_CASE("train_ton removes each class before the next stage") {
  std::mt19937_64 rng(1);
  const Dataset data = three_clusters(rng, 12);
  GrowthConfig cfg;
  const TonReport rep = train_ton(data, {8, 7, 9}, cfg);
  CHECK(rep.ton.chain.size() == 2);
  // stage 2 never saw class 8: its training set had 24 patterns
  CHECK(rep.reports.size() == 2);
  CHECK(rep.reports[0].trace.front().hidden_units == 1);

  int correct = 0;
  for (const Pattern& p : data.patterns()) {
    if (ton_predict(rep.ton, p.features) == p.label) ++correct;
  }
  CHECK(correct == static_cast<int>(data.size()));

  CHECK_THROWS_AS(train_ton(data, {7, 8}, cfg), Error);  // not a permutation
  CHECK_THROWS_AS(train_ton(data, {7, 8, 9, 10}, cfg), Error);
}

TEST_CASE("two-class chains agree with the bare binary network") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> gauss(0.0, 0.2);
  std::vector<Pattern> patterns;
  for (int i = 0; i < 15; ++i) {
    patterns.push_back({{-2.0 + gauss(rng), gauss(rng)}, 1});
    patterns.push_back({{2.0 + gauss(rng), gauss(rng)}, 2});
  }
  const Dataset data(std::move(patterns));
  GrowthConfig cfg;
  const TonReport rep = train_ton(data, {1, 2}, cfg);
  CHECK(rep.ton.chain.size() == 1);
  for (const Pattern& p : data.patterns()) {
    const int direct = forward(rep.ton.chain[0], p.features) == 1 ? 1 : 2;
    CHECK(ton_predict(rep.ton, p.features) == direct);
  }
}

TEST_CASE("wta_predict picks the largest weighted sum, ties to the lowest id") {
  WtaClassifier wta;
  wta.classes = {4, 2};
  wta.networks = {constant_net(1, 1), constant_net(-1, 1)};
  CHECK(wta_predict(wta, {0.3}) == 4);  // only network 0 answers +1

  // all negative: least negative weighted sum wins
  NetLinesNetwork weak = constant_net(-1, 1);
  weak.output = normalize({-0.1, 1.0});  // sum = -0.1 + sigma, sigma = -1
  WtaClassifier all_neg;
  all_neg.classes = {5, 6};
  NetLinesNetwork strong = constant_net(-1, 1);
  strong.output = normalize({-2.0, 1.0});
  all_neg.networks = {strong, weak};
  CHECK(wta_predict(all_neg, {0.0}) == 6);

  // identical networks give exactly equal sums
  WtaClassifier tie;
  tie.classes = {9, 3};
  tie.networks = {constant_net(1, 1), constant_net(1, 1)};
  CHECK(wta_predict(tie, {0.0}) == 3);
}

TEST_CASE("train_wta separates the clusters") {
  std::mt19937_64 rng(3);
  const Dataset data = three_clusters(rng, 10);
  GrowthConfig cfg;
  const WtaReport rep = train_wta(data, cfg);
  CHECK(rep.classifier.networks.size() == 3);
  int correct = 0;
  for (const Pattern& p : data.patterns()) {
    if (wta_predict(rep.classifier, p.features) == p.label) ++correct;
  }
  CHECK(correct == static_cast<int>(data.size()));
}

TEST_CASE("vote_predict: plurality with first-member tie break") {
  auto make_ton = [](int answer_class, int other_a, int other_b) {
    Ton ton;
    ton.sequence = {answer_class, other_a, other_b};
    ton.chain = {constant_net(1, 1), constant_net(-1, 1)};
    return ton;  // always answers answer_class
  };
  TonEnsemble agree;
  agree.tons = {make_ton(1, 2, 3), make_ton(1, 2, 3), make_ton(1, 3, 2)};
  CHECK(vote_predict(agree, {0.0}) == 1);

  TonEnsemble majority;
  majority.tons = {make_ton(2, 1, 3), make_ton(2, 1, 3), make_ton(3, 1, 2)};
  CHECK(vote_predict(majority, {0.0}) == 2);

  TonEnsemble split;
  split.tons = {make_ton(2, 1, 3), make_ton(1, 2, 3), make_ton(3, 1, 2)};
  CHECK(vote_predict(split, {0.0}) == 2);  // first member breaks the tie
}

TEST_CASE("ensemble_sequences: odd committees of distinct permutations") {
  const std::vector<int> classes = {3, 1, 2};
  const auto def = ensemble_sequences(classes, 0, 77);
  CHECK(def.size() == 3);
  std::set<std::vector<int>> distinct(def.begin(), def.end());
  CHECK(distinct.size() == 3);
  for (const auto& seq : def) {
    std::set<int> ids(seq.begin(), seq.end());
    CHECK(ids == std::set<int>{1, 2, 3});
  }

  CHECK(ensemble_sequences(classes, 4, 77).size() == 3);   // rounded down to odd
  CHECK(ensemble_sequences(classes, 9, 77).size() == 5);   // capped at 6, odd
  CHECK(ensemble_sequences({1, 2}, 0, 5).size() == 1);     // min(2,3) odd
  CHECK(ensemble_sequences(classes, 0, 77) == def);        // seeded determinism
  CHECK(ensemble_sequences(classes, 0, 78) != def);
}

TEST_CASE("train_ton_ensemble votes at least as well as its members here") {
  std::mt19937_64 rng(4);
  const Dataset data = three_clusters(rng, 8);
  GrowthConfig cfg;
  const EnsembleReport rep = train_ton_ensemble(data, 3, cfg, 123);
  CHECK(rep.ensemble.tons.size() == 3);
  int correct = 0;
  for (const Pattern& p : data.patterns()) {
    if (vote_predict(rep.ensemble, p.features) == p.label) ++correct;
  }
  CHECK(correct == static_cast<int>(data.size()));
}
