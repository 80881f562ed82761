#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "netlines/minimerror.hpp"
#include "netlines/standardize.hpp"
#include "oracles.hpp"

using namespace netlines;

namespace {

BinaryLabeledSet xor_set() {
  return BinaryLabeledSet::from_raw(
      {{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}}, {1, -1, -1, 1});
}

BinaryLabeledSet and_set() {
  return BinaryLabeledSet::from_raw(
      {{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}}, {1, -1, -1, -1});
}

}  // namespace

TEST_CASE("stability is the signed distance times the target") {
  const PerceptronWeights w = {0.0, 1.0, 0.0};
  CHECK(stability(w, {1.0, 3.0, 4.0}, 1) == doctest::Approx(3.0));
  CHECK(stability(w, {1.0, 3.0, 4.0}, -1) == doctest::Approx(-3.0));

  PerceptronWeights doubled = w;
  for (double& v : doubled) v *= 2.0;
  CHECK(stability(doubled, {1.0, 3.0, 4.0}, 1) ==
        doctest::Approx(stability(w, {1.0, 3.0, 4.0}, 1)));

  CHECK_THROWS_AS(stability({0.0, 0.0, 0.0}, {1.0, 3.0, 4.0}, 1), ZeroWeights);
  CHECK_THROWS_AS(stability(w, {1.0, 3.0}, 1), DimensionMismatch);
}

TEST_CASE("cost: boundary pattern contributes one half") {
  const BinaryLabeledSet set = BinaryLabeledSet::from_raw({{0.0, 5.0}}, {1});
  const PerceptronWeights w = {0.0, 1.0, 0.0};  // pattern sits on the plane
  CHECK(cost(w, set, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cost(w, set, 0.01) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(cost(w, set, 0.0), NonPositiveTemperature);
}

TEST_CASE("cost: large positive stabilities contribute nothing") {
  std::vector<std::vector<double>> features;
  std::vector<int> targets;
  for (int i = 0; i < 50; ++i) {
    features.push_back({50.0 + i, 0.0});
    targets.push_back(1);
  }
  const BinaryLabeledSet set = BinaryLabeledSet::from_raw(features, targets);
  const PerceptronWeights w = normalize({0.0, 1.0, 0.0});
  // stabilities >= 50, far beyond the 2T window at T = 1
  CHECK(cost(w, set, 1.0) < 1e-8);
}

TEST_CASE("cost approaches the error count at low temperature") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    PerceptronWeights w(n + 1);
    for (double& v : w) v = gauss(rng);
    w = normalize(std::move(w));

    std::vector<std::vector<double>> features;
    std::vector<int> targets;
    while (features.size() < 30) {
      std::vector<double> x(n);
      for (double& v : x) v = 3.0 * gauss(rng);
      const int tgt = rng() % 2 == 0 ? 1 : -1;
      if (std::fabs(stability(w, augment(x), tgt)) <= 0.5) continue;
      features.push_back(x);
      targets.push_back(tgt);
    }
    const BinaryLabeledSet set = BinaryLabeledSet::from_raw(features, targets);
    const double e = cost(w, set, 0.01);
    const int errors = count_errors(w, set);
    CHECK(std::fabs(e - errors) < 1e-4);
  }
}

TEST_CASE("weight_update_direction: empty set and single-pattern closed form") {
  const BinaryLabeledSet empty(std::vector<std::vector<double>>{}, {});
  const PerceptronWeights w = normalize({0.3, -1.0, 0.7});
  const PerceptronWeights zero = weight_update_direction(w, empty, 1.0, 6.0);
  for (double v : zero) CHECK(v == 0.0);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    PerceptronWeights u(4);
    for (double& v : u) v = gauss(rng);
    u = normalize(std::move(u));
    std::vector<double> x = {gauss(rng), gauss(rng), gauss(rng)};
    const int tgt = trial % 2 == 0 ? 1 : -1;
    const BinaryLabeledSet one = BinaryLabeledSet::from_raw({x}, {tgt});
    const double t_plus = 0.7, t_minus = 4.2;
    const double stab = stability(u, one.input(0), tgt);
    const double t = stab <= 0.0 ? t_minus : t_plus;
    const double c = 1.0 / std::pow(std::cosh(stab / (2.0 * t)), 2.0);
    const PerceptronWeights dir = weight_update_direction(u, one, t_plus, t_minus);
    for (std::size_t i = 0; i < dir.size(); ++i) {
      CHECK(dir[i] == doctest::Approx(c * tgt * one.input(0)[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("weight_update_direction: patterns far outside the window are silent") {
  // stability / (2 * t_minus) = -30
  const double t_minus = 0.5, t_plus = t_minus / 6.0;
  const double stab_target = -30.0 * 2.0 * t_minus;
  const PerceptronWeights w = {0.0, std::sqrt(2.0)};  // norm sqrt(2), 1-D
  // stability = tgt * x * sqrt(2) / sqrt(2) = tgt * x
  const BinaryLabeledSet one = BinaryLabeledSet::from_raw({{-stab_target}}, {-1});
  CHECK(stability(w, one.input(0), -1) == doctest::Approx(stab_target));
  const PerceptronWeights dir = weight_update_direction(w, one, t_plus, t_minus);
  for (double v : dir) CHECK(std::fabs(v) < 1e-20);
}

TEST_CASE("normalize") {
  const PerceptronWeights out = normalize({3.0, 4.0});
  CHECK(out[0] == doctest::Approx(0.8485).epsilon(1e-4));
  CHECK(out[1] == doctest::Approx(1.1314).epsilon(1e-4));

  const PerceptronWeights again = normalize(out);
  CHECK(again[0] == doctest::Approx(out[0]).epsilon(1e-12));
  CHECK(again[1] == doctest::Approx(out[1]).epsilon(1e-12));

  const PerceptronWeights scaled = normalize({30.0, 40.0});
  CHECK(scaled[0] == doctest::Approx(out[0]).epsilon(1e-12));
  CHECK_THROWS_AS(normalize({0.0, 0.0}), ZeroWeights);
}

TEST_CASE("count_errors") {
  const BinaryLabeledSet set = and_set();
  // x + y - 1 separates AND
  const PerceptronWeights w = normalize({-1.0, 1.0, 1.0});
  CHECK(count_errors(w, set) == 0);

  std::vector<int> flipped = set.targets();
  for (int& t : flipped) t = -t;
  const BinaryLabeledSet anti(set.inputs(), flipped);
  CHECK(count_errors(w, set) + count_errors(w, anti) == static_cast<int>(set.size()));
}

TEST_CASE("train_perceptron solves AND and a single pattern") {
  MinimerrorConfig cfg;
  const TrainReport and_report = train_perceptron(and_set(), cfg);
  CHECK(and_report.training_errors == 0);

  const BinaryLabeledSet one = BinaryLabeledSet::from_raw({{2.0, -1.0, 0.5}}, {-1});
  const TrainReport single = train_perceptron(one, cfg);
  CHECK(single.training_errors == 0);
  CHECK(stability(single.weights, one.input(0), -1) > 0.0);
}

TEST_CASE("train_perceptron reaches the exhaustive optimum on xor") {
  const BinaryLabeledSet set = xor_set();
  const int oracle = oracles::best_plane_errors(
      {{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}}, {1, -1, -1, 1});
  CHECK(oracle == 1);
  MinimerrorConfig cfg;
  cfg.rng_seed = 1;
  const TrainReport report = train_perceptron(set, cfg);
  CHECK(report.training_errors == 1);
  CHECK(count_errors(report.weights, set) == 1);
}

TEST_CASE("training keeps the norm and follows the annealing schedule") {
  MinimerrorConfig cfg;
  cfg.max_epochs = 137;
  const BinaryLabeledSet set = xor_set();
  const TrainReport report = train_perceptron(set, cfg);
  double norm = 0.0;
  for (double v : report.weights) norm += v * v;
  CHECK(std::fabs(std::sqrt(norm) - std::sqrt(3.0)) < 1e-9);
  CHECK(report.epochs_run == 137);  // xor never reaches zero errors
  const double expected_t = 1.0 / (1.0 / std::sqrt(3.0) + 137 * cfg.annealing_rate);
  CHECK(report.final_temperature == doctest::Approx(expected_t).epsilon(1e-12));
}

TEST_CASE("returned error count never exceeds the Hebbian start") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<double>> features;
    std::vector<int> targets;
    for (int mu = 0; mu < 25; ++mu) {
      features.push_back({gauss(rng), gauss(rng), gauss(rng)});
      targets.push_back(rng() % 2 == 0 ? 1 : -1);
    }
    const BinaryLabeledSet set = BinaryLabeledSet::from_raw(features, targets);

    PerceptronWeights hebb(4, 0.0);
    for (std::size_t mu = 0; mu < set.size(); ++mu) {
      for (std::size_t i = 0; i < 4; ++i) {
        hebb[i] += set.target(mu) * set.input(mu)[i];
      }
    }
    MinimerrorConfig cfg;
    cfg.max_epochs = 2000;
    const TrainReport report = train_perceptron(set, cfg);
    CHECK(report.training_errors <= count_errors(normalize(hebb), set));
    CHECK(report.training_errors == count_errors(report.weights, set));
  }
}

TEST_CASE("train_perceptron recovers random separable sets") {
  std::mt19937_64 rng(23);
  MinimerrorConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> features;
    std::vector<int> targets;
    oracles::random_ls_set(rng, 20, 0.1, features, targets);
    const BinaryLabeledSet set = BinaryLabeledSet::from_raw(features, targets);
    cfg.rng_seed = trial;
    const TrainReport report = train_perceptron(set, cfg);
    CHECK(report.training_errors == 0);
  }
}

TEST_CASE("confidence") {
  const PerceptronWeights w = normalize({0.0, 1.0, 1.0});
  CHECK(confidence(w, {1.0, 1.0, -1.0}, 0.5) == doctest::Approx(0.0));  // on plane
  CHECK(confidence(w, {1.0, 100.0, 100.0}, 0.5) > 1.0 - 1e-8);

  PerceptronWeights scaled = w;
  for (double& v : scaled) v *= 7.5;
  CHECK(confidence(scaled, {1.0, 2.0, 0.3}, 0.7) ==
        doctest::Approx(confidence(w, {1.0, 2.0, 0.3}, 0.7)).epsilon(1e-12));
  CHECK_THROWS_AS(confidence(w, {1.0, 1.0, 1.0}, 0.0), NonPositiveTemperature);
}
