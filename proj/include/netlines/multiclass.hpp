#pragma once

#include <cstdint>
#include <vector>

#include "netlines/netlines.hpp"

namespace netlines {

// Tree of networks: an ordered chain of C-1 one-vs-rest classifiers. Network i
// answers +1 for class sequence[i] against the classes after it; the patterns
// of sequence[i] are removed before network i+1 is trained.
struct Ton {
  std::vector<int> sequence;            // class ids, length C
  std::vector<NetLinesNetwork> chain;   // length C-1
};

// Odd committee of chains over the same classes, each trained with a different
// learning sequence.
struct TonEnsemble {
  std::vector<Ton> tons;
};

struct WtaClassifier {
  std::vector<int> classes;
  std::vector<NetLinesNetwork> networks;  // one-vs-rest, aligned with classes
};

struct TonReport {
  Ton ton;
  std::vector<GrowthReport> reports;  // aligned with chain
};
struct EnsembleReport {
  TonEnsemble ensemble;
  std::vector<TonReport> tons;
};
struct WtaReport {
  WtaClassifier classifier;
  std::vector<GrowthReport> reports;
};

TonReport train_ton(const Dataset& data, const std::vector<int>& sequence,
                    const GrowthConfig& config);

/// Class of the first chain network answering +1; the trailing class when all
/// answer -1.
int ton_predict(const Ton& ton, const std::vector<double>& features);

/// Learning sequences for an ensemble: a seeded shuffle of all permutations of
/// the classes, truncated to an odd count (default min(C!, 3) rounded down).
std::vector<std::vector<int>> ensemble_sequences(const std::vector<int>& classes,
                                                 int requested, std::uint64_t seed);

EnsembleReport train_ton_ensemble(const Dataset& data, int requested,
                                  const GrowthConfig& config, std::uint64_t seed);

/// Plurality over the member predictions; ties go to the earliest member whose
/// vote is among the tied classes.
int vote_predict(const TonEnsemble& ensemble, const std::vector<double>& features);

WtaReport train_wta(const Dataset& data, const GrowthConfig& config);

/// Class whose network has the largest output weighted sum; exact ties go to
/// the lowest class id.
int wta_predict(const WtaClassifier& wta, const std::vector<double>& features);

}  // namespace netlines
