#pragma once

#include <cstdint>
#include <vector>

#include "netlines/dataset.hpp"
#include "netlines/minimerror.hpp"
#include "netlines/standardize.hpp"

namespace netlines {

// Feedforward classifier with one hidden layer of threshold units and a
// threshold output unit, grown one hidden unit at a time.
//
// Hidden weights act on augmented user-unit inputs (training happens on
// standardized data; the stored vectors are mapped back). Every stored weight
// vector is normalized to sqrt of its own length.
struct NetLinesNetwork {
  std::size_t input_dim = 0;               // N
  std::vector<PerceptronWeights> hidden;   // each of length N+1
  PerceptronWeights output;                // length H+1, element 0 is the bias
  bool linearly_separable = false;         // single unit solved the set

  std::size_t hidden_count() const { return hidden.size(); }
};

// Hidden-layer state for one input: element 0 is fixed to 1, the rest are the
// +-1 answers of the hidden units.
using InternalRepresentation = std::vector<int>;

struct GrowthConfig {
  int max_hidden = 0;           // <= 0 selects P, the trivial upper bound
  int max_errors = 0;           // tolerated residual training errors
  bool fallback_enabled = true;
  // Annealing runs per unit: one Hebbian start plus seeded random restarts,
  // keeping the lowest error count. Restarts stop early once a run is perfect.
  int unit_restarts = 16;
  MinimerrorConfig trainer;
};

struct StageRecord {
  int hidden_units = 0;
  int errors = 0;       // network training errors after this stage
  bool fallback = false;
};

struct GrowthReport {
  NetLinesNetwork network;
  Standardizer standardizer;          // provenance: fitted on the training set
  std::vector<StageRecord> trace;
  long long weight_updates_kept = 0;  // updates spent on retained vectors
  long long weight_updates_total = 0; // includes dropped output units
};

InternalRepresentation compute_ir(const NetLinesNetwork& net,
                                  const std::vector<double>& features);
int forward(const NetLinesNetwork& net, const std::vector<double>& features);

/// Grows a network until the training error drops to max_errors or max_hidden
/// units were added.
///
/// Unit 1 learns the raw targets; if it solves the set the network is returned
/// with linearly_separable set. Otherwise each new unit learns +1 for patterns
/// the current network classifies correctly and -1 for the rest, the output
/// unit is retrained on the hidden states after every addition, and the stage
/// targets are refreshed from the new predictions. A stage whose error count
/// fails to improve on the best seen so far is discarded and replaced by the
/// guaranteed-progress fallback construction below.
GrowthReport train_netlines(const BinaryLabeledSet& set, const GrowthConfig& config);

// Fallback construction: a unit parallel to `w` that answers -1 on the nearest
// still-wrong pattern (the pivot) and +1 on everything the network already
// classifies correctly except patterns beyond the pivot on its side of the
// plane. Paired with fallback_output_update it makes the pivot correct while
// leaving every preserved pattern's output unchanged, so the correct set grows
// by at least one per invocation.
struct FallbackSplit {
  PerceptronWeights weights;            // normalized, same space as w
  std::size_t pivot = 0;                // index of the isolated wrong pattern
  std::vector<std::size_t> preserved;   // correct patterns strictly between the
                                        // plane and the pivot, on its side
  double shift_fraction = 0.0;          // chosen inside the admissible interval
};

/// stage_targets marks with -1 the patterns the current network gets wrong.
/// Throws NoWronglyLearnedPattern when none is marked.
FallbackSplit fallback_split_unit(const PerceptronWeights& w,
                                  const BinaryLabeledSet& set,
                                  const std::vector<int>& stage_targets);

/// Output weights after appending a fallback unit: the bias absorbs the
/// pivot's class, existing components stay, the new unit votes -pivot_target.
PerceptronWeights fallback_output_update(const PerceptronWeights& output,
                                         int pivot_target);

}  // namespace netlines
