#pragma once

#include <cstdint>
#include <vector>

#include "netlines/dataset.hpp"

namespace netlines {

// Ring of +-1 bits; the last bit is adjacent to the first.
using RingPattern = std::vector<int>;

/// All 2^n +-1 patterns labeled by the product of their bits (+1 for an even
/// number of -1 bits). n must lie in [1, 20].
Dataset gen_parity(int n_bits);

/// Number of maximal cyclic blocks of +1 bits. The all-plus ring counts as one
/// clump, the all-minus ring as zero.
int count_clumps(const RingPattern& ring);

/// Rings sampled from the cyclic Markov measure with flip weight
/// density/n_bits per adjacency, labeled +1 when the ring has fewer than two
/// clumps. density 3 gives a mean clump count near 1.5.
Dataset gen_clumps(int n_bits, double density, std::size_t count,
                   std::uint64_t seed);

/// Three-class task over 21 amplitudes: each pattern blends two of three
/// triangular waves with a uniform coefficient and adds unit Gaussian noise.
Dataset gen_waveforms(std::size_t count, std::uint64_t seed,
                      double noise_stddev = 1.0);

/// The triangular waves (height 6, centered at t = 11, 15, 7 for which = 1,2,3).
double elementary_wave(int which, double t);

/// Deterministic composition used by gen_waveforms: blend * wave_a +
/// (1-blend) * wave_b + noise, with (a,b) = (1,2), (1,3), (2,3) for labels 1..3.
std::vector<double> waveform_sample(int label, double blend,
                                    const std::vector<double>& noise);

}  // namespace netlines
