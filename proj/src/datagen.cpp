#include "netlines/datagen.hpp"

#include <cmath>
#include <random>
#include <string>

namespace netlines {

Dataset gen_parity(int n_bits) {
  if (n_bits < 1 || n_bits > 20) {
    throw NOutOfRange("parity supports 1 to 20 bits, got " + std::to_string(n_bits));
  }
  const std::size_t count = std::size_t{1} << n_bits;
  std::vector<Pattern> patterns;
  patterns.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    Pattern p;
    p.features.resize(n_bits);
    int product = 1;
    for (int j = 0; j < n_bits; ++j) {
      const int bit = (index >> (n_bits - 1 - j)) & 1;
      p.features[j] = bit ? -1.0 : 1.0;
      product *= bit ? -1 : 1;
    }
    p.label = product;
    patterns.push_back(std::move(p));
  }
  return Dataset(std::move(patterns));
}

int count_clumps(const RingPattern& ring) {
  if (ring.size() < 3) throw Error("a ring needs at least three bits");
  for (int b : ring) {
    if (b != 1 && b != -1) throw Error("ring bits must be -1 or +1");
  }
  const std::size_t n = ring.size();
  int rises = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == -1 && ring[(i + 1) % n] == 1) ++rises;
  }
  if (rises == 0) return ring[0] == 1 ? 1 : 0;
  return rises;
}

Dataset gen_clumps(int n_bits, double density, std::size_t count,
                   std::uint64_t seed) {
  if (n_bits < 3) throw Error("ring size must be at least 3");
  if (count < 1) throw EmptyDataset("need at least one ring");
  if (density <= 0.0 || density > static_cast<double>(n_bits)) {
    throw BadDensity("density must lie in (0, n_bits]");
  }
  const double flip = density / static_cast<double>(n_bits);
  if (flip == 1.0 && n_bits % 2 == 1) {
    throw BadDensity("full density has no consistent ring for odd sizes");
  }

  // Rings follow the cyclic Markov measure: each of the n adjacencies weighs
  // `flip` when the bits differ and 1-flip when they agree. A free chain
  // realizes n-1 adjacencies; the wrap pair is enforced by rejection.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double max_weight = std::max(flip, 1.0 - flip);

  std::vector<Pattern> patterns;
  patterns.reserve(count);
  RingPattern ring(n_bits);
  while (patterns.size() < count) {
    ring[0] = unit(rng) < 0.5 ? 1 : -1;
    for (int i = 1; i < n_bits; ++i) {
      ring[i] = unit(rng) < flip ? -ring[i - 1] : ring[i - 1];
    }
    const double wrap_weight = ring[n_bits - 1] != ring[0] ? flip : 1.0 - flip;
    if (unit(rng) >= wrap_weight / max_weight) continue;

    Pattern p;
    p.features.assign(ring.begin(), ring.end());
    p.label = count_clumps(ring) < 2 ? 1 : -1;
    patterns.push_back(std::move(p));
  }
  return Dataset(std::move(patterns));
}

double elementary_wave(int which, double t) {
  double center = 0.0;
  switch (which) {
    case 1: center = 11.0; break;
    case 2: center = 15.0; break;
    case 3: center = 7.0; break;
    default: throw Error("elementary wave index must be 1, 2 or 3");
  }
  return std::max(6.0 - std::fabs(t - center), 0.0);
}

std::vector<double> waveform_sample(int label, double blend,
                                    const std::vector<double>& noise) {
  if (noise.size() != 21) throw DimensionMismatch("noise must have 21 components");
  int a = 0, b = 0;
  switch (label) {
    case 1: a = 1; b = 2; break;
    case 2: a = 1; b = 3; break;
    case 3: a = 2; b = 3; break;
    default: throw Error("waveform label must be 1, 2 or 3");
  }
  std::vector<double> x(21);
  for (int t = 1; t <= 21; ++t) {
    x[t - 1] = blend * elementary_wave(a, t) +
               (1.0 - blend) * elementary_wave(b, t) + noise[t - 1];
  }
  return x;
}

Dataset gen_waveforms(std::size_t count, std::uint64_t seed, double noise_stddev) {
  if (count < 1) throw EmptyDataset("need at least one waveform");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Pattern> patterns;
  patterns.reserve(count);
  std::vector<double> noise(21);
  for (std::size_t i = 0; i < count; ++i) {
    const int label = pick(rng);
    const double blend = unit(rng);
    for (double& v : noise) v = noise_stddev * gauss(rng);
    Pattern p;
    p.features = waveform_sample(label, blend, noise);
    p.label = label;
    patterns.push_back(std::move(p));
  }
  return Dataset(std::move(patterns));
}

}  // namespace netlines
