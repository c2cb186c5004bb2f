#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fwdarc/harness/instance_io.hpp"

namespace fwdarc::harness {

// Seeded generator whose output depends only on the seed: the raw
// mt19937_64 stream is fixed by the standard, and the bounded/real
// helpers below avoid the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct SmdParams {
  std::vector<std::size_t> sizes;
  double digon_prob = 0.0;
  // Probability that a non-digon pair points from the lower-indexed part.
  double bias = 0.5;
};

struct LsdParams {
  std::vector<std::size_t> component_sizes;
  double digon_prob = 0.2;
  // Chance of extending each component's reach one layer further.
  double skip_prob = 0.3;
  // Arrange components cyclically, giving a strong LSD.
  bool round = false;
};

// Random SMD with the given partite sizes; parts are attached to the
// instance. Vertex labels are shuffled.
Instance generate_smd(const SmdParams& params, std::uint64_t seed);

// Random LSD built from strong semicomplete components with full
// consecutive domination and interval-respecting extra domination.
Instance generate_lsd(const LsdParams& params, std::uint64_t seed);

// Random strong semicomplete digraph on k vertices (k >= 1).
Digraph random_strong_semicomplete(int k, double digon_prob, Rng& rng);

}  // namespace fwdarc::harness
