#include "fwdarc/harness/generate.hpp"

#include <algorithm>
#include <numeric>

namespace fwdarc::harness {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(name) + " must lie in [0, 1]");
}

std::vector<Arc> relabel(const std::vector<Arc>& arcs, const VertexSeq& label) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) {
    out.push_back({label[static_cast<std::size_t>(a.tail)], label[static_cast<std::size_t>(a.head)]});
  }
  return out;
}

VertexSeq random_labels(int n, Rng& rng) {
  VertexSeq label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  return label;
}

void random_semicomplete_arcs(int k, double digon_prob, Rng& rng, std::vector<Arc>& arcs) {
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) {
      if (rng.chance(digon_prob)) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      } else if (rng.chance(0.5)) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  }
}

}  // namespace

Digraph random_strong_semicomplete(int k, double digon_prob, Rng& rng) {
  if (k < 1) throw InputError("component size must be positive");
  check_probability(digon_prob, "digon probability");
  if (k == 1) return Digraph::build(1, {});
  if (k == 2) {
    const Arc both[] = {{0, 1}, {1, 0}};
    return Digraph::build(2, both);
  }
  while (true) {
    std::vector<Arc> arcs;
    random_semicomplete_arcs(k, digon_prob, rng, arcs);
    Digraph d = Digraph::build(k, arcs);
    if (is_strong(d)) return d;
  }
}

Instance generate_smd(const SmdParams& params, std::uint64_t seed) {
  if (params.sizes.size() < 2) throw InputError("an SMD needs at least two parts");
  for (std::size_t s : params.sizes) {
    if (s == 0) throw InputError("part sizes must be positive");
  }
  check_probability(params.digon_prob, "digon probability");
  check_probability(params.bias, "orientation bias");
  Rng rng(seed);
  const int n = static_cast<int>(std::accumulate(params.sizes.begin(), params.sizes.end(), std::size_t{0}));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < params.sizes.size(); ++i) part_of.insert(part_of.end(), params.sizes[i], static_cast<int>(i));

  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] == part_of[static_cast<std::size_t>(v)]) continue;
      if (rng.chance(params.digon_prob)) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      } else if (rng.chance(params.bias)) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  }
  const VertexSeq label = random_labels(n, rng);
  Instance inst{Digraph::build(n, relabel(arcs, label)), std::vector<VertexSeq>(params.sizes.size()), {}};
  for (Vertex v = 0; v < n; ++v) {
    (*inst.parts)[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])].push_back(label[static_cast<std::size_t>(v)]);
  }
  for (VertexSeq& p : *inst.parts) std::sort(p.begin(), p.end());
  return inst;
}

Instance generate_lsd(const LsdParams& params, std::uint64_t seed) {
  const auto& sizes = params.component_sizes;
  if (sizes.empty()) throw InputError("at least one component is required");
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("component sizes must be positive");
  }
  check_probability(params.digon_prob, "digon probability");
  check_probability(params.skip_prob, "skip probability");
  const std::size_t l = sizes.size();
  if (params.round && l < 2) throw InputError("a round LSD needs at least two components");
  Rng rng(seed);

  std::vector<int> first(l + 1, 0);
  for (std::size_t i = 0; i < l; ++i) first[i + 1] = first[i] + static_cast<int>(sizes[i]);
  const int n = first[l];

  std::vector<Arc> inner;
  for (std::size_t i = 0; i < l; ++i) {
    const Digraph c = random_strong_semicomplete(static_cast<int>(sizes[i]), params.digon_prob, rng);
    for (const Arc& a : c.arcs()) inner.push_back({a.tail + first[i], a.head + first[i]});
  }
  auto dominate = [&](std::vector<Arc>& arcs, std::size_t i, std::size_t j) {
    for (int u = first[i]; u < first[i + 1]; ++u) {
      for (int v = first[j]; v < first[j + 1]; ++v) arcs.push_back({u, v});
    }
  };

  // Component i dominates i+1..reach[i]; reach is non-decreasing, which
  // keeps every in- and out-neighbourhood semicomplete.
  auto layered = [&]() {
    std::vector<Arc> arcs = inner;
    std::size_t reach = 0;
    for (std::size_t i = 0; i + 1 < l; ++i) {
      reach = std::max(reach, i + 1);
      while (reach + 1 < l && rng.chance(params.skip_prob)) ++reach;
      for (std::size_t j = i + 1; j <= reach; ++j) dominate(arcs, i, j);
    }
    return arcs;
  };
  // Cyclic analogue: component i dominates the next offset[i] components
  // around the circle.
  auto round = [&]() {
    const std::size_t max_offset = std::max<std::size_t>(1, (l - 1) / 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Arc> arcs = inner;
      for (std::size_t i = 0; i < l; ++i) {
        std::size_t offset = 1;
        while (offset < max_offset && rng.chance(params.skip_prob)) ++offset;
        for (std::size_t j = 1; j <= offset; ++j) dominate(arcs, i, (i + j) % l);
      }
      if (recognize_lsd(Digraph::build(n, arcs))) return arcs;
    }
    std::vector<Arc> arcs = inner;
    for (std::size_t i = 0; i < l; ++i) dominate(arcs, i, (i + 1) % l);
    return arcs;
  };

  const std::vector<Arc> arcs = params.round ? round() : layered();
  const VertexSeq label = random_labels(n, rng);
  Instance inst{Digraph::build(n, relabel(arcs, label)), std::nullopt, {}};
  if (!recognize_lsd(inst.graph)) throw AlgorithmStall("LSD generator produced a non-LSD digraph");
  return inst;
}

}  // namespace fwdarc::harness
