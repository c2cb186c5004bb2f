#pragma once

// Independent ground truth for the test suites. Subset dynamic programming
// and raw permutation scans; nothing here calls into the solvers or the
// library oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "fwdarc/digraph.hpp"
#include "fwdarc/harness/generate.hpp"

namespace brute {

using fwdarc::Digraph;
using fwdarc::Vertex;
using fwdarc::VertexSeq;

constexpr int kNone = -1'000'000;

// best[mask][v]: most forward steps over oriented paths covering mask that
// end at v. `arcs_only` restricts steps to arcs (directed walk).
inline std::vector<std::vector<int>> path_table(const Digraph& d, bool arcs_only, std::optional<Vertex> start) {
  const int n = d.order();
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::vector<int>> best(full, std::vector<int>(static_cast<std::size_t>(n), kNone));
  for (Vertex v = 0; v < n; ++v) {
    if (!start || *start == v) best[std::size_t{1} << v][static_cast<std::size_t>(v)] = 0;
  }
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (Vertex v = 0; v < n; ++v) {
      const int cur = best[mask][static_cast<std::size_t>(v)];
      if (cur == kNone) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (mask >> w & 1) continue;
        const bool fwd = d.has_arc(v, w);
        if (arcs_only ? !fwd : !d.adjacent(v, w)) continue;
        int& slot = best[mask | std::size_t{1} << w][static_cast<std::size_t>(w)];
        slot = std::max(slot, cur + (fwd ? 1 : 0));
      }
    }
  }
  return best;
}

inline std::optional<int> mfahop(const Digraph& d) {
  const auto best = path_table(d, false, std::nullopt);
  const int top = *std::max_element(best.back().begin(), best.back().end());
  return top == kNone ? std::nullopt : std::optional<int>(top);
}

inline std::optional<int> mfahoc(const Digraph& d) {
  const auto best = path_table(d, false, Vertex{0});
  int top = kNone;
  for (Vertex v = 1; v < d.order(); ++v) {
    const int cur = best.back()[static_cast<std::size_t>(v)];
    if (cur != kNone && d.adjacent(v, 0)) top = std::max(top, cur + (d.has_arc(v, 0) ? 1 : 0));
  }
  return top == kNone ? std::nullopt : std::optional<int>(top);
}

inline bool hamiltonian(const Digraph& d) {
  if (d.order() < 2) return false;
  const auto best = path_table(d, true, Vertex{0});
  for (Vertex v = 1; v < d.order(); ++v) {
    if (best.back()[static_cast<std::size_t>(v)] != kNone && d.has_arc(v, 0)) return true;
  }
  return false;
}

// Hamilton path whose ends lie in different classes of `part_of`.
inline bool distinct_ends_path(const Digraph& d, const std::vector<std::size_t>& part_of) {
  const int n = d.order();
  for (Vertex s = 0; s < n; ++s) {
    const auto best = path_table(d, true, s);
    for (Vertex t = 0; t < n; ++t) {
      if (best.back()[static_cast<std::size_t>(t)] != kNone &&
          part_of[static_cast<std::size_t>(s)] != part_of[static_cast<std::size_t>(t)]) {
        return true;
      }
    }
  }
  return false;
}

// Max cost cycle factor of the symmetric (0,1)-digraph, by permutations.
inline std::optional<int> cycle_factor(const Digraph& d) {
  const int n = d.order();
  VertexSeq pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  std::optional<int> best;
  do {
    int cost = 0;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const Vertex w = pi[static_cast<std::size_t>(v)];
      ok = w != v && d.adjacent(v, w);
      cost += d.has_arc(v, w) ? 1 : 0;
    }
    if (ok && (!best || cost > *best)) best = cost;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

// Max cost 1-path-cycle factor: a permutation on n+1 points where the
// extra point z links the path end back to the path start.
inline std::optional<int> path_cycle_factor(const Digraph& d) {
  const int n = d.order();
  const Vertex z = n;
  VertexSeq pi(static_cast<std::size_t>(n + 1));
  std::iota(pi.begin(), pi.end(), 0);
  std::optional<int> best;
  do {
    if (pi[static_cast<std::size_t>(z)] == z) continue;
    int cost = 0;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const Vertex w = pi[static_cast<std::size_t>(v)];
      if (w == z) continue;
      ok = w != v && d.adjacent(v, w);
      cost += d.has_arc(v, w) ? 1 : 0;
    }
    if (ok && (!best || cost > *best)) best = cost;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

// Shortest directed path length from any vertex of `from` to any of `to`.
inline std::optional<int> distance(const Digraph& d, const VertexSeq& from, const VertexSeq& to) {
  std::vector<int> dist(static_cast<std::size_t>(d.order()), -1);
  std::vector<Vertex> queue;
  for (Vertex v : from) {
    dist[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : d.out(queue[i])) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[i])] + 1;
        queue.push_back(w);
      }
    }
  }
  std::optional<int> best;
  for (Vertex v : to) {
    const int dv = dist[static_cast<std::size_t>(v)];
    if (dv >= 0 && (!best || dv < *best)) best = dv;
  }
  return best;
}

inline Digraph random_digraph(int n, double p, fwdarc::harness::Rng& rng) {
  std::vector<fwdarc::Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) arcs.push_back({u, v});
    }
  }
  return Digraph::build(n, arcs);
}

// Digraph on n <= 4 vertices encoded by the bits of `code` over ordered pairs.
inline Digraph digraph_from_code(int n, std::uint64_t code) {
  std::vector<fwdarc::Arc> arcs;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (code >> bit & 1) arcs.push_back({u, v});
      ++bit;
    }
  }
  return Digraph::build(n, arcs);
}

inline std::vector<std::size_t> random_sizes(int n, fwdarc::harness::Rng& rng) {
  // At least two nonempty parts; remaining vertices land uniformly.
  const int p = rng.between(2, std::min(n, 5));
  std::vector<std::size_t> sizes(static_cast<std::size_t>(p), 1);
  for (int v = p; v < n; ++v) ++sizes[rng.below(static_cast<std::uint64_t>(p))];
  return sizes;
}

}  // namespace brute
