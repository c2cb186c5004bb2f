#include "fwdarc/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace fwdarc {
namespace {

void check_bound(const Digraph& d, int bound) {
  if (d.order() > bound) {
    throw OracleLimitError("oracle refuses n=" + std::to_string(d.order()) + " (limit " +
                           std::to_string(bound) + ")");
  }
}

int forward_count(const Digraph& d, const VertexSeq& seq, bool closed) {
  int f = 0;
  const std::size_t steps = closed ? seq.size() : seq.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    if (d.has_arc(seq[i], seq[(i + 1) % seq.size()])) ++f;
  }
  return f;
}

bool underlying_walk(const Digraph& d, const VertexSeq& seq, bool closed) {
  const std::size_t steps = closed ? seq.size() : seq.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    if (!d.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

}  // namespace

OracleResult oracle_mfahoc(const Digraph& d, int bound) {
  check_bound(d, bound);
  const int n = d.order();
  if (n < 3) throw InputError("Hamilton oriented cycles need at least 3 vertices");
  OracleResult res;
  VertexSeq seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  // Vertex 0 fixed first; seq[1] < seq[n-1] picks one traversal of each
  // undirected cyclic order, both directions are then scored.
  do {
    if (seq[1] > seq.back()) continue;
    ++res.enumerated;
    if (!underlying_walk(d, seq, true)) continue;
    VertexSeq rev{seq.front()};
    rev.insert(rev.end(), seq.rbegin(), seq.rend() - 1);
    for (const VertexSeq* s : {&seq, &rev}) {
      const int f = forward_count(d, *s, true);
      if (!res.value || f > *res.value) {
        res.value = f;
        res.witness = *s;
      }
    }
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return res;
}

OracleResult oracle_mfahop(const Digraph& d, int bound) {
  check_bound(d, bound);
  const int n = d.order();
  if (n < 1) throw InputError("empty digraph");
  OracleResult res;
  VertexSeq seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    if (seq.front() > seq.back()) continue;
    ++res.enumerated;
    if (!underlying_walk(d, seq, false)) continue;
    VertexSeq rev(seq.rbegin(), seq.rend());
    for (const VertexSeq* s : {&seq, &rev}) {
      const int f = forward_count(d, *s, false);
      if (!res.value || f > *res.value) {
        res.value = f;
        res.witness = *s;
      }
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return res;
}

bool oracle_ham_cycle(const Digraph& d, int bound) {
  check_bound(d, bound);
  const int n = d.order();
  if (n < 2) return false;
  VertexSeq seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    if (forward_count(d, seq, true) == n) return true;
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return false;
}

namespace {

struct FactorEnumeration {
  const CostDigraph& h;
  bool with_path;
  int n;
  VertexSeq succ;
  std::vector<bool> head_used;
  bool end_used = false;
  OracleResult res;

  void run(int v, int cost) {
    if (v == n) {
      if (with_path && !end_used) return;
      ++res.enumerated;
      if (!res.value || cost > *res.value) {
        res.value = cost;
        res.witness = succ;
      }
      return;
    }
    const auto uv = static_cast<std::size_t>(v);
    if (with_path && !end_used) {
      end_used = true;
      succ[uv] = -1;
      run(v + 1, cost);
      end_used = false;
    }
    for (Vertex w : h.base().out(v)) {
      const auto uw = static_cast<std::size_t>(w);
      if (head_used[uw]) continue;
      head_used[uw] = true;
      succ[uv] = w;
      run(v + 1, cost + h.cost(v, w));
      head_used[uw] = false;
    }
  }
};

}  // namespace

OracleResult oracle_factor_cost(const CostDigraph& h, FactorKind kind, int bound) {
  check_bound(h.base(), bound);
  const int n = h.order();
  FactorEnumeration e{h, kind == FactorKind::OnePathCycleFactor, n,
                      VertexSeq(static_cast<std::size_t>(n), -1),
                      std::vector<bool>(static_cast<std::size_t>(n), false), false, {}};
  if (n > 0) e.run(0, 0);
  return e.res;
}

}  // namespace fwdarc
