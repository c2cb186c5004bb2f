#include "fwdarc/factor_flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace fwdarc {

CostDigraph::CostDigraph(Digraph original) : original_(std::move(original)) {
  auto a = original_.arcs();
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) a.push_back({a[i].head, a[i].tail});
  base_ = Digraph::build(original_.order(), a);
}

CostDigraph symmetric_01(const Digraph& d) { return CostDigraph(d); }

std::vector<Arc> SpanningFactor::arcs() const {
  std::vector<Arc> result;
  if (path) {
    for (std::size_t i = 0; i + 1 < path->size(); ++i) result.push_back({(*path)[i], (*path)[i + 1]});
  }
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) result.push_back({c[i], c[(i + 1) % c.size()]});
  }
  return result;
}

bool is_spanning_factor(const Digraph& host, const SpanningFactor& f, bool expect_path) {
  if (expect_path != f.path.has_value()) return false;
  if (f.path && f.path->empty()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(host.order()), false);
  std::size_t covered = 0;
  auto claim = [&](const VertexSeq& s) {
    for (Vertex v : s) {
      if (v < 0 || v >= host.order() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
    return true;
  };
  if (f.path && !claim(*f.path)) return false;
  for (const auto& c : f.cycles) {
    if (c.size() < 2 || !claim(c)) return false;
  }
  if (covered != static_cast<std::size_t>(host.order())) return false;
  for (const Arc& a : f.arcs()) {
    if (!host.has_arc(a)) return false;
  }
  return true;
}

int factor_cost(const CostDigraph& h, const SpanningFactor& f) {
  int total = 0;
  for (const Arc& a : f.arcs()) total += h.cost(a.tail, a.head);
  return total;
}

CostMatrix::CostMatrix(std::size_t size)
    : size_(size), cost_(size * size, 0), allowed_(size * size, false) {}

void CostMatrix::set(std::size_t row, std::size_t col, std::int64_t cost) {
  cost_[row * size_ + col] = cost;
  allowed_[row * size_ + col] = true;
}

void CostMatrix::forbid(std::size_t row, std::size_t col) {
  cost_[row * size_ + col] = 0;
  allowed_[row * size_ + col] = false;
}

std::optional<Assignment> min_cost_assignment(const CostMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Assignment{};
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!m.allowed(r, c)) continue;
      lo = any ? std::min(lo, m.cost(r, c)) : m.cost(r, c);
      hi = any ? std::max(hi, m.cost(r, c)) : m.cost(r, c);
      any = true;
    }
  }
  if (!any) return std::nullopt;
  // Any assignment touching a forbidden cell costs more than every fully
  // allowed one.
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t big = sn * hi - (sn - 1) * lo + 1 + std::max<std::int64_t>(0, hi - lo);
  auto a = [&](std::size_t r, std::size_t c) { return m.allowed(r, c) ? m.cost(r, c) : big; };

  // Hungarian method with row/column potentials, 1-indexed; column 0 is
  // the virtual start column.
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment result;
  result.col_of_row.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.col_of_row[p[j] - 1] = j - 1;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t c = result.col_of_row[r];
    if (!m.allowed(r, c)) return std::nullopt;
    result.total += m.cost(r, c);
  }
  return result;
}

namespace {

using ArcCost = std::function<std::int64_t(Vertex, Vertex)>;

// Cycles of a successor permutation restricted to `live` vertices, each
// started at its smallest vertex.
std::vector<VertexSeq> split_cycles(const std::vector<std::size_t>& succ, std::size_t n,
                                    std::vector<bool>& seen) {
  std::vector<VertexSeq> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSeq c;
    for (std::size_t v = start; !seen[v]; v = succ[v]) {
      seen[v] = true;
      c.push_back(static_cast<Vertex>(v));
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::optional<SpanningFactor> min_cycle_factor(const Digraph& host, const ArcCost& cost) {
  const auto n = static_cast<std::size_t>(host.order());
  if (n == 0) return std::nullopt;
  CostMatrix m(n);
  for (const Arc& a : host.arcs()) {
    m.set(static_cast<std::size_t>(a.tail), static_cast<std::size_t>(a.head), cost(a.tail, a.head));
  }
  const auto sol = min_cost_assignment(m);
  if (!sol) return std::nullopt;
  std::vector<bool> seen(n, false);
  SpanningFactor f;
  f.cycles = split_cycles(sol->col_of_row, n, seen);
  return f;
}

std::optional<SpanningFactor> min_one_path_cycle_factor(const Digraph& host, const ArcCost& cost) {
  const auto n = static_cast<std::size_t>(host.order());
  if (n == 0) return std::nullopt;
  // Row n is the source s, column n the sink t.
  CostMatrix m(n + 1);
  for (const Arc& a : host.arcs()) {
    m.set(static_cast<std::size_t>(a.tail), static_cast<std::size_t>(a.head), cost(a.tail, a.head));
  }
  for (std::size_t v = 0; v < n; ++v) {
    m.set(n, v, 0);
    m.set(v, n, 0);
  }
  m.forbid(n, n);
  const auto sol = min_cost_assignment(m);
  if (!sol) return std::nullopt;
  const auto& succ = sol->col_of_row;
  std::vector<bool> seen(n + 1, false);
  SpanningFactor f;
  f.path.emplace();
  for (std::size_t v = succ[n]; v != n; v = succ[v]) {
    seen[v] = true;
    f.path->push_back(static_cast<Vertex>(v));
  }
  seen[n] = true;
  f.cycles = split_cycles(succ, n, seen);
  return f;
}

}  // namespace

std::optional<SpanningFactor> max_cost_cycle_factor(const CostDigraph& h) {
  // Swapping 0 and 1 turns the maximisation into a minimisation.
  auto f = min_cycle_factor(h.base(), [&](Vertex u, Vertex v) { return 1 - h.cost(u, v); });
  if (f) f->cost = factor_cost(h, *f);
  return f;
}

std::optional<SpanningFactor> max_cost_one_path_cycle_factor(const CostDigraph& h) {
  auto f = min_one_path_cycle_factor(h.base(), [&](Vertex u, Vertex v) { return 1 - h.cost(u, v); });
  if (f) f->cost = factor_cost(h, *f);
  return f;
}

std::optional<SpanningFactor> max_weight_cycle_factor(const Digraph& host,
                                                      const std::vector<std::int64_t>& weight) {
  const auto n = static_cast<std::size_t>(host.order());
  return min_cycle_factor(host, [&](Vertex u, Vertex v) {
    return -weight[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
  });
}

std::optional<SpanningFactor> max_weight_one_path_cycle_factor(
    const Digraph& host, const std::vector<std::int64_t>& weight) {
  const auto n = static_cast<std::size_t>(host.order());
  return min_one_path_cycle_factor(host, [&](Vertex u, Vertex v) {
    return -weight[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
  });
}

}  // namespace fwdarc
