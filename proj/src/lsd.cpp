#include "fwdarc/lsd.hpp"

#include <algorithm>
#include <set>

namespace fwdarc {
namespace {

void require_connected_lsd(const Digraph& d) {
  if (d.order() == 0) throw InputError("empty digraph");
  if (!recognize_lsd(d)) throw InputError("digraph is not locally semicomplete");
  if (!underlying_connected(d)) throw InputError("digraph is not connected");
}

VertexSeq rotate_to(const VertexSeq& cycle, Vertex start) {
  const auto it = std::find(cycle.begin(), cycle.end(), start);
  VertexSeq out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

// Shortest directed cycle through vertex 0 of a strong digraph.
VertexSeq initial_cycle(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (u != 0 && d.has_arc(u, 0)) {
      VertexSeq c;
      for (Vertex w = u; w != -1; w = parent[static_cast<std::size_t>(w)]) c.push_back(w);
      std::reverse(c.begin(), c.end());
      return c;
    }
    for (Vertex w : d.out(u)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  throw InputError("digraph is not strong");
}

// Position i with c_i -> x and y -> c_{i+1}, if any.
std::optional<std::size_t> insertion_point(const Digraph& d, const VertexSeq& c, Vertex x, Vertex y) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (d.has_arc(c[i], x) && d.has_arc(y, c[(i + 1) % c.size()])) return i;
  }
  return std::nullopt;
}

void insert_after(VertexSeq& c, std::size_t i, const VertexSeq& piece) {
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, piece.begin(), piece.end());
}

VertexSeq map_back(const VertexSeq& local, const VertexSeq& labels) {
  VertexSeq out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(labels[static_cast<std::size_t>(v)]);
  return out;
}

// Hamilton path through one strong component; optionally fixing the first
// or the last vertex.
VertexSeq component_path(const Digraph& d, const VertexSeq& comp, std::optional<Vertex> start,
                         std::optional<Vertex> end) {
  if (comp.size() == 1) return comp;
  const VertexSeq cycle = map_back(ham_cycle_strong_semicomplete(d.induced(comp)).seq, comp);
  if (start) return rotate_to(cycle, *start);
  if (end) {
    const auto it = std::find(cycle.begin(), cycle.end(), *end);
    const auto next = (it + 1 == cycle.end()) ? cycle.begin() : it + 1;
    return rotate_to(cycle, *next);
  }
  return cycle;
}

}  // namespace

LsdDecomposition lsd_decomposition(const Digraph& d) {
  require_connected_lsd(d);
  LsdDecomposition dec;
  dec.order = strong_components(d);
  const std::size_t l = dec.order.count();
  if (l == 1) throw StrongDigraphError("digraph is strong");

  const auto& comp = dec.order.components;
  const auto& cn = dec.order.component_of;
  std::vector<std::vector<std::size_t>> between(l, std::vector<std::size_t>(l, 0));
  bool ok = true;
  for (const Arc& a : d.arcs()) {
    const auto i = static_cast<std::size_t>(cn[static_cast<std::size_t>(a.tail)]);
    const auto j = static_cast<std::size_t>(cn[static_cast<std::size_t>(a.head)]);
    if (i > j) ok = false;
    ++between[i][j];
  }
  auto dominates = [&](std::size_t i, std::size_t j) { return between[i][j] == comp[i].size() * comp[j].size(); };
  for (std::size_t i = 0; ok && i < l; ++i) {
    ok = is_semicomplete(d.induced(comp[i])) && (i + 1 == l || dominates(i, i + 1));
  }
  for (std::size_t i = 0; ok && i < l; ++i) {
    for (std::size_t k = i + 2; ok && k < l; ++k) {
      if (between[i][k] == 0) continue;
      for (std::size_t j = i + 1; ok && j <= k; ++j) ok = dominates(i, j);
      for (std::size_t t = i; ok && t < k; ++t) ok = dominates(t, k);
    }
  }
  dec.properties_verified = ok;
  return dec;
}

HamiltonCycle ham_cycle_strong_semicomplete(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw InputError("a Hamilton cycle needs at least 2 vertices");
  if (!is_semicomplete(d)) throw InputError("digraph is not semicomplete");
  if (!is_strong(d)) throw InputError("digraph is not strong");
  VertexSeq cycle = initial_cycle(d);
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  for (Vertex v : cycle) on[static_cast<std::size_t>(v)] = true;
  while (static_cast<int>(cycle.size()) < n) {
    bool grown = false;
    for (Vertex v = 0; v < n && !grown; ++v) {
      if (on[static_cast<std::size_t>(v)]) continue;
      if (const auto i = insertion_point(d, cycle, v, v)) {
        insert_after(cycle, *i, {v});
        on[static_cast<std::size_t>(v)] = true;
        grown = true;
      }
    }
    if (grown) continue;
    // Every outside vertex now dominates the cycle or is dominated by it;
    // strongness gives an arc from a dominated vertex to a dominating one.
    VertexSeq dominating, dominated;
    for (Vertex v = 0; v < n; ++v) {
      if (on[static_cast<std::size_t>(v)]) continue;
      (d.has_arc(v, cycle.front()) ? dominating : dominated).push_back(v);
    }
    for (Vertex b : dominated) {
      for (Vertex a : dominating) {
        if (!grown && d.has_arc(b, a)) {
          insert_after(cycle, 0, {b, a});
          on[static_cast<std::size_t>(a)] = on[static_cast<std::size_t>(b)] = true;
          grown = true;
        }
      }
    }
    if (!grown) throw AlgorithmStall("semicomplete cycle insertion found no extension");
  }
  return HamiltonCycle{cycle};
}

HamiltonCycle ham_cycle_strong_lsd(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw InputError("a Hamilton cycle needs at least 2 vertices");
  require_connected_lsd(d);
  if (!is_strong(d)) throw InputError("digraph is not strong");
  VertexSeq cycle = initial_cycle(d);
  const auto un = static_cast<std::size_t>(n);
  std::vector<bool> on(un, false);
  for (Vertex v : cycle) on[static_cast<std::size_t>(v)] = true;
  while (cycle.size() < un) {
    // Shortest excursion c -> q_1 -> ... -> q_k -> c' through outside
    // vertices, by BFS from the whole cycle.
    std::vector<Vertex> parent(un, -1);
    std::vector<bool> seen(un, false);
    std::vector<Vertex> queue;
    for (Vertex c : cycle) {
      for (Vertex w : d.out(c)) {
        if (on[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = -1;
        queue.push_back(w);
      }
    }
    Vertex exit = -1;
    for (std::size_t head = 0; head < queue.size() && exit < 0; ++head) {
      const Vertex q = queue[head];
      for (Vertex w : d.out(q)) {
        if (on[static_cast<std::size_t>(w)]) {
          exit = q;
          break;
        }
      }
      if (exit >= 0) break;
      for (Vertex w : d.out(q)) {
        if (on[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = q;
        queue.push_back(w);
      }
    }
    if (exit < 0) throw InputError("digraph is not strong");
    VertexSeq excursion;
    for (Vertex w = exit; w != -1; w = parent[static_cast<std::size_t>(w)]) excursion.push_back(w);
    std::reverse(excursion.begin(), excursion.end());
    // Local semicompleteness makes c_i -> q_1 and q_k -> c_{i+1} hold for
    // some consecutive pair of the cycle.
    const auto i = insertion_point(d, cycle, excursion.front(), excursion.back());
    if (!i) throw AlgorithmStall("excursion of length " + std::to_string(excursion.size()) +
                                 " could not be spliced into the cycle");
    insert_after(cycle, *i, excursion);
    for (Vertex v : excursion) on[static_cast<std::size_t>(v)] = true;
  }
  return HamiltonCycle{cycle};
}

HamiltonPath ham_path_lsd_between(const Digraph& d, Vertex start, Vertex end) {
  const auto dec = lsd_decomposition(d);
  const auto& comps = dec.order.components;
  const auto& cn = dec.order.component_of;
  if (start < 0 || start >= d.order() || cn[static_cast<std::size_t>(start)] != 0) {
    throw InputError("start vertex is not in the first strong component");
  }
  if (end < 0 || end >= d.order() ||
      cn[static_cast<std::size_t>(end)] != static_cast<int>(comps.size()) - 1) {
    throw InputError("end vertex is not in the last strong component");
  }
  VertexSeq path;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto piece = component_path(d, comps[i], i == 0 ? std::optional<Vertex>(start) : std::nullopt,
                                      i + 1 == comps.size() ? std::optional<Vertex>(end) : std::nullopt);
    path.insert(path.end(), piece.begin(), piece.end());
  }
  return HamiltonPath{path};
}

HamiltonPath ham_path_lsd(const Digraph& d) {
  require_connected_lsd(d);
  if (d.order() == 1) return HamiltonPath{{0}};
  const auto comps = strong_components(d);
  if (comps.count() == 1) return HamiltonPath{ham_cycle_strong_lsd(d).seq};
  return ham_path_lsd_between(d, comps.components.front().front(), comps.components.back().front());
}

VertexSeq greedy_c1_cl_path(const Digraph& d, const LsdDecomposition& dec) {
  const auto& cn = dec.order.component_of;
  const int last = static_cast<int>(dec.order.count()) - 1;
  if (last < 1) throw InputError("digraph is strong");
  VertexSeq path{dec.order.components.front().front()};
  while (cn[static_cast<std::size_t>(path.back())] != last) {
    const Vertex u = path.back();
    Vertex best = -1;
    for (Vertex w : d.out(u)) {
      if (best < 0 || cn[static_cast<std::size_t>(w)] > cn[static_cast<std::size_t>(best)]) best = w;
    }
    if (best < 0 || cn[static_cast<std::size_t>(best)] <= cn[static_cast<std::size_t>(u)]) {
      throw AlgorithmStall("greedy path cannot leave component " +
                           std::to_string(cn[static_cast<std::size_t>(u)]));
    }
    path.push_back(best);
  }
  return path;
}

std::optional<LsdCycleSolution> mfahoc_lsd(const Digraph& d) {
  const int n = d.order();
  if (n < 3) throw InputError("Hamilton oriented cycles need at least 3 vertices");
  require_connected_lsd(d);
  LsdCycleSolution sol;
  if (is_strong(d)) {
    sol.walk = validate_walk(d, ham_cycle_strong_lsd(d).seq, WalkKind::Cycle);
    sol.sigma = n;
    sol.branch = "lsd-strong";
    return sol;
  }
  if (!underlying_is_2connected(d)) return std::nullopt;

  const auto dec = lsd_decomposition(d);
  const VertexSeq p = greedy_c1_cl_path(d, dec);
  const int dist = static_cast<int>(p.size()) - 1;
  std::vector<bool> internal(static_cast<std::size_t>(n), false);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) internal[static_cast<std::size_t>(p[i])] = true;
  VertexSeq keep;
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (internal[static_cast<std::size_t>(v)]) continue;
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(keep.size());
    keep.push_back(v);
  }
  const Digraph rest = d.induced(keep);
  if (!underlying_connected(rest)) {
    throw AlgorithmStall("removing the shortest path's internal vertices disconnected the digraph");
  }
  const auto q = ham_path_lsd_between(rest, local[static_cast<std::size_t>(p.front())],
                                      local[static_cast<std::size_t>(p.back())]);
  VertexSeq seq = map_back(q.seq, keep);
  for (std::size_t i = p.size() - 1; i-- > 1;) seq.push_back(p[i]);

  sol.walk = validate_walk(d, seq, WalkKind::Cycle);
  std::set<Arc> path_arcs;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) path_arcs.insert({p[i], p[i + 1]});
  std::set<Arc> backward;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!sol.walk.forward[i]) backward.insert({seq[(i + 1) % seq.size()], seq[i]});
  }
  if (backward != path_arcs) throw AlgorithmStall("backward steps differ from the shortest path's arcs");
  sol.sigma = n - dist;
  sol.branch = "lsd-nonstrong";
  sol.shortest_path = p;
  return sol;
}

}  // namespace fwdarc
