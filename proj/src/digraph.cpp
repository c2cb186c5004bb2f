#include "fwdarc/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fwdarc {

std::string to_string(Arc a) {
  std::ostringstream os;
  os << '(' << a.tail << ',' << a.head << ')';
  return os.str();
}

Digraph Digraph::build(int n, std::span<const Arc> arcs) {
  if (n < 0) throw InputError("negative vertex count");
  Digraph d;
  d.n_ = n;
  d.stride_ = static_cast<std::size_t>(n);
  const std::size_t cells = d.stride_ * d.stride_;
  d.bits_.assign((cells + 63) / 64, 0);
  d.out_.assign(d.stride_, {});
  d.in_.assign(d.stride_, {});
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw InputError("arc " + to_string(a) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (a.tail == a.head) throw InputError("self-loop " + to_string(a));
    const auto bit = static_cast<std::size_t>(a.tail) * d.stride_ + static_cast<std::size_t>(a.head);
    auto& word = d.bits_[bit >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    if (word & mask) continue;
    word |= mask;
    ++d.m_;
    d.out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    d.in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& l : d.out_) std::sort(l.begin(), l.end());
  for (auto& l : d.in_) std::sort(l.begin(), l.end());
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out(u)) result.push_back({u, v});
  }
  return result;
}

Digraph Digraph::reversed() const {
  auto a = arcs();
  for (auto& arc : a) std::swap(arc.tail, arc.head);
  return build(n_, a);
}

Digraph Digraph::with_arcs(std::span<const Arc> extra) const {
  auto a = arcs();
  a.insert(a.end(), extra.begin(), extra.end());
  return build(n_, a);
}

Digraph Digraph::without_arc(Arc removed) const {
  auto a = arcs();
  std::erase(a, removed);
  return build(n_, a);
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<Arc> a;
  for (Vertex u : keep) {
    for (Vertex v : out(u)) {
      if (index[static_cast<std::size_t>(v)] >= 0) {
        a.push_back({index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]});
      }
    }
  }
  return build(static_cast<int>(keep.size()), a);
}

Digraph Digraph::with_source() const {
  auto a = arcs();
  for (Vertex v = 0; v < n_; ++v) a.push_back({n_, v});
  return build(n_ + 1, a);
}

// ---------------------------------------------------------------------------

PartiteStructure PartiteStructure::from_parts(const Digraph& d, std::vector<VertexSeq> parts) {
  const auto n = static_cast<std::size_t>(d.order());
  if (parts.size() < 2) throw InputError("a multipartite structure needs at least 2 parts");
  PartiteStructure ps;
  ps.part_of_.assign(n, parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw InputError("part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InputError("part vertex " + std::to_string(v) + " out of range");
      }
      if (ps.part_of_[static_cast<std::size_t>(v)] != parts.size()) {
        throw InputError("vertex " + std::to_string(v) + " listed in two parts");
      }
      ps.part_of_[static_cast<std::size_t>(v)] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (ps.part_of_[v] == parts.size()) throw InputError("vertex " + std::to_string(v) + " is in no part");
  }
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      const bool same = ps.part_of(u) == ps.part_of(v);
      if (same == d.adjacent(u, v)) {
        throw InputError("pair " + to_string({u, v}) +
                         (same ? " lies inside one part but is adjacent"
                               : " crosses parts but is nonadjacent"));
      }
    }
  }
  ps.parts_ = std::move(parts);
  return ps;
}

std::vector<std::size_t> PartiteStructure::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(parts_.size());
  for (const auto& p : parts_) s.push_back(p.size());
  return s;
}

PartiteStructure PartiteStructure::with_singleton(Vertex v) const {
  PartiteStructure ps = *this;
  if (static_cast<std::size_t>(v) >= ps.part_of_.size()) ps.part_of_.resize(static_cast<std::size_t>(v) + 1);
  ps.part_of_[static_cast<std::size_t>(v)] = ps.parts_.size();
  ps.parts_.push_back({v});
  return ps;
}

std::optional<PartiteStructure> recognize_smd(const Digraph& d) {
  const int n = d.order();
  // Classes of the non-adjacency relation, via union-find.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!d.adjacent(u, v)) parent[static_cast<std::size_t>(find(u))] = find(v);
    }
  }
  std::vector<VertexSeq> parts;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  if (parts.size() < 2) return std::nullopt;
  // Non-adjacency must be transitive: every class independent.
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (d.adjacent(p[i], p[j])) return std::nullopt;
      }
    }
  }
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSeq& a, const VertexSeq& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return PartiteStructure::from_parts(d, std::move(parts));
}

namespace {

bool induces_semicomplete(const Digraph& d, const VertexSeq& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!d.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace

bool recognize_lsd(const Digraph& d) {
  for (Vertex x = 0; x < d.order(); ++x) {
    if (!induces_semicomplete(d, d.out(x)) || !induces_semicomplete(d, d.in(x))) return false;
  }
  return true;
}

bool is_semicomplete(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (!d.adjacent(u, v)) return false;
    }
  }
  return true;
}

ComponentDecomposition strong_components(const Digraph& d) {
  // Iterative Tarjan. Components pop in reverse topological order.
  const auto n = static_cast<std::size_t>(d.order());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  std::vector<VertexSeq> comps;
  int counter = 0;
  for (Vertex root = 0; root < d.order(); ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto vi = static_cast<std::size_t>(v);
      if (next == 0 && index[vi] < 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = true;
      }
      const auto& succ = d.out(v);
      if (next < succ.size()) {
        const Vertex w = succ[next++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          frames.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        VertexSeq comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto pi = static_cast<std::size_t>(frames.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  std::reverse(comps.begin(), comps.end());
  ComponentDecomposition dec;
  dec.component_of.assign(n, 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) dec.component_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  dec.components = std::move(comps);
  return dec;
}

bool is_strong(const Digraph& d) { return strong_components(d).count() <= 1; }

namespace {

// Connectivity of U(d) with `skip` deleted (skip < 0: nothing deleted).
bool connected_without(const Digraph& d, Vertex skip) {
  const int n = d.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Vertex start = -1;
  int live = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == skip) continue;
    ++live;
    if (start < 0) start = v;
  }
  if (live <= 1) return true;
  std::vector<Vertex> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const auto* list : {&d.out(u), &d.in(u)}) {
      for (Vertex w : *list) {
        if (w == skip || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == live;
}

}  // namespace

bool underlying_connected(const Digraph& d) { return connected_without(d, -1); }

bool underlying_is_2connected(const Digraph& d) {
  if (d.order() < 3) throw InputError("2-connectivity needs at least 3 vertices");
  if (!connected_without(d, -1)) return false;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!connected_without(d, v)) return false;
  }
  return true;
}

OrientedHamWalk validate_walk(const Digraph& d, std::span<const Vertex> seq, WalkKind kind) {
  const int n = d.order();
  if (static_cast<int>(seq.size()) != n) {
    throw WalkError("walk has " + std::to_string(seq.size()) + " vertices, digraph has " +
                        std::to_string(n),
                    std::nullopt);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : seq) {
    if (v < 0 || v >= n) throw WalkError("walk vertex " + std::to_string(v) + " out of range", std::nullopt);
    if (seen[static_cast<std::size_t>(v)]) {
      throw WalkError("walk repeats vertex " + std::to_string(v), std::nullopt);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (kind == WalkKind::Cycle && n < 2) throw WalkError("a cycle needs at least 2 vertices", std::nullopt);

  OrientedHamWalk w;
  w.kind = kind;
  w.seq.assign(seq.begin(), seq.end());
  const std::size_t steps = kind == WalkKind::Cycle ? seq.size() : (seq.empty() ? 0 : seq.size() - 1);
  w.forward.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const Vertex u = seq[i];
    const Vertex v = seq[(i + 1) % seq.size()];
    if (d.has_arc(u, v)) {
      w.forward.push_back(true);
      ++w.sigma_plus;
    } else if (d.has_arc(v, u)) {
      w.forward.push_back(false);
      ++w.sigma_minus;
    } else {
      throw WalkError("consecutive pair " + to_string({u, v}) + " is nonadjacent", Arc{u, v});
    }
  }
  if (kind == WalkKind::Cycle && n == 2 && w.sigma_minus > 0) {
    // Both steps would reuse the same single arc.
    throw WalkError("a 2-vertex oriented cycle needs a digon", Arc{seq[0], seq[1]});
  }
  return w;
}

bool is_directed_hamiltonian(const Digraph& d, std::span<const Vertex> seq, WalkKind kind) {
  try {
    const auto w = validate_walk(d, seq, kind);
    return w.sigma_minus == 0;
  } catch (const WalkError&) {
    return false;
  }
}

}  // namespace fwdarc
