#include "fwdarc/smd.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fwdarc {

bool hc_majority(std::span<const std::size_t> sizes) {
  if (sizes.empty()) return false;
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  return 2 * *std::max_element(sizes.begin(), sizes.end()) <= total;
}

bool hp_majority(std::span<const std::size_t> sizes) {
  if (sizes.empty()) return false;
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  return 2 * *std::max_element(sizes.begin(), sizes.end()) <= total + 1;
}

namespace {

void check_partition(const Digraph& d, const PartiteStructure& parts) {
  std::size_t covered = 0;
  for (const auto& p : parts.parts()) covered += p.size();
  if (parts.count() < 2 || covered != static_cast<std::size_t>(d.order())) {
    throw InputError("partite structure does not match the digraph");
  }
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (parts.same_part(u, v) == d.adjacent(u, v)) {
        throw InputError("digraph is not semicomplete multipartite with the given parts (pair " +
                         to_string({u, v}) + ")");
      }
    }
  }
}

VertexSeq rotate_to(const VertexSeq& cycle, Vertex start) {
  const auto it = std::find(cycle.begin(), cycle.end(), start);
  VertexSeq out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

// Position of every vertex on a family of disjoint cycles.
class CycleIndex {
 public:
  CycleIndex(int n, const std::vector<VertexSeq>& cycles)
      : cycles_(&cycles), cycle_of_(static_cast<std::size_t>(n), -1), pos_(static_cast<std::size_t>(n), 0) {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      for (std::size_t i = 0; i < cycles[c].size(); ++i) {
        cycle_of_[static_cast<std::size_t>(cycles[c][i])] = static_cast<int>(c);
        pos_[static_cast<std::size_t>(cycles[c][i])] = i;
      }
    }
  }

  int cycle_of(Vertex v) const { return cycle_of_[static_cast<std::size_t>(v)]; }

  Vertex succ(Vertex v) const {
    const auto& c = (*cycles_)[static_cast<std::size_t>(cycle_of(v))];
    return c[(pos_[static_cast<std::size_t>(v)] + 1) % c.size()];
  }

  Vertex pred(Vertex v) const {
    const auto& c = (*cycles_)[static_cast<std::size_t>(cycle_of(v))];
    return c[(pos_[static_cast<std::size_t>(v)] + c.size() - 1) % c.size()];
  }

 private:
  const std::vector<VertexSeq>* cycles_;
  std::vector<int> cycle_of_;
  std::vector<std::size_t> pos_;
};

std::optional<std::size_t> dominance_witness(const Digraph& d, const PartiteStructure& parts,
                                             const std::vector<VertexSeq>& cycles,
                                             const CycleIndex& idx, std::size_t dominant,
                                             std::size_t dominated) {
  std::optional<std::size_t> witness;
  for (Vertex u : cycles[dominated]) {
    for (Vertex v : d.out(u)) {
      if (idx.cycle_of(v) != static_cast<int>(dominant)) continue;
      const std::size_t s = parts.part_of(idx.succ(u));
      if (s != parts.part_of(idx.pred(v))) return std::nullopt;
      if (witness && *witness != s) return std::nullopt;
      witness = s;
    }
  }
  return witness.value_or(0);
}

bool is_directed_cycle(const Digraph& d, const VertexSeq& c) {
  if (c.size() < 2) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

// Joins two cycles along an arc u->v between them whenever pred(v)->succ(u)
// is also an arc.
bool splice_any(const Digraph& d, std::vector<VertexSeq>& cycles) {
  const CycleIndex idx(d.order(), cycles);
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (Vertex u : cycles[a]) {
      for (Vertex v : d.out(u)) {
        const int b = idx.cycle_of(v);
        if (b < 0 || b == static_cast<int>(a)) continue;
        if (!d.has_arc(idx.pred(v), idx.succ(u))) continue;
        VertexSeq merged = rotate_to(cycles[static_cast<std::size_t>(b)], v);
        const VertexSeq tail = rotate_to(cycles[a], idx.succ(u));
        merged.insert(merged.end(), tail.begin(), tail.end());
        const std::size_t lo = std::min(a, static_cast<std::size_t>(b));
        const std::size_t hi = std::max(a, static_cast<std::size_t>(b));
        cycles[lo] = std::move(merged);
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(hi));
        return true;
      }
    }
  }
  return false;
}

// Replaces the cycles in `which` by one Hamilton cycle of their union, if
// the union is small enough to search and such a cycle exists.
bool merge_exhaustively(const Digraph& d, std::vector<VertexSeq>& cycles,
                        const std::vector<std::size_t>& which, const SmdOptions& options) {
  VertexSeq all;
  for (std::size_t c : which) all.insert(all.end(), cycles[c].begin(), cycles[c].end());
  if (all.size() > options.exhaustive_union_limit) return false;
  const auto found = find_hamilton_cycle(d.induced(all), options.deadline);
  if (!found) return false;
  VertexSeq merged;
  for (Vertex local : *found) merged.push_back(all[static_cast<std::size_t>(local)]);
  std::vector<std::size_t> sorted = which;
  std::sort(sorted.begin(), sorted.end());
  cycles[sorted.front()] = std::move(merged);
  for (auto it = sorted.rbegin(); it + 1 != sorted.rend(); ++it) {
    cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  return true;
}

// Smallest-index-first topological order of "a before b" constraints, or
// nullopt when the constraints are cyclic.
std::optional<std::vector<std::size_t>> topological_order(const std::vector<std::vector<bool>>& before) {
  const std::size_t t = before.size();
  std::vector<std::size_t> indeg(t, 0);
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      if (before[a][b]) ++indeg[b];
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> placed(t, false);
  while (order.size() < t) {
    std::size_t pick = t;
    for (std::size_t a = 0; a < t; ++a) {
      if (!placed[a] && indeg[a] == 0) {
        pick = a;
        break;
      }
    }
    if (pick == t) return std::nullopt;
    placed[pick] = true;
    order.push_back(pick);
    for (std::size_t b = 0; b < t; ++b) {
      if (before[pick][b]) --indeg[b];
    }
  }
  return order;
}

// Strongly connected groups (size >= 2) of the constraint relation.
std::vector<std::vector<std::size_t>> constraint_groups(const std::vector<std::vector<bool>>& before) {
  const std::size_t t = before.size();
  auto reach = before;
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i < t; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < t; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> grouped(t, false);
  for (std::size_t i = 0; i < t; ++i) {
    if (grouped[i]) continue;
    std::vector<std::size_t> g{i};
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!grouped[j] && reach[i][j] && reach[j][i]) {
        g.push_back(j);
        grouped[j] = true;
      }
    }
    grouped[i] = true;
    if (g.size() >= 2) groups.push_back(std::move(g));
  }
  return groups;
}

// Tries every subset (pairs first) of a constraint group; true on the first
// successful exhaustive merge.
bool merge_within(const Digraph& d, std::vector<VertexSeq>& cycles,
                  const std::vector<std::size_t>& group, const SmdOptions& options) {
  const std::size_t k = group.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (merge_exhaustively(d, cycles, {group[i], group[j]}, options)) return true;
    }
  }
  if (k > 12) return false;
  for (std::size_t size = 3; size <= k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < k; ++i) {
        if (pick[i]) subset.push_back(group[i]);
      }
      if (merge_exhaustively(d, cycles, subset, options)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

VertexSeq concat(std::initializer_list<const VertexSeq*> pieces) {
  VertexSeq out;
  for (const auto* p : pieces) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// Extends `path` by all vertices of the disjoint cycle `cycle`, keeping the
// path's end vertices in different parts. The case analysis follows the
// weak-domination argument; other splice patterns are tried when it does
// not apply.
VertexSeq absorb_at_end(const Digraph& d, const PartiteStructure& parts, const VertexSeq& path,
                        const VertexSeq& cycle, ConstructionTrace* trace) {
  const Vertex first = path.front();
  const Vertex last = path.back();
  const std::size_t len = cycle.size();
  auto run = [&](std::size_t from, std::size_t count) {
    VertexSeq s;
    for (std::size_t k = 0; k < count; ++k) s.push_back(cycle[(from + k) % len]);
    return s;
  };
  auto valid = [&](const VertexSeq& cand) {
    for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
      if (!d.has_arc(cand[i], cand[i + 1])) return false;
    }
    return !parts.same_part(cand.front(), cand.back());
  };

  std::optional<std::size_t> into_end;
  for (std::size_t i = 0; i < len; ++i) {
    if (d.has_arc(cycle[i], last) && (!into_end || cycle[i] < cycle[*into_end])) into_end = i;
  }
  std::vector<VertexSeq> candidates;
  if (!into_end) {
    std::optional<std::size_t> y;
    for (std::size_t i = 0; i < len; ++i) {
      if (parts.same_part(cycle[i], first) && (!y || cycle[i] < cycle[*y])) y = i;
    }
    if (!y) {
      for (std::size_t i = 0; i < len; ++i) {
        if (!parts.same_part(cycle[i], last) && (!y || cycle[i] < cycle[*y])) y = i;
      }
    }
    if (y) {
      const auto rest = run(*y, len);
      candidates.push_back(concat({&path, &rest}));
    }
  } else {
    const std::size_t iz = *into_end;
    VertexSeq head(path.begin(), path.end() - 1);
    head.push_back(cycle[iz]);
    head.push_back(last);
    const auto short_run = run(iz + 1, len - 1);
    const auto full_run = run(iz + 1, len);
    candidates.push_back(concat({&head, &short_run}));
    candidates.push_back(concat({&path, &full_run}));
  }
  for (const auto& cand : candidates) {
    if (valid(cand)) {
      if (trace) ++trace->case_absorptions;
      return cand;
    }
  }

  auto accept = [&](VertexSeq cand) -> std::optional<VertexSeq> {
    if (!valid(cand)) return std::nullopt;
    if (trace) ++trace->fallback_absorptions;
    return cand;
  };
  for (std::size_t i = 0; i < len; ++i) {
    if (d.has_arc(last, cycle[i])) {
      const auto rest = run(i, len);
      if (auto r = accept(concat({&path, &rest}))) return *r;
    }
    if (d.has_arc(cycle[i], first)) {
      const auto lead = run(i + 1, len);
      if (auto r = accept(concat({&lead, &path}))) return *r;
    }
  }
  for (std::size_t p = 0; p + 1 < path.size(); ++p) {
    for (std::size_t i = 0; i < len; ++i) {
      if (!d.has_arc(path[p], cycle[i]) || !d.has_arc(cycle[(i + len - 1) % len], path[p + 1])) continue;
      VertexSeq cand(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      const auto mid = run(i, len);
      cand.insert(cand.end(), mid.begin(), mid.end());
      cand.insert(cand.end(), path.begin() + static_cast<std::ptrdiff_t>(p) + 1, path.end());
      if (auto r = accept(std::move(cand))) return *r;
    }
  }
  for (std::size_t iz = 0; iz < len; ++iz) {
    if (!d.has_arc(cycle[iz], last)) continue;
    VertexSeq head(path.begin(), path.end() - 1);
    head.push_back(cycle[iz]);
    head.push_back(last);
    const auto short_run = run(iz + 1, len - 1);
    const auto full_run = run(iz + 1, len);
    if (auto r = accept(concat({&head, &short_run}))) return *r;
    if (auto r = accept(concat({&path, &full_run}))) return *r;
  }
  std::ostringstream os;
  os << "could not absorb a " << len << "-cycle into a " << path.size() << "-vertex path";
  throw AlgorithmStall(os.str());
}

VertexSeq tail_of(const VertexSeq& path) { return VertexSeq(path.begin() + 1, path.end()); }

}  // namespace

bool has_ham_oriented_cycle_smd(const Digraph& d, const PartiteStructure& parts) {
  check_partition(d, parts);
  if (d.order() < 3) throw InputError("Hamilton oriented cycles need at least 3 vertices");
  const auto s = parts.sizes();
  return hc_majority(s);
}

bool has_ham_oriented_path_smd(const Digraph& d, const PartiteStructure& parts) {
  check_partition(d, parts);
  const auto s = parts.sizes();
  return hp_majority(s);
}

std::optional<std::size_t> weakly_dominates(const Digraph& d, const PartiteStructure& parts,
                                            const VertexSeq& dominant, const VertexSeq& dominated) {
  if (!is_directed_cycle(d, dominant) || !is_directed_cycle(d, dominated)) {
    throw InputError("weak domination needs two directed cycles of the digraph");
  }
  VertexSeq all = concat({&dominant, &dominated});
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end()) {
    throw InputError("cycles overlap at vertex " + std::to_string(*it));
  }
  std::vector<VertexSeq> cycles{dominant, dominated};
  const CycleIndex idx(d.order(), cycles);
  return dominance_witness(d, parts, cycles, idx, 0, 1);
}

IrreducibleResult irreducible_ordered_cycle_factor(const Digraph& d, const PartiteStructure& parts,
                                                   const SpanningFactor& f, const SmdOptions& options,
                                                   ConstructionTrace* trace) {
  check_partition(d, parts);
  if (!is_spanning_factor(d, f, false)) throw InputError("not a cycle factor of the digraph");
  std::vector<VertexSeq> cycles = f.cycles;
  while (true) {
    if (cycles.size() == 1) return HamiltonCycle{cycles.front()};
    if (splice_any(d, cycles)) {
      if (trace) ++trace->splices;
      continue;
    }
    const std::size_t t = cycles.size();
    const CycleIndex idx(d.order(), cycles);
    std::vector<std::vector<std::optional<std::size_t>>> wit(t, std::vector<std::optional<std::size_t>>(t));
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        if (a != b) wit[a][b] = dominance_witness(d, parts, cycles, idx, a, b);
      }
    }
    // a must precede b when b does not weakly dominate a.
    std::vector<std::vector<bool>> before(t, std::vector<bool>(t, false));
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        if (a != b && !wit[b][a]) before[a][b] = true;
      }
    }
    if (const auto order = topological_order(before)) {
      OrderedCycleFactor out;
      for (std::size_t c : *order) out.cycles.push_back(cycles[c]);
      out.witness.assign(t, std::vector<std::size_t>(t, 0));
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) out.witness[i][j] = *wit[(*order)[i]][(*order)[j]];
      }
      return out;
    }
    bool merged = false;
    for (const auto& group : constraint_groups(before)) {
      if (merge_within(d, cycles, group, options)) {
        merged = true;
        break;
      }
    }
    if (!merged) {
      std::ostringstream os;
      os << "merge loop stalled with " << t << " cycles and no weak-domination ordering";
      throw AlgorithmStall(os.str());
    }
    if (trace) ++trace->exhaustive_merges;
  }
}

HamiltonPath ham_path_distinct_ends(const Digraph& d, const PartiteStructure& parts,
                                    const SpanningFactor& f, const SmdOptions& options,
                                    ConstructionTrace* trace) {
  check_partition(d, parts);
  if (!is_spanning_factor(d, f, true)) throw InputError("not a 1-path-cycle factor of the digraph");
  const VertexSeq& path = *f.path;
  if (parts.same_part(path.front(), path.back())) {
    throw InputError("the factor's path ends lie in the same part");
  }
  if (f.cycles.empty()) return HamiltonPath{path};

  const Arc closing{path.back(), path.front()};
  const Digraph closed = d.has_arc(closing) ? d : d.with_arcs(std::span(&closing, 1));
  SpanningFactor cf;
  cf.cycles = f.cycles;
  cf.cycles.push_back(path);
  const auto result = irreducible_ordered_cycle_factor(closed, parts, cf, options, trace);
  const std::vector<VertexSeq> order = std::holds_alternative<HamiltonCycle>(result)
                                           ? std::vector<VertexSeq>{std::get<HamiltonCycle>(result).seq}
                                           : std::get<OrderedCycleFactor>(result).cycles;

  // Delete the closing arc if the ordered factor uses it, otherwise any
  // cycle arc.
  std::size_t r = 0;
  Arc removed{order[0].back(), order[0].front()};
  for (std::size_t c = 0; c < order.size(); ++c) {
    for (std::size_t i = 0; i < order[c].size(); ++i) {
      if (Arc{order[c][i], order[c][(i + 1) % order[c].size()]} == closing) {
        r = c;
        removed = closing;
      }
    }
  }
  VertexSeq current = rotate_to(order[r], removed.head);
  for (std::size_t j = r + 1; j < order.size(); ++j) {
    current = absorb_at_end(d, parts, current, order[j], trace);
  }
  if (r > 0) {
    // Absorbing at the start of a path in d is absorbing at the end of the
    // reversed path in the reversed digraph.
    const Digraph rev = d.reversed();
    std::reverse(current.begin(), current.end());
    for (std::size_t j = r; j-- > 0;) {
      VertexSeq rc(order[j].rbegin(), order[j].rend());
      current = absorb_at_end(rev, parts, current, rc, trace);
    }
    std::reverse(current.begin(), current.end());
  }
  if (!is_directed_hamiltonian(d, current, WalkKind::Path) ||
      parts.same_part(current.front(), current.back())) {
    throw AlgorithmStall("distinct-ends construction produced an invalid path");
  }
  return HamiltonPath{current};
}

HamiltonicityAnswer is_hamiltonian_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options) {
  check_partition(d, parts);
  if (d.order() < 3) throw InputError("hamiltonicity test needs at least 3 vertices");
  const auto factor = max_cost_cycle_factor(symmetric_01(d));
  if (!factor || factor->cost < d.order()) return {std::nullopt, "no-cycle-factor"};
  try {
    const auto r = irreducible_ordered_cycle_factor(d, parts, *factor, options);
    if (const auto* hc = std::get_if<HamiltonCycle>(&r)) return {*hc, "merge-loop"};
  } catch (const AlgorithmStall&) {
  }
  if (auto found = find_hamilton_cycle(d, options.deadline)) return {HamiltonCycle{*found}, "exact-search"};
  return {std::nullopt, "exact-search"};
}

std::optional<WalkSolution> mfahop_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options, ConstructionTrace* trace) {
  check_partition(d, parts);
  if (!hp_majority(parts.sizes())) return std::nullopt;
  const CostDigraph h = symmetric_01(d);
  const auto f = max_cost_one_path_cycle_factor(h);
  if (!f) throw AlgorithmStall("no 1-path-cycle factor although the HP-majority inequality holds");

  VertexSeq seq;
  if (f->cycles.empty()) {
    seq = *f->path;
  } else {
    // D_F plus a source vertex x adjacent to everything: the path x P has
    // ends in different parts, and every Hamilton path starts at x.
    const auto fa = f->arcs();
    const Digraph with_factor = d.with_arcs(fa);
    const Digraph extended = with_factor.with_source();
    const Vertex x = d.order();
    const PartiteStructure extended_parts = parts.with_singleton(x);
    SpanningFactor g;
    g.path = VertexSeq{x};
    g.path->insert(g.path->end(), f->path->begin(), f->path->end());
    g.cycles = f->cycles;
    const auto hp = ham_path_distinct_ends(extended, extended_parts, g, options, trace);
    if (hp.seq.front() != x) throw AlgorithmStall("Hamilton path does not start at the source vertex");
    seq = tail_of(hp.seq);
  }
  auto walk = validate_walk(d, seq, WalkKind::Path);
  if (walk.sigma_plus != f->cost) {
    throw AlgorithmStall("path certificate has " + std::to_string(walk.sigma_plus) +
                         " forward arcs, factor cost is " + std::to_string(f->cost));
  }
  return WalkSolution{f->cost, std::move(walk), "smd-path-factor"};
}

std::optional<WalkSolution> mfahoc_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options, ConstructionTrace* trace) {
  check_partition(d, parts);
  const int n = d.order();
  if (n < 3) throw InputError("Hamilton oriented cycles need at least 3 vertices");
  if (!hc_majority(parts.sizes())) return std::nullopt;
  const CostDigraph h = symmetric_01(d);
  const auto f = max_cost_cycle_factor(h);
  if (!f) throw AlgorithmStall("no cycle factor although the HC-majority inequality holds");

  // Turns the cycle of f through `cut` into a path starting at cut.head.
  auto open_at = [&](Arc cut) {
    SpanningFactor g;
    for (const auto& c : f->cycles) {
      const bool here = std::find(c.begin(), c.end(), cut.tail) != c.end();
      if (here) {
        g.path = rotate_to(c, cut.head);
      } else {
        g.cycles.push_back(c);
      }
    }
    return g;
  };

  int sigma = 0;
  std::string branch;
  VertexSeq seq;
  if (f->cost < n) {
    Arc zero{};
    bool found = false;
    for (const Arc& a : f->arcs()) {
      if (h.cost(a.tail, a.head) == 0) {
        zero = a;
        found = true;
        break;
      }
    }
    if (!found) throw AlgorithmStall("deficient cycle factor without a zero-cost arc");
    const auto fa = f->arcs();
    const Digraph host = d.with_arcs(fa).without_arc(zero);
    seq = ham_path_distinct_ends(host, parts, open_at(zero), options, trace).seq;
    sigma = f->cost;
    branch = "smd-cycle-zero-arc";
  } else {
    const auto ham = is_hamiltonian_smd(d, parts, options);
    if (ham.cycle) {
      seq = ham.cycle->seq;
      sigma = n;
      branch = "smd-cycle-hamiltonian";
    } else {
      const VertexSeq& c0 = f->cycles.front();
      seq = ham_path_distinct_ends(d, parts, open_at({c0.back(), c0.front()}), options, trace).seq;
      sigma = n - 1;
      branch = "smd-cycle-nonhamiltonian";
    }
  }
  auto walk = validate_walk(d, seq, WalkKind::Cycle);
  if (walk.sigma_plus != sigma) {
    throw AlgorithmStall("cycle certificate has " + std::to_string(walk.sigma_plus) +
                         " forward arcs, expected " + std::to_string(sigma));
  }
  return WalkSolution{sigma, std::move(walk), branch};
}

}  // namespace fwdarc
