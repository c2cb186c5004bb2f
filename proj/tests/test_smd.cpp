#include <gtest/gtest.h>

#include "fwdarc/factor_flow.hpp"
#include "fwdarc/harness/generate.hpp"
#include "fwdarc/search.hpp"
#include "fwdarc/smd.hpp"

#include "brute.hpp"

using namespace fwdarc;
using fwdarc::harness::Rng;

namespace {

Digraph make(int n, std::initializer_list<Arc> arcs) { return Digraph::build(n, std::vector<Arc>(arcs)); }

std::optional<int> sigma_of(const std::optional<WalkSolution>& s) {
  return s ? std::optional<int>(s->sigma) : std::nullopt;
}

struct SmdCase {
  Digraph d;
  PartiteStructure parts;
};

SmdCase random_smd(std::uint64_t seed, int n_lo, int n_hi) {
  Rng rng(seed * 2654435761u + 1);
  const int n = rng.between(n_lo, n_hi);
  const double digon[] = {0.0, 0.2, 0.5};
  const auto inst = fwdarc::harness::generate_smd({brute::random_sizes(n, rng), digon[seed % 3], 0.2 + 0.6 * rng.unit()}, seed);
  return {inst.graph, PartiteStructure::from_parts(inst.graph, *inst.parts)};
}

std::vector<std::size_t> part_index(const PartiteStructure& p, int n) {
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = p.part_of(v);
  return out;
}

// Cycles C1 = x1 x2 x3, C2 = y1..y4, C3 = w1 w2 with three back arcs;
// every other cross-part pair points from the earlier cycle to the later.
constexpr Vertex x1 = 0, x2 = 1, x3 = 2, y1 = 3, y2 = 4, y3 = 5, y4 = 6, w1 = 7, w2 = 8;

struct ThreeCycleExample {
  Digraph d;
  PartiteStructure parts;
  VertexSeq c1{x1, x2, x3}, c2{y1, y2, y3, y4}, c3{w1, w2};
};

ThreeCycleExample three_cycle_example() {
  const std::vector<VertexSeq> parts{{x1, y2, y4}, {x2, w1}, {x3, y1, y3, w2}};
  std::vector<std::size_t> part(9);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) part[static_cast<std::size_t>(v)] = i;
  }
  const std::vector<VertexSeq> cycles{{x1, x2, x3}, {y1, y2, y3, y4}, {w1, w2}};
  std::vector<std::size_t> cyc(9);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      cyc[static_cast<std::size_t>(c[k])] = i;
      arcs.push_back({c[k], c[(k + 1) % c.size()]});
    }
  }
  arcs.push_back({w2, w1});  // C3 is a digon
  const std::vector<Arc> backward{{y1, x2}, {y3, x2}, {w1, y2}};
  arcs.insert(arcs.end(), backward.begin(), backward.end());
  Digraph partial = Digraph::build(9, arcs);
  for (Vertex u = 0; u < 9; ++u) {
    for (Vertex v = 0; v < 9; ++v) {
      if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)] || partial.adjacent(u, v)) continue;
      if (cyc[static_cast<std::size_t>(u)] < cyc[static_cast<std::size_t>(v)]) arcs.push_back({u, v});
    }
  }
  ThreeCycleExample f{Digraph::build(9, arcs), {}};
  f.parts = PartiteStructure::from_parts(f.d, parts);
  return f;
}

}  // namespace

TEST(Majority, Arithmetic) {
  const std::size_t a[] = {3, 2, 2};
  const std::size_t b[] = {4, 1, 1};
  const std::size_t c[] = {3, 2, 1};
  EXPECT_TRUE(hc_majority(a));
  EXPECT_FALSE(hc_majority(b));
  EXPECT_FALSE(hp_majority(b));
  EXPECT_TRUE(hc_majority(c));
  EXPECT_TRUE(hp_majority(c));
}

TEST(Existence, TriangleAndSmallBipartite) {
  const Digraph t = make(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(has_ham_oriented_cycle_smd(t, *recognize_smd(t)));
  const Digraph b = make(3, {{0, 1}, {2, 1}});  // parts {0,2},{1}
  const auto p = PartiteStructure::from_parts(b, {{0, 2}, {1}});
  EXPECT_FALSE(has_ham_oriented_cycle_smd(b, p));
  EXPECT_TRUE(has_ham_oriented_path_smd(b, p));
}

TEST(Existence, AgreesWithUnderlyingHamiltonicity) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto [d, parts] = random_smd(seed, 3, 8);
    EXPECT_EQ(has_ham_oriented_cycle_smd(d, parts), brute::mfahoc(d).has_value()) << seed;
    EXPECT_EQ(has_ham_oriented_path_smd(d, parts), brute::mfahop(d).has_value()) << seed;
  }
}

TEST(Existence, RejectsWrongParts) {
  const Digraph t = make(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(has_ham_oriented_cycle_smd(t, PartiteStructure::from_parts(make(3, {{0, 1}, {1, 2}}), {{0, 2}, {1}})),
               InputError);
}

TEST(WeakDomination, ThreeCycleExampleWitnesses) {
  const ThreeCycleExample f = three_cycle_example();
  EXPECT_EQ(weakly_dominates(f.d, f.parts, f.c1, f.c2), std::optional<std::size_t>(0));
  EXPECT_EQ(weakly_dominates(f.d, f.parts, f.c2, f.c3), std::optional<std::size_t>(2));
  EXPECT_EQ(weakly_dominates(f.d, f.parts, f.c1, f.c3), std::optional<std::size_t>(0));
}

TEST(WeakDomination, ThreeCycleExampleReverseOrdersFail) {
  const ThreeCycleExample f = three_cycle_example();
  // x1 -> y1 goes from C1 into C2 and x2 = x1+ shares no part with y4 = y1-.
  EXPECT_FALSE(weakly_dominates(f.d, f.parts, f.c2, f.c1));
}

TEST(WeakDomination, OverlapRejected) {
  const Digraph d = make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {0, 3}, {3, 0}, {0, 2}, {1, 3}});
  const auto parts = *recognize_smd(d);
  EXPECT_THROW(weakly_dominates(d, parts, {0, 1}, {1, 2}), InputError);
  EXPECT_THROW(weakly_dominates(d, parts, {0, 1}, {3, 1}), InputError);  // 3->1 is no arc
}

TEST(IrreducibleFactor, HamiltonCycleReturnedUnchanged) {
  const Digraph t = make(3, {{0, 1}, {1, 2}, {2, 0}});
  const SpanningFactor f{std::nullopt, {{0, 1, 2}}, 3};
  const auto r = irreducible_ordered_cycle_factor(t, *recognize_smd(t), f);
  ASSERT_TRUE(std::holds_alternative<HamiltonCycle>(r));
  EXPECT_EQ(std::get<HamiltonCycle>(r).seq, (VertexSeq{0, 1, 2}));
}

TEST(IrreducibleFactor, ThreeCycleExampleFactorIsAlreadyOrdered) {
  // The completed configuration is Hamiltonian (x1 w2 w1 y2 y3 y4 y1 x2 x3),
  // yet its factor is irreducible: an ordering does not rule out a cycle.
  const ThreeCycleExample f = three_cycle_example();
  EXPECT_TRUE(brute::hamiltonian(f.d));
  const SpanningFactor factor{std::nullopt, {f.c1, f.c2, f.c3}, 9};
  ASSERT_TRUE(is_spanning_factor(f.d, factor, false));
  const auto r = irreducible_ordered_cycle_factor(f.d, f.parts, factor);
  ASSERT_TRUE(std::holds_alternative<OrderedCycleFactor>(r));
  const auto& of = std::get<OrderedCycleFactor>(r);
  EXPECT_EQ(of.cycles, (std::vector<VertexSeq>{f.c1, f.c2, f.c3}));
  EXPECT_EQ(of.witness[0][1], 0u);
  EXPECT_EQ(of.witness[1][2], 2u);
  const auto h = is_hamiltonian_smd(f.d, f.parts);
  ASSERT_TRUE(h.cycle);
  EXPECT_TRUE(is_directed_hamiltonian(f.d, h.cycle->seq, WalkKind::Cycle));
}

TEST(IrreducibleFactor, RejectsInvalidFactor) {
  const Digraph t = make(3, {{0, 1}, {1, 2}, {2, 0}});
  const SpanningFactor f{std::nullopt, {{0, 2, 1}}, 3};
  EXPECT_THROW(irreducible_ordered_cycle_factor(t, *recognize_smd(t), f), InputError);
}

TEST(IrreducibleFactor, RandomOutputsSatisfyContract) {
  std::size_t multi = 0;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    const auto [d, parts] = random_smd(seed, 4, 8);
    Rng rng(seed);
    std::vector<std::int64_t> w(static_cast<std::size_t>(d.order() * d.order()));
    for (auto& x : w) x = static_cast<std::int64_t>(rng.below(50));
    const auto f = max_weight_cycle_factor(d, w);
    if (!f) continue;
    const auto r = irreducible_ordered_cycle_factor(d, parts, *f);
    if (const auto* hc = std::get_if<HamiltonCycle>(&r)) {
      EXPECT_TRUE(is_directed_hamiltonian(d, hc->seq, WalkKind::Cycle));
      continue;
    }
    ++multi;
    const auto& of = std::get<OrderedCycleFactor>(r);
    ASSERT_GE(of.cycles.size(), 2u);
    EXPECT_TRUE(is_spanning_factor(d, SpanningFactor{std::nullopt, of.cycles, 0}, false));
    for (std::size_t i = 0; i < of.cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < of.cycles.size(); ++j) {
        const auto wit = weakly_dominates(d, parts, of.cycles[i], of.cycles[j]);
        ASSERT_TRUE(wit) << seed;
        // The recorded witness must itself certify the pair.
        const std::size_t rec = of.witness[i][j];
        for (std::size_t a = 0; a < of.cycles[j].size(); ++a) {
          const Vertex u = of.cycles[j][a];
          const Vertex us = of.cycles[j][(a + 1) % of.cycles[j].size()];
          for (std::size_t b = 0; b < of.cycles[i].size(); ++b) {
            const Vertex v = of.cycles[i][b];
            const Vertex vp = of.cycles[i][(b + of.cycles[i].size() - 1) % of.cycles[i].size()];
            if (d.has_arc(u, v)) {
              EXPECT_EQ(parts.part_of(us), rec);
              EXPECT_EQ(parts.part_of(vp), rec);
            }
          }
        }
      }
    }
  }
  EXPECT_GT(multi, 0u);
}

TEST(DistinctEnds, HamiltonPathReturnedAsIs) {
  const Digraph d = make(3, {{0, 1}, {1, 2}, {2, 0}});
  const SpanningFactor f{VertexSeq{0, 1, 2}, {}, 2};
  EXPECT_EQ(ham_path_distinct_ends(d, *recognize_smd(d), f).seq, (VertexSeq{0, 1, 2}));
}

TEST(DistinctEnds, PathPlusTriangle) {
  // Parts {0,3}, {1,4}, {2}; factor: path 3->4 and cycle 0->1->2->0.
  const Digraph d = make(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {0, 4}, {1, 3}, {3, 2}, {4, 2}});
  const auto parts = PartiteStructure::from_parts(d, {{0, 3}, {1, 4}, {2}});
  const SpanningFactor f{VertexSeq{3, 4}, {{0, 1, 2}}, 5};
  const HamiltonPath p = ham_path_distinct_ends(d, parts, f);
  EXPECT_TRUE(is_directed_hamiltonian(d, p.seq, WalkKind::Path));
  EXPECT_FALSE(parts.same_part(p.seq.front(), p.seq.back()));
  EXPECT_TRUE(brute::distinct_ends_path(d, part_index(parts, 5)));
}

TEST(DistinctEnds, RejectsSamePartEnds) {
  const Digraph d = make(3, {{0, 1}, {1, 2}});
  const auto parts = PartiteStructure::from_parts(d, {{0, 2}, {1}});
  EXPECT_THROW(ham_path_distinct_ends(d, parts, SpanningFactor{VertexSeq{0, 1, 2}, {}, 2}), InputError);
}

TEST(DistinctEnds, RandomFactorsAlwaysSucceed) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    const auto [d, parts] = random_smd(seed, 3, 8);
    Rng rng(seed + 5);
    std::vector<std::int64_t> w(static_cast<std::size_t>(d.order() * d.order()));
    for (auto& x : w) x = static_cast<std::int64_t>(rng.below(50));
    const auto f = max_weight_one_path_cycle_factor(d, w);
    if (!f || parts.same_part(f->path->front(), f->path->back())) continue;
    ++checked;
    ConstructionTrace trace;
    const HamiltonPath p = ham_path_distinct_ends(d, parts, *f, {}, &trace);
    ASSERT_TRUE(is_directed_hamiltonian(d, p.seq, WalkKind::Path)) << seed;
    ASSERT_FALSE(parts.same_part(p.seq.front(), p.seq.back())) << seed;
    EXPECT_TRUE(brute::distinct_ends_path(d, part_index(parts, d.order())));
  }
  EXPECT_GT(checked, 300u);
}

TEST(Hamiltonicity, StrongTournament) {
  const Digraph d = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}});
  const auto a = is_hamiltonian_smd(d, *recognize_smd(d));
  ASSERT_TRUE(a.cycle);
  EXPECT_TRUE(is_directed_hamiltonian(d, a.cycle->seq, WalkKind::Cycle));
}

TEST(Hamiltonicity, SourceVertexMeansNoCycleFactor) {
  const Digraph d = make(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto a = is_hamiltonian_smd(d, *recognize_smd(d));
  EXPECT_FALSE(a.cycle);
  EXPECT_EQ(a.branch, "no-cycle-factor");
}

TEST(Hamiltonicity, AgreesWithSubsetSearch) {
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    const auto [d, parts] = random_smd(seed, 3, 9);
    const auto a = is_hamiltonian_smd(d, parts);
    ASSERT_EQ(a.cycle.has_value(), brute::hamiltonian(d)) << seed << " " << a.branch;
    if (a.cycle) {
      EXPECT_TRUE(is_directed_hamiltonian(d, a.cycle->seq, WalkKind::Cycle));
    }
  }
}

TEST(Search, FindHamiltonCycleAgreesWithSubsetSearch) {
  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph d = brute::random_digraph(2 + trial % 9, 0.15 + 0.5 * rng.unit(), rng);
    const auto c = find_hamilton_cycle(d);
    ASSERT_EQ(c.has_value(), brute::hamiltonian(d)) << trial;
    if (c) {
      EXPECT_TRUE(is_directed_hamiltonian(d, *c, WalkKind::Cycle));
    }
  }
}

TEST(Search, ExpiredDeadlineThrowsOnLongSearch) {
  // Two disjoint dense halves joined one way: no Hamilton cycle, and the
  // search has many partial paths to reject.
  std::vector<Arc> arcs;
  const int h = 14;
  for (Vertex u = 0; u < 2 * h; ++u) {
    for (Vertex v = 0; v < 2 * h; ++v) {
      if (u != v && (u < h) == (v < h)) arcs.push_back({u, v});
    }
  }
  for (Vertex u = 0; u < h; ++u) arcs.push_back({u, u + h});
  const Digraph d = Digraph::build(2 * h, arcs);
  EXPECT_THROW(find_hamilton_cycle(d, std::chrono::steady_clock::now()), TimeLimitExceeded);
}

TEST(Mfahop, TransitiveTournament) {
  const Digraph d = make(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto s = mfahop_smd(d, *recognize_smd(d));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sigma, 2);
  EXPECT_EQ(s->walk.seq, (VertexSeq{0, 1, 2}));
}

TEST(Mfahop, TwoIntoOne) {
  // a=0, b=2 in the big part, x=1; arcs a->x, b->x.
  const Digraph d = make(3, {{0, 1}, {2, 1}});
  const auto s = mfahop_smd(d, *recognize_smd(d));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sigma, 1);
  EXPECT_EQ(s->walk.seq[1], 1);
}

TEST(Mfahop, NoneWhenMajorityFails) {
  const Digraph d = make(4, {{0, 1}, {2, 1}, {3, 1}});
  EXPECT_FALSE(mfahop_smd(d, *recognize_smd(d)));
}

TEST(Mfahop, EqualsFactorCostAndOptimum) {
  for (std::uint64_t seed = 1; seed <= 800; ++seed) {
    const auto [d, parts] = random_smd(seed, 2, 9);
    const auto s = mfahop_smd(d, parts);
    ASSERT_EQ(sigma_of(s), brute::mfahop(d)) << seed;
    if (s) {
      EXPECT_EQ(s->sigma, *brute::path_cycle_factor(d));
      EXPECT_EQ(validate_walk(d, s->walk.seq, WalkKind::Path).sigma_plus, s->sigma);
    }
  }
}

TEST(Mfahoc, Triangle) {
  const Digraph d = make(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto s = mfahoc_smd(d, *recognize_smd(d));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sigma, 3);
}

TEST(Mfahoc, RejectsTinyInstances) {
  const Digraph d = make(2, {{0, 1}});
  EXPECT_THROW(mfahoc_smd(d, *recognize_smd(d)), InputError);
}

TEST(Mfahoc, CycleFactorWithoutHamiltonCycle) {
  // Found by searching random SMDs; also pinned as a fixture file.
  const Digraph d = make(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 0}, {4, 3}, {4, 5}, {5, 0}, {5, 2}});
  const auto parts = PartiteStructure::from_parts(d, {{2, 4}, {0, 3}, {1, 5}});
  EXPECT_EQ(*brute::cycle_factor(d), 6);
  EXPECT_FALSE(brute::hamiltonian(d));
  const auto s = mfahoc_smd(d, parts);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->sigma, 5);
  EXPECT_EQ(s->branch, "smd-cycle-nonhamiltonian");
  EXPECT_EQ(brute::mfahoc(d), std::optional<int>(5));
}

TEST(Mfahoc, MatchesCaseFormulaAndOptimum) {
  for (std::uint64_t seed = 1; seed <= 800; ++seed) {
    const auto [d, parts] = random_smd(seed, 3, 9);
    const auto s = mfahoc_smd(d, parts);
    const auto want = brute::mfahoc(d);
    ASSERT_EQ(sigma_of(s), want) << seed;
    if (!s) continue;
    const int n = d.order();
    const int cf = *brute::cycle_factor(d);
    EXPECT_EQ(s->sigma, cf == n && !brute::hamiltonian(d) ? n - 1 : cf) << seed;
    EXPECT_EQ(validate_walk(d, s->walk.seq, WalkKind::Cycle).sigma_plus, s->sigma);
  }
}

TEST(Monotonicity, CompletingADigonNeverHurts) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto [d, parts] = random_smd(seed, 3, 7);
    const auto base_p = sigma_of(mfahop_smd(d, parts));
    const auto base_c = sigma_of(mfahoc_smd(d, parts));
    for (const Arc& a : d.arcs()) {
      if (d.has_arc(a.head, a.tail)) continue;
      const Arc rev[] = {{a.head, a.tail}};
      const Digraph e = d.with_arcs(rev);
      EXPECT_GE(sigma_of(mfahop_smd(e, parts)).value_or(-1), base_p.value_or(-1));
      EXPECT_GE(sigma_of(mfahoc_smd(e, parts)).value_or(-1), base_c.value_or(-1));
    }
  }
}

TEST(Scale, ThreeEqualPartsOfSixty) {
  const auto inst = fwdarc::harness::generate_smd({{60, 60, 60}, 0.1, 0.5}, 4);
  const auto parts = PartiteStructure::from_parts(inst.graph, *inst.parts);
  const auto p = mfahop_smd(inst.graph, parts);
  const auto c = mfahoc_smd(inst.graph, parts);
  ASSERT_TRUE(p);
  ASSERT_TRUE(c);
  EXPECT_EQ(p->sigma, max_cost_one_path_cycle_factor(symmetric_01(inst.graph))->cost);
  EXPECT_EQ(validate_walk(inst.graph, c->walk.seq, WalkKind::Cycle).sigma_plus, c->sigma);
  EXPECT_LE(c->sigma, inst.graph.order());
}
