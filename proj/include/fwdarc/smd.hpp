#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fwdarc/digraph.hpp"
#include "fwdarc/factor_flow.hpp"
#include "fwdarc/search.hpp"
#include "fwdarc/solution.hpp"

namespace fwdarc {

// 2*max <= sum.
bool hc_majority(std::span<const std::size_t> sizes);
// 2*max <= sum + 1.
bool hp_majority(std::span<const std::size_t> sizes);

// Hamilton oriented cycle / path existence in an SMD. The cycle variant
// requires n >= 3.
bool has_ham_oriented_cycle_smd(const Digraph& d, const PartiteStructure& parts);
bool has_ham_oriented_path_smd(const Digraph& d, const PartiteStructure& parts);

// Index of a part V_i such that every arc (u, v) from `dominated` to
// `dominant` has succ(u) and pred(v) in V_i, or nullopt. With no such arcs
// every part qualifies and 0 is returned. Throws InputError if the cycles
// overlap or are not directed cycles of d.
std::optional<std::size_t> weakly_dominates(const Digraph& d, const PartiteStructure& parts,
                                            const VertexSeq& dominant, const VertexSeq& dominated);

// Cycles C_1..C_t (t >= 2) with C_i weakly dominating C_j for all i < j.
struct OrderedCycleFactor {
  std::vector<VertexSeq> cycles;
  // witness[i][j] (i < j) is a part certifying C_i over C_j.
  std::vector<std::vector<std::size_t>> witness;
};

struct SmdOptions {
  // Largest union of cycles the merge loop will search exhaustively.
  std::size_t exhaustive_union_limit = 16;
  Deadline deadline;
};

// Counters describing how a construction went; tests use them to check
// which branches ran.
struct ConstructionTrace {
  std::size_t splices = 0;
  std::size_t exhaustive_merges = 0;
  std::size_t case_absorptions = 0;
  std::size_t fallback_absorptions = 0;
};

using IrreducibleResult = std::variant<HamiltonCycle, OrderedCycleFactor>;

// Merges cycles of the cycle factor `f` of d until it is a Hamilton cycle
// or its cycles admit a weak-domination ordering. Throws AlgorithmStall if
// neither is reached.
IrreducibleResult irreducible_ordered_cycle_factor(const Digraph& d, const PartiteStructure& parts,
                                                   const SpanningFactor& f,
                                                   const SmdOptions& options = {},
                                                   ConstructionTrace* trace = nullptr);

// Given a 1-path-cycle factor of d whose path ends lie in different parts,
// returns a directed Hamilton path of d whose ends lie in different parts.
HamiltonPath ham_path_distinct_ends(const Digraph& d, const PartiteStructure& parts,
                                    const SpanningFactor& f, const SmdOptions& options = {},
                                    ConstructionTrace* trace = nullptr);

struct HamiltonicityAnswer {
  std::optional<HamiltonCycle> cycle;
  // "no-cycle-factor", "merge-loop" or "exact-search".
  std::string branch;
};

// n >= 3. Exact; the final branch is exponential (see search.hpp).
HamiltonicityAnswer is_hamiltonian_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options = {});

// Maximum forward arcs over Hamilton oriented paths; nullopt when the
// HP-majority inequality fails.
std::optional<WalkSolution> mfahop_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options = {},
                                       ConstructionTrace* trace = nullptr);

// Maximum forward arcs over Hamilton oriented cycles (n >= 3); nullopt
// when the HC-majority inequality fails.
std::optional<WalkSolution> mfahoc_smd(const Digraph& d, const PartiteStructure& parts,
                                       const SmdOptions& options = {},
                                       ConstructionTrace* trace = nullptr);

}  // namespace fwdarc
