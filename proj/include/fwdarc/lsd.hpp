#pragma once

#include <optional>

#include "fwdarc/digraph.hpp"
#include "fwdarc/solution.hpp"

namespace fwdarc {

class StrongDigraphError : public InputError {
 public:
  using InputError::InputError;
};

// Acyclic ordering C_1..C_l of a connected, non-strong LSD.
struct LsdDecomposition {
  ComponentDecomposition order;
  // Every component semicomplete, C_i dominates C_{i+1}, no backward arcs,
  // and the interval property for longer arcs.
  bool properties_verified = false;
};

// Throws StrongDigraphError for strong input and InputError for
// disconnected or non-LSD input.
LsdDecomposition lsd_decomposition(const Digraph& d);

// Insertion algorithm for strong semicomplete digraphs (n >= 2).
HamiltonCycle ham_cycle_strong_semicomplete(const Digraph& d);

// Connected LSD.
HamiltonPath ham_path_lsd(const Digraph& d);

// Connected, non-strong LSD: Hamilton path from `start` (in C_1) to
// `end` (in C_l).
HamiltonPath ham_path_lsd_between(const Digraph& d, Vertex start, Vertex end);

// Strong LSD, n >= 2. Grows a cycle by splicing in shortest excursions
// through outside vertices.
HamiltonCycle ham_cycle_strong_lsd(const Digraph& d);

// Greedy (C_1, C_l)-path: start at the smallest vertex of C_1 and always
// step to an out-neighbour in the latest possible component (ties to the
// smallest vertex). Its length is d(C_1, C_l).
VertexSeq greedy_c1_cl_path(const Digraph& d, const LsdDecomposition& dec);

struct LsdCycleSolution : WalkSolution {
  // Non-strong case only: the greedy shortest path whose arcs are the
  // walk's backward steps.
  VertexSeq shortest_path;
};

// Connected LSD with n >= 3. nullopt when U(d) has a cut vertex and d is
// not strong (no Hamilton oriented cycle; the optimum is reported as 0).
std::optional<LsdCycleSolution> mfahoc_lsd(const Digraph& d);

}  // namespace fwdarc
