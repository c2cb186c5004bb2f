#pragma once

#include <string>

#include "fwdarc/digraph.hpp"

namespace fwdarc {

// Directed Hamilton cycle / path: every step is an arc of the host digraph.
struct HamiltonCycle {
  VertexSeq seq;
};

struct HamiltonPath {
  VertexSeq seq;
};

// Optimum forward-arc count together with a re-validated certificate walk.
struct WalkSolution {
  int sigma = 0;
  OrientedHamWalk walk;
  std::string branch;
};

}  // namespace fwdarc
