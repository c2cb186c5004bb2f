#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

#include "fwdarc/digraph.hpp"

namespace fwdarc {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class TimeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact backtracking search for a directed Hamilton cycle. Prunes any
// branch that leaves an unvisited vertex without a usable in- or
// out-neighbour. Exponential in the worst case.
std::optional<VertexSeq> find_hamilton_cycle(const Digraph& d, Deadline deadline = std::nullopt);

}  // namespace fwdarc
