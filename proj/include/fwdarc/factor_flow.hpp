#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fwdarc/digraph.hpp"

namespace fwdarc {

// The symmetric (0,1)-digraph of D: arcs of D at cost 1, plus the reverse
// of every non-digon arc at cost 0.
class CostDigraph {
 public:
  explicit CostDigraph(Digraph original);

  const Digraph& original() const { return original_; }
  const Digraph& base() const { return base_; }
  int order() const { return base_.order(); }
  // Precondition: base().has_arc(u, v).
  int cost(Vertex u, Vertex v) const { return original_.has_arc(u, v) ? 1 : 0; }

 private:
  Digraph original_;
  Digraph base_;
};

CostDigraph symmetric_01(const Digraph& d);

// One optional directed path plus vertex-disjoint directed cycles.
struct SpanningFactor {
  std::optional<VertexSeq> path;
  std::vector<VertexSeq> cycles;
  int cost = 0;

  bool is_cycle_factor() const { return !path.has_value(); }
  std::vector<Arc> arcs() const;
};

// Checks disjointness, coverage, and that every arc lies in `host`. When
// `expect_path` is set the factor must carry a nonempty path.
bool is_spanning_factor(const Digraph& host, const SpanningFactor& f, bool expect_path);
int factor_cost(const CostDigraph& h, const SpanningFactor& f);

// Square cost matrix with forbidden cells.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  void set(std::size_t row, std::size_t col, std::int64_t cost);
  void forbid(std::size_t row, std::size_t col);
  bool allowed(std::size_t row, std::size_t col) const { return allowed_[row * size_ + col]; }
  std::int64_t cost(std::size_t row, std::size_t col) const { return cost_[row * size_ + col]; }

 private:
  std::size_t size_;
  std::vector<std::int64_t> cost_;
  std::vector<bool> allowed_;
};

struct Assignment {
  std::vector<std::size_t> col_of_row;
  std::int64_t total = 0;
};

// Minimum-cost perfect matching that avoids forbidden cells; nullopt when
// no such matching exists. Cells start forbidden.
std::optional<Assignment> min_cost_assignment(const CostMatrix& m);

std::optional<SpanningFactor> max_cost_cycle_factor(const CostDigraph& h);
std::optional<SpanningFactor> max_cost_one_path_cycle_factor(const CostDigraph& h);

// Same reductions on a plain digraph with caller-supplied arc weights
// (maximised). Used to sample varied factors of D itself.
std::optional<SpanningFactor> max_weight_cycle_factor(
    const Digraph& host, const std::vector<std::int64_t>& weight);
std::optional<SpanningFactor> max_weight_one_path_cycle_factor(
    const Digraph& host, const std::vector<std::int64_t>& weight);

}  // namespace fwdarc
