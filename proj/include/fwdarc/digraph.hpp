#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwdarc {

using Vertex = int;
using VertexSeq = std::vector<Vertex>;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Raised for malformed input: bad endpoints, precondition violations,
// digraphs outside the class an operation requires.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a constructive step could not complete. Carries enough text
// to reproduce the failing configuration.
class AlgorithmStall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Arc a);

// Simple digraph on vertices 0..n-1. Immutable once built; adjacency is a
// dense bit matrix so arc queries are O(1).
class Digraph {
 public:
  Digraph() = default;

  // Throws InputError naming the first self-loop or out-of-range pair.
  // Duplicate pairs are collapsed.
  static Digraph build(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool has_arc(Vertex u, Vertex v) const {
    const auto bit = static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v);
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
  bool is_digon(Vertex u, Vertex v) const { return has_arc(u, v) && has_arc(v, u); }

  const VertexSeq& out(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }
  const VertexSeq& in(Vertex u) const { return in_[static_cast<std::size_t>(u)]; }

  // Sorted lexicographically.
  std::vector<Arc> arcs() const;

  Digraph reversed() const;
  Digraph with_arcs(std::span<const Arc> extra) const;
  Digraph without_arc(Arc a) const;
  // Induced subdigraph on `keep`; vertex keep[i] becomes i.
  Digraph induced(std::span<const Vertex> keep) const;
  // Appends a vertex with arcs to every existing vertex.
  Digraph with_source() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexSeq> out_;
  std::vector<VertexSeq> in_;
};

// Partition of an SMD into its partite sets V_1..V_p.
class PartiteStructure {
 public:
  PartiteStructure() = default;

  // Validates that `parts` partitions V(d), that every part is independent
  // and every cross pair is adjacent, and p >= 2. Order is preserved.
  static PartiteStructure from_parts(const Digraph& d, std::vector<VertexSeq> parts);

  std::size_t count() const { return parts_.size(); }
  const std::vector<VertexSeq>& parts() const { return parts_; }
  const VertexSeq& part(std::size_t i) const { return parts_[i]; }
  std::size_t part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }
  bool same_part(Vertex u, Vertex v) const { return part_of(u) == part_of(v); }
  std::vector<std::size_t> sizes() const;

  // Adds a singleton part holding `v` (used when a universal vertex is appended).
  PartiteStructure with_singleton(Vertex v) const;

 private:
  std::vector<VertexSeq> parts_;
  std::vector<std::size_t> part_of_;
};

// Canonical partition (parts sorted by size descending, then smallest
// vertex), or nullopt when d is not semicomplete multipartite.
std::optional<PartiteStructure> recognize_smd(const Digraph& d);

bool recognize_lsd(const Digraph& d);
bool is_semicomplete(const Digraph& d);

// Ordered strong components C_1..C_l: no arc from C_j to C_i for j > i.
struct ComponentDecomposition {
  std::vector<VertexSeq> components;  // each sorted ascending
  std::vector<int> component_of;

  std::size_t count() const { return components.size(); }
};

ComponentDecomposition strong_components(const Digraph& d);
bool is_strong(const Digraph& d);
bool underlying_connected(const Digraph& d);
// Requires n >= 3.
bool underlying_is_2connected(const Digraph& d);

enum class WalkKind { Path, Cycle };

struct OrientedHamWalk {
  WalkKind kind = WalkKind::Path;
  VertexSeq seq;
  std::vector<bool> forward;  // one flag per consecutive pair, closing pair last for cycles
  int sigma_plus = 0;
  int sigma_minus = 0;
};

// Thrown by validate_walk; `pair` is the offending step.
class WalkError : public InputError {
 public:
  WalkError(const std::string& what, std::optional<Arc> pair)
      : InputError(what), pair_(pair) {}
  std::optional<Arc> pair() const { return pair_; }

 private:
  std::optional<Arc> pair_;
};

// A step is forward whenever the arc in walk direction exists, so digon
// steps count as forward.
OrientedHamWalk validate_walk(const Digraph& d, std::span<const Vertex> seq, WalkKind kind);

// Checks that seq is a directed path (kind Path) or cycle (kind Cycle)
// covering V(d) with every step an arc of d.
bool is_directed_hamiltonian(const Digraph& d, std::span<const Vertex> seq, WalkKind kind);

}  // namespace fwdarc
