#pragma once

#include <cstdint>
#include <optional>

#include "fwdarc/digraph.hpp"
#include "fwdarc/factor_flow.hpp"

namespace fwdarc {

// Exhaustive ground truth for small instances.

class OracleLimitError : public InputError {
 public:
  using InputError::InputError;
};

struct OracleResult {
  std::optional<int> value;  // nullopt: nothing of the requested kind exists
  VertexSeq witness;         // walk sequence, or successor map (-1 = path end) for factors
  std::uint64_t enumerated = 0;
};

inline constexpr int kDefaultOracleBound = 10;
inline constexpr int kDefaultFactorOracleBound = 8;

// Max forward arcs over Hamilton oriented cycles; n >= 3.
OracleResult oracle_mfahoc(const Digraph& d, int bound = kDefaultOracleBound);
// Max forward arcs over Hamilton oriented paths; n >= 1.
OracleResult oracle_mfahop(const Digraph& d, int bound = kDefaultOracleBound);
// Directed Hamilton cycle existence; n >= 2.
bool oracle_ham_cycle(const Digraph& d, int bound = kDefaultOracleBound);

enum class FactorKind { CycleFactor, OnePathCycleFactor };

// Max cost over all successor maps of base(h) that form a factor of `kind`.
OracleResult oracle_factor_cost(const CostDigraph& h, FactorKind kind,
                                int bound = kDefaultFactorOracleBound);

}  // namespace fwdarc
