#pragma once

#include <string>
#include <vector>

#include "hyperforge/hyperstruct.hpp"

namespace hyperforge {

enum class CensusKind { hyperfield, hypergroup };

struct CensusEntry {
  int order = 0;
  HyperTable table;
  bool realizable = false;
  std::string realization;  // least residue construction "gf:q/order:k", or empty
};

// Canonical representatives of every structure of order 1..max_order.
// Hyperfield tables carry the cyclic group on the nonzero elements and are
// generated from the defining row 1+x (every other row is the scaled copy
// a+b = a(1 + a^{-1}b)); hypergroup tables enumerate all nonzero cells
// freely. Candidates pass the exhaustive axiom checkers, duplicates are
// removed by structure-bijection search, and each survivor is flagged with
// the least residue table GF(q)/G, q <= 32, isomorphic to it. The order-1
// entry is the degenerate one-point table, where the distinct-unit demand is
// vacuously waived. Guards: max_order <= 4 (hyperfields), <= 3 (hypergroups).
std::vector<CensusEntry> census(int max_order, CensusKind kind = CensusKind::hyperfield);

}  // namespace hyperforge
