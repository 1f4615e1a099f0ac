#pragma once

#include <cstddef>

#include "dowker/network.hpp"

namespace dowker {

struct DominatingSet {
  VertexSet vertices;
  /// True when `vertices` is a minimum-cardinality dominating set; false when
  /// it came from the greedy fallback (it is still minimal under inclusion).
  bool exact = false;
};

/// K is a source dominating set when every vertex x has some k in K with
/// w(k, x) finite (k == x counts, since self-loops are zero).
bool is_source_dominating(const Network& g, const VertexSet& k);

/// Exhaustive search by increasing size when n <= exact_limit (at most 64),
/// greedy set cover followed by pruning otherwise. Ties go to the lowest
/// vertex index, so results are reproducible.
DominatingSet min_source_dominating_set(const Network& g, std::size_t exact_limit = 20);

/// Largest finite weight on an edge leaving K. Errc::NotDominating when K does
/// not dominate g. Zero when K has no outgoing edges.
Extended dominating_weight_bound(const Network& g, const VertexSet& k);

/// Keeps the rows of K and clears every other off-diagonal entry.
Network induced_subgraph(const Network& g, const VertexSet& k);

}  // namespace dowker
