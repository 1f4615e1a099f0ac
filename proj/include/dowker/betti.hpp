#pragma once

#include <cstddef>
#include <vector>

#include "dowker/simplex.hpp"

namespace dowker {

struct BettiProfile {
  /// ranks[k] = rank of H_k over the two-element field.
  std::vector<std::size_t> ranks;
  bool reduced = false;

  /// Zero above the stored range.
  std::size_t operator[](std::size_t k) const noexcept { return k < ranks.size() ? ranks[k] : 0; }
  bool all_zero() const noexcept;

  /// Trailing zero ranks are ignored.
  friend bool operator==(const BettiProfile& a, const BettiProfile& b) noexcept;
};

/// Ranks in every dimension of the complex. Reduced mode subtracts one in
/// degree 0 for a non-empty complex.
BettiProfile betti(const SimplicialComplex& c, bool reduced);

/// Betti numbers of the complex generated by `facets` (the union of their
/// full simplices). Dominated vertices are removed first (v is dominated by u
/// when every facet containing v also contains u); such strong collapses
/// preserve the homotopy type and usually shrink a large cone to a point.
BettiProfile betti_of_facets(std::vector<Simplex> facets, bool reduced);

/// Facet list left after repeatedly deleting dominated vertices, lowest
/// index first. Exposed for tests.
std::vector<Simplex> strong_collapse(std::vector<Simplex> facets);

}  // namespace dowker
