#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "dowker/filtration.hpp"
#include "dowker/network.hpp"
#include "dowker/relation.hpp"
#include "dowker/simplex.hpp"

namespace dowker {

enum class Variant { Source, Sink };

/// Full: every simplex up to dimension max_dim + 1.
/// Reduced: complete max_dim-skeleton, and in dimension max_dim + 1 only the
/// cones of undominated witnesses (see kernels::cone_simplices_serial). The
/// persistence diagrams agree in every dimension <= max_dim.
enum class FiltrationMode { Full, Reduced };

/// Source variant: s is a simplex iff one witness row covers every vertex of
/// s. Sink variant: the same on the transposed relation. Cut at max_dim.
SimplicialComplex dowker_complex(const Relation& r, Variant variant, std::size_t max_dim);

/// Dowker filtration of the path completion of g. A simplex s gets the value
/// min_w max_{x in s} d(w, x).
///
/// Without a cutoff everything finite is kept and the result is uncensored.
/// With one, values above it are dropped and the filtration is marked
/// censored; cutoff_too_low() flags cutoffs below the largest edge weight.
Filtration dowker_filtration(const Network& g, Variant variant = Variant::Source, std::size_t max_dim = 1,
                             std::optional<Extended> cutoff = std::nullopt,
                             FiltrationMode mode = FiltrationMode::Reduced);

struct MaximalComplex {
  /// Skeleton up to the requested dimension.
  SimplicialComplex complex;
  /// Inclusion-maximal closed out-neighbourhoods; their closure is the
  /// untruncated complex.
  std::vector<Simplex> facets;
  Extended delta_max;
};

/// Complex of the relation w(x, y) < inf on g as given (pass
/// path_completion(g) for the completed complex). delta_max is the least
/// threshold at which every facet is present.
MaximalComplex maximal_complex(const Network& g, std::size_t max_dim = std::numeric_limits<std::size_t>::max() - 1);

/// Nerve of the cover {N(v) : v in k} with N(v) the closed finite-weight
/// out-neighbourhood. Nerve vertices keep their ids from g.
/// Errc::NotDominating unless k dominates g.
SimplicialComplex neighborhood_nerve(const Network& g, const VertexSet& k,
                                     std::size_t max_dim = std::numeric_limits<std::size_t>::max() - 1);

}  // namespace dowker
