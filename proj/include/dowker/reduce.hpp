#pragma once

#include <cstddef>

#include "dowker/diagram.hpp"
#include "dowker/filtration.hpp"

namespace dowker {

/// Persistence pairs in dimensions 0..max_dim over the two-element field.
///
/// H0 comes from a union-find pass with the elder rule. Higher dimensions
/// reduce the coboundary matrix column by column in decreasing filtration
/// order, skipping columns already paired one dimension down (clearing).
/// The pairs coincide with those of the standard boundary reduction.
/// Simplices above dimension max_dim + 1 are ignored. Errc::MissingFaces when
/// a face is absent or appears after its coface.
PersistenceDiagram reduce(const Filtration& f, std::size_t max_dim);

/// Plain column reduction of the boundary matrix without clearing. Reference
/// for tests and benchmarks.
PersistenceDiagram reduce_homology(const Filtration& f, std::size_t max_dim);

}  // namespace dowker
