#pragma once

#include <cstddef>
#include <span>

#include "dowker/filtration.hpp"

// Simplex-value kernels over a completed distance matrix d (row = witness).
// Every kernel returns its batch sorted lexicographically with one entry per
// simplex, so serial and parallel variants produce identical output.
namespace dowker::kernels {

/// All dim-simplices with value min_w max_{x in s} d(w, x) <= cutoff, found by
/// enumerating subsets of each witness's cutoff-bounded out-neighbourhood.
SimplexBatch witness_simplices_serial(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff);
SimplexBatch witness_simplices_parallel(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff);

/// Same values as witness_simplices(..., 1, ...) by an O(n^3) pair scan.
SimplexBatch edge_values_serial(std::size_t n, std::span<const Extended> d, Extended cutoff);
SimplexBatch edge_values_parallel(std::size_t n, std::span<const Extended> d, Extended cutoff);

/// Cone simplices {w} u t of dimension `dim` with t inside the neighbourhood
/// of an undominated witness w.
///
/// w is dominated at time t when N_t(w) is a proper subset of N_t(w') for
/// some w', or equal to N_t(w') with w' < w. A cone first reachable from w at
/// s = max_{x in t} d(w, x) gets the first change point u >= s of row w at
/// which w is undominated; cones without such a point are skipped. Together
/// with the complete (dim-1)-skeleton this has the same homology in degrees
/// below `dim` as the full complex at every threshold.
SimplexBatch cone_simplices_serial(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff);
SimplexBatch cone_simplices_parallel(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff);

}  // namespace dowker::kernels
