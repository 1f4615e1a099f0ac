#pragma once

// All-pairs shortest path kernels over a dense weight matrix.
//
// Each kernel has a serial reference and an OpenMP variant. The parallel
// variants split work so that every output entry is computed by the same
// sequence of operations as in the serial one, so results are bit-identical.

#include <cstddef>
#include <span>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker::kernels {

std::vector<Extended> floyd_warshall_serial(std::size_t n, std::span<const Extended> weights);
std::vector<Extended> floyd_warshall_parallel(std::size_t n, std::span<const Extended> weights);

std::vector<Extended> dijkstra_all_serial(std::size_t n, std::span<const Extended> weights);
std::vector<Extended> dijkstra_all_parallel(std::size_t n, std::span<const Extended> weights);

}  // namespace dowker::kernels
