#include <doctest.h>

#include "dowker/apsp.hpp"
#include "dowker/witness.hpp"
#include "support.hpp"

using namespace dowker;
using namespace testsupport;

namespace {

bool same(const SimplexBatch& a, const SimplexBatch& b) {
  return a.dim == b.dim && a.vertices == b.vertices && a.values == b.values;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("shortest path kernels agree") {
  Rng rng(501);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform(rng, 1, 60);
    const Network g = random_network(rng, n, 3.0 / static_cast<double>(n + 1));
    const auto w = g.matrix();
    const auto fw = kernels::floyd_warshall_serial(n, w);
    CHECK(kernels::floyd_warshall_parallel(n, w) == fw);
    CHECK(kernels::dijkstra_all_serial(n, w) == fw);
    CHECK(kernels::dijkstra_all_parallel(n, w) == fw);
  }
}

TEST_CASE("simplex kernels: serial and parallel are identical") {
  Rng rng(502);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform(rng, 2, 25);
    const Network p = path_completion(random_network(rng, n, 0.15));
    const auto d = p.matrix();
    const Extended cut = trial % 3 == 0 ? Extended::infinity() : Extended(static_cast<double>(uniform(rng, 3, 40)));
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      CHECK(same(kernels::witness_simplices_serial(n, d, dim, cut), kernels::witness_simplices_parallel(n, d, dim, cut)));
      CHECK(same(kernels::cone_simplices_serial(n, d, dim, cut), kernels::cone_simplices_parallel(n, d, dim, cut)));
    }
    const auto edges = kernels::edge_values_serial(n, d, cut);
    CHECK(same(edges, kernels::edge_values_parallel(n, d, cut)));
    CHECK(same(edges, kernels::witness_simplices_serial(n, d, 1, cut)));
  }
}

TEST_CASE("witness kernel values equal brute force") {
  Rng rng(503);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = uniform(rng, 2, 9);
    const Network p = path_completion(random_network(rng, n, 0.3));
    for (std::size_t dim = 1; dim <= 2; ++dim) {
      const auto batch = kernels::witness_simplices_serial(n, p.matrix(), dim, Extended::infinity());
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto s = batch.simplex(i);
        CHECK(batch.values[i] == brute_value(p, std::vector<Vertex>(s.begin(), s.end())));
      }
    }
  }
}

TEST_CASE("cones lie inside the neighbourhood of their witness") {
  Rng rng(504);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = uniform(rng, 3, 12);
    const Network p = path_completion(random_network(rng, n, 0.3));
    const auto cones = kernels::cone_simplices_serial(n, p.matrix(), 2, Extended::infinity());
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const auto s = cones.simplex(i);
      const std::vector<Vertex> simplex(s.begin(), s.end());
      CHECK(cones.values[i] >= brute_value(p, simplex));
      CHECK(cones.values[i].is_finite());
    }
  }
}

}  // TEST_SUITE
