#include "dowker/apsp.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace dowker::kernels {

namespace {

// One relaxation sweep through pivot k for rows [lo, hi). Row k itself is a
// fixed point of the sweep because d(k, k) == 0, so rows are independent.
void relax_rows(std::size_t n, std::vector<Extended>& d, std::size_t k, std::size_t lo, std::size_t hi) {
  const Extended* pivot_row = d.data() + k * n;
  for (std::size_t i = lo; i < hi; ++i) {
    Extended* row = d.data() + i * n;
    const Extended dik = row[k];
    if (dik.is_infinite()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Extended via = dik + pivot_row[j];
      if (via < row[j]) row[j] = via;
    }
  }
}

struct Adjacency {
  std::vector<std::size_t> start;
  std::vector<std::pair<std::size_t, Extended>> arcs;
};

Adjacency adjacency(std::size_t n, std::span<const Extended> w) {
  Adjacency adj;
  adj.start.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && w[i * n + j].is_finite()) adj.arcs.emplace_back(j, w[i * n + j]);
    }
    adj.start[i + 1] = adj.arcs.size();
  }
  return adj;
}

void dijkstra_row(std::size_t n, const Adjacency& adj, std::size_t source, Extended* out) {
  for (std::size_t j = 0; j < n; ++j) out[j] = Extended::infinity();
  out[source] = Extended::zero();
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [dist, u] = queue.top();
    queue.pop();
    if (dist > out[u].value()) continue;
    for (std::size_t a = adj.start[u]; a < adj.start[u + 1]; ++a) {
      const auto& [v, w] = adj.arcs[a];
      const Extended cand = out[u] + w;
      if (cand < out[v]) {
        out[v] = cand;
        queue.emplace(cand.value(), v);
      }
    }
  }
}

}  // namespace

std::vector<Extended> floyd_warshall_serial(std::size_t n, std::span<const Extended> weights) {
  std::vector<Extended> d(weights.begin(), weights.end());
  for (std::size_t k = 0; k < n; ++k) relax_rows(n, d, k, 0, n);
  return d;
}

std::vector<Extended> floyd_warshall_parallel(std::size_t n, std::span<const Extended> weights) {
  std::vector<Extended> d(weights.begin(), weights.end());
  for (std::size_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static) if (n >= 256)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      relax_rows(n, d, k, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
    }
  }
  return d;
}

std::vector<Extended> dijkstra_all_serial(std::size_t n, std::span<const Extended> weights) {
  const Adjacency adj = adjacency(n, weights);
  std::vector<Extended> d(n * n);
  for (std::size_t s = 0; s < n; ++s) dijkstra_row(n, adj, s, d.data() + s * n);
  return d;
}

std::vector<Extended> dijkstra_all_parallel(std::size_t n, std::span<const Extended> weights) {
  const Adjacency adj = adjacency(n, weights);
  std::vector<Extended> d(n * n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s) {
    dijkstra_row(n, adj, static_cast<std::size_t>(s), d.data() + static_cast<std::size_t>(s) * n);
  }
  return d;
}

}  // namespace dowker::kernels
