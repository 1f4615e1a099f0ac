#include "dowker/network.hpp"

#include <algorithm>

#include "dowker/apsp.hpp"
#include "dowker/error.hpp"

namespace dowker {

namespace {

void check_weight(Vertex from, Vertex to, Extended w) {
  if (from != to && w.is_finite() && w.value() <= 0.0) {
    fail(Errc::InvalidNetwork, "edge " + std::to_string(from) + "->" + std::to_string(to) +
                                   " has non-positive weight " + w.to_string());
  }
}

}  // namespace

Network::Network(std::size_t n) : n_(n), w_(n * n, Extended::infinity()) {
  if (n == 0) fail(Errc::InvalidNetwork, "network needs at least one vertex");
  for (std::size_t i = 0; i < n; ++i) w_[i * n + i] = Extended::zero();
}

Network::Network(std::size_t n, std::vector<Extended> weights, std::vector<std::string> labels)
    : n_(n), w_(std::move(weights)) {
  if (n == 0) fail(Errc::InvalidNetwork, "network needs at least one vertex");
  if (w_.size() != n * n) {
    fail(Errc::InvalidNetwork, "weight matrix has " + std::to_string(w_.size()) + " entries, expected " +
                                   std::to_string(n * n));
  }
  for (Vertex i = 0; i < n; ++i) {
    w_[i * n + i] = Extended::zero();
    for (Vertex j = 0; j < n; ++j) check_weight(i, j, w_[i * n + j]);
  }
  set_labels(std::move(labels));
}

Network Network::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  Network g(n);
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      fail(Errc::InvalidNetwork, "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                     " out of range for " + std::to_string(n) + " vertices");
    }
    if (e.from == e.to) continue;
    g.set_weight(e.from, e.to, e.weight);
  }
  g.set_labels(std::move(labels));
  return g;
}

void Network::set_weight(Vertex from, Vertex to, Extended weight) {
  if (from >= n_ || to >= n_) fail(Errc::InvalidNetwork, "vertex index out of range");
  if (from == to) return;
  check_weight(from, to, weight);
  w_[from * n_ + to] = weight;
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = 0; j < n_; ++j)
      if (has_edge(i, j)) out.push_back({i, j, (*this)(i, j)});
  return out;
}

std::size_t Network::edge_count() const noexcept {
  std::size_t count = 0;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = 0; j < n_; ++j)
      if (has_edge(i, j)) ++count;
  return count;
}

void Network::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    fail(Errc::InvalidNetwork, "expected " + std::to_string(n_) + " labels, got " + std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
}

Network Network::transposed() const {
  std::vector<Extended> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = w_[i * n_ + j];
  return Network(n_, std::move(t), labels_);
}

Network path_completion(const Network& g) {
  const std::size_t n = g.size();
  std::vector<Extended> d = n <= kDenseApspLimit ? kernels::floyd_warshall_parallel(n, g.matrix())
                                                 : kernels::dijkstra_all_parallel(n, g.matrix());
  return Network(n, std::move(d), g.labels());
}

Extended max_finite_entry(const Network& g) noexcept {
  Extended best = Extended::zero();
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j)
      if (g.has_edge(i, j)) best = max(best, g(i, j));
  return best;
}

Extended max_finite_weight(const Network& g) {
  if (g.edge_count() == 0) fail(Errc::NoEdges, "network has no finite off-diagonal weights");
  return max_finite_entry(g);
}

VertexSet out_neighborhood(const Network& g, Vertex v) {
  VertexSet out;
  auto row = g.row(v);
  for (Vertex x = 0; x < g.size(); ++x)
    if (row[x].is_finite()) out.push_back(x);
  return out;
}

}  // namespace dowker
