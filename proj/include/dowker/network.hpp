#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker {

using Vertex = std::uint32_t;

/// Strictly increasing vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Extended weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A weighted digraph (X, w) stored as a dense row-major matrix.
///
/// Entry (i, j) is w(i, j); infinity means "no edge". The diagonal is always
/// zero and every finite off-diagonal weight is strictly positive.
class Network {
 public:
  /// Edgeless network on n >= 1 vertices.
  explicit Network(std::size_t n);

  /// Validates the matrix: diagonal entries are forced to zero, negative or
  /// zero off-diagonal weights raise Errc::InvalidNetwork.
  Network(std::size_t n, std::vector<Extended> weights, std::vector<std::string> labels = {});

  /// Edges with from == to are ignored (self-loops are always zero).
  static Network from_edges(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }

  Extended operator()(Vertex from, Vertex to) const noexcept { return w_[from * n_ + to]; }
  std::span<const Extended> row(Vertex from) const noexcept {
    return {w_.data() + static_cast<std::size_t>(from) * n_, n_};
  }
  std::span<const Extended> matrix() const noexcept { return w_; }

  /// Off-diagonal finite entry.
  bool has_edge(Vertex from, Vertex to) const noexcept {
    return from != to && (*this)(from, to).is_finite();
  }

  void set_weight(Vertex from, Vertex to, Extended weight);

  /// Finite off-diagonal entries in row-major order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  Network transposed() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Extended> w_;
  std::vector<std::string> labels_;
};

/// Shortest-path function of g as a network (the path completion P(g)).
/// Dense relaxation up to kDenseApspLimit vertices, per-source Dijkstra above.
Network path_completion(const Network& g);

inline constexpr std::size_t kDenseApspLimit = 2048;

/// Largest finite off-diagonal weight; Errc::NoEdges when there is none.
Extended max_finite_weight(const Network& g);

/// Largest finite off-diagonal entry, or zero when there is none.
Extended max_finite_entry(const Network& g) noexcept;

/// Finite-weight out-neighbourhood of v, including v itself.
VertexSet out_neighborhood(const Network& g, Vertex v);

}  // namespace dowker
