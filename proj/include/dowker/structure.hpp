#pragma once

#include <cstddef>
#include <vector>

#include "dowker/network.hpp"

namespace dowker {

enum class Orientation { Consistent, Inconsistent };

/// Shape of a cycle graph. `order` lists the vertices around the cycle; for
/// consistent cycles it follows the edge direction (order[i] -> order[i+1]).
/// Sources have both incident edges outgoing, sinks both incoming.
struct CycleStructure {
  Orientation orientation = Orientation::Consistent;
  VertexSet sources;
  VertexSet sinks;
  std::vector<Vertex> order;
};

/// Errc::NotACycle unless the underlying undirected graph is one simple cycle
/// through all n >= 3 vertices with every edge carried in a single direction.
CycleStructure classify_cycle(const Network& g);

struct CycleBlock {
  Network network;
  /// Original vertex ids; vertex i of `network` is vertices[i].
  VertexSet vertices;
};

/// Cycle blocks of a directed cactus, found through the biconnected blocks of
/// the underlying undirected graph. Bridge blocks are dropped. Errc::NotCactus
/// when a block is neither a single edge nor a cycle, or when an edge is
/// present in both directions.
std::vector<CycleBlock> cactus_decompose(const Network& g);

/// A set of disjoint cells covering [0, n).
class Partition {
 public:
  /// Cells are numbered by the assignment values, which must be 0..k-1 with
  /// every cell non-empty.
  static Partition from_assignment(std::vector<std::size_t> assignment);
  /// Errc::BadPartition on overlapping, out-of-range or non-covering cells.
  static Partition from_cells(std::size_t n, std::vector<VertexSet> cells);

  std::size_t size() const noexcept { return cells_.size(); }
  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  const std::vector<VertexSet>& cells() const noexcept { return cells_; }
  std::size_t cell_of(Vertex v) const { return assignment_.at(v); }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

 private:
  std::vector<VertexSet> cells_;
  std::vector<std::size_t> assignment_;
};

enum class WeightMode { Unit, Count, InverseCount };

/// Supernode graph: an edge between cells i != j exists iff some edge of g
/// goes from cell i to cell j. Unit: weight 1; Count: number of such edges;
/// InverseCount: 1 / count. Edges inside a cell are dropped.
Network quotient_network(const Network& g, const Partition& p, WeightMode mode);

/// Weight a supernode edge crossed `count` times gets under `mode`.
Extended crossing_weight(std::size_t count, WeightMode mode);

}  // namespace dowker
