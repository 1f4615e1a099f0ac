#include "dowker/structure.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "dowker/error.hpp"

namespace dowker {

namespace {

using UndirectedAdjacency = std::vector<std::vector<Vertex>>;

// Underlying simple undirected graph. Returns false when some pair carries
// edges in both directions.
bool underlying(const Network& g, UndirectedAdjacency& adj) {
  const std::size_t n = g.size();
  adj.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool fwd = g.has_edge(u, v);
      const bool bwd = g.has_edge(v, u);
      if (fwd && bwd) return false;
      if (fwd || bwd) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return true;
}

struct Block {
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Biconnected blocks by the iterative Hopcroft-Tarjan edge-stack method.
std::vector<Block> biconnected_blocks(const UndirectedAdjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<Block> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const Vertex w = adj[f.v][f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        Block block;
        while (!edge_stack.empty()) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.edges.push_back(e);
          if (e.first == parent.v && e.second == done.v) break;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

}  // namespace

CycleStructure classify_cycle(const Network& g) {
  const std::size_t n = g.size();
  if (n < 3) fail(Errc::NotACycle, "a cycle needs at least 3 vertices");
  UndirectedAdjacency adj;
  if (!underlying(g, adj)) fail(Errc::NotACycle, "edge present in both directions");
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() != 2) {
      fail(Errc::NotACycle, "vertex " + std::to_string(v) + " has undirected degree " + std::to_string(adj[v].size()));
    }
  }

  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = std::min(adj[0][0], adj[0][1]);
  while (cur != 0) {
    if (order.size() > n) fail(Errc::NotACycle, "walk did not close");
    order.push_back(cur);
    const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != n) fail(Errc::NotACycle, "underlying graph is disconnected");

  std::vector<char> forward(n);
  for (std::size_t i = 0; i < n; ++i) forward[i] = g.has_edge(order[i], order[(i + 1) % n]) ? 1 : 0;

  CycleStructure out;
  const auto fwd = static_cast<std::size_t>(std::count(forward.begin(), forward.end(), 1));
  if (fwd == n || fwd == 0) {
    out.orientation = Orientation::Consistent;
    if (fwd == 0) std::reverse(order.begin() + 1, order.end());
    out.order = std::move(order);
    return out;
  }

  out.orientation = Orientation::Inconsistent;
  for (std::size_t i = 0; i < n; ++i) {
    const bool out_prev = !forward[(i + n - 1) % n];
    const bool out_next = forward[i];
    if (out_prev && out_next) out.sources.push_back(order[i]);
    if (!out_prev && !out_next) out.sinks.push_back(order[i]);
  }
  std::sort(out.sources.begin(), out.sources.end());
  std::sort(out.sinks.begin(), out.sinks.end());
  out.order = std::move(order);
  return out;
}

std::vector<CycleBlock> cactus_decompose(const Network& g) {
  UndirectedAdjacency adj;
  if (!underlying(g, adj)) fail(Errc::NotCactus, "edge present in both directions");

  std::vector<CycleBlock> out;
  for (const Block& block : biconnected_blocks(adj)) {
    if (block.edges.size() == 1) continue;  // bridge
    std::map<Vertex, int> degree;
    for (auto [a, b] : block.edges) {
      ++degree[a];
      ++degree[b];
    }
    const bool is_cycle = degree.size() == block.edges.size() &&
                          std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
    if (!is_cycle) {
      fail(Errc::NotCactus, "block with " + std::to_string(degree.size()) + " vertices and " +
                                std::to_string(block.edges.size()) + " edges is not a cycle");
    }
    VertexSet vertices;
    for (const auto& kv : degree) vertices.push_back(kv.first);
    std::vector<Edge> edges;
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (auto [a, b] : block.edges) {
      if (g.has_edge(a, b)) edges.push_back({local(a), local(b), g(a, b)});
      if (g.has_edge(b, a)) edges.push_back({local(b), local(a), g(b, a)});
    }
    out.push_back({Network::from_edges(vertices.size(), edges), std::move(vertices)});
  }
  std::sort(out.begin(), out.end(), [](const CycleBlock& a, const CycleBlock& b) { return a.vertices < b.vertices; });
  return out;
}

Partition Partition::from_assignment(std::vector<std::size_t> assignment) {
  std::size_t cells = 0;
  for (std::size_t c : assignment) cells = std::max(cells, c + 1);
  std::vector<VertexSet> members(cells);
  for (std::size_t v = 0; v < assignment.size(); ++v) members[assignment[v]].push_back(static_cast<Vertex>(v));
  for (std::size_t c = 0; c < cells; ++c) {
    if (members[c].empty()) fail(Errc::BadPartition, "cell " + std::to_string(c) + " is empty");
  }
  Partition p;
  p.cells_ = std::move(members);
  p.assignment_ = std::move(assignment);
  return p;
}

Partition Partition::from_cells(std::size_t n, std::vector<VertexSet> cells) {
  std::vector<std::size_t> assignment(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) fail(Errc::BadPartition, "cell " + std::to_string(c) + " is empty");
    std::sort(cells[c].begin(), cells[c].end());
    for (Vertex v : cells[c]) {
      if (v >= n) fail(Errc::BadPartition, "vertex " + std::to_string(v) + " out of range");
      if (assignment[v] != static_cast<std::size_t>(-1)) {
        fail(Errc::BadPartition, "vertex " + std::to_string(v) + " appears in two cells");
      }
      assignment[v] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (assignment[v] == static_cast<std::size_t>(-1)) {
      fail(Errc::BadPartition, "vertex " + std::to_string(v) + " is not covered");
    }
  }
  Partition p;
  p.cells_ = std::move(cells);
  p.assignment_ = std::move(assignment);
  return p;
}

Extended crossing_weight(std::size_t count, WeightMode mode) {
  switch (mode) {
    case WeightMode::Unit: return Extended(1.0);
    case WeightMode::Count: return Extended(static_cast<double>(count));
    case WeightMode::InverseCount: return Extended(1.0 / static_cast<double>(count));
  }
  return Extended(1.0);
}

Network quotient_network(const Network& g, const Partition& p, WeightMode mode) {
  if (p.vertex_count() != g.size()) {
    fail(Errc::BadPartition, "partition covers " + std::to_string(p.vertex_count()) + " vertices, network has " +
                                 std::to_string(g.size()));
  }
  const std::size_t k = p.size();
  std::vector<std::size_t> counts(k * k, 0);
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) continue;
      const std::size_t a = p.cell_of(u), b = p.cell_of(v);
      if (a != b) ++counts[a * k + b];
    }
  }
  Network q(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (counts[a * k + b] > 0)
        q.set_weight(static_cast<Vertex>(a), static_cast<Vertex>(b), crossing_weight(counts[a * k + b], mode));
  return q;
}

}  // namespace dowker
