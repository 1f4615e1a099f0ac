#include "dowker/dominating.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dowker/error.hpp"

namespace dowker {

namespace {

std::vector<std::uint64_t> coverage_masks(const Network& g) {
  std::vector<std::uint64_t> masks(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    auto row = g.row(v);
    for (Vertex x = 0; x < g.size(); ++x)
      if (row[x].is_finite()) masks[v] |= std::uint64_t{1} << x;
  }
  return masks;
}

// Visits k-subsets of [0, n) in lexicographic order; stops at the first one
// whose coverage is complete.
bool search_size(const std::vector<std::uint64_t>& masks, std::size_t k, std::uint64_t full,
                 std::vector<Vertex>& chosen, std::size_t start, std::uint64_t covered) {
  if (chosen.size() == k) return covered == full;
  const std::size_t n = masks.size();
  const std::size_t remaining = k - chosen.size();
  for (std::size_t v = start; v + remaining <= n; ++v) {
    chosen.push_back(static_cast<Vertex>(v));
    if (search_size(masks, k, full, chosen, v + 1, covered | masks[v])) return true;
    chosen.pop_back();
  }
  return false;
}

VertexSet prune_to_minimal(const Network& g, VertexSet k) {
  for (std::size_t i = 0; i < k.size();) {
    VertexSet without = k;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (!without.empty() && is_source_dominating(g, without)) {
      k = std::move(without);
    } else {
      ++i;
    }
  }
  return k;
}

}  // namespace

bool is_source_dominating(const Network& g, const VertexSet& k) {
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : k) {
    if (v >= g.size()) return false;
    auto row = g.row(v);
    for (Vertex x = 0; x < g.size(); ++x)
      if (row[x].is_finite()) seen[x] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

DominatingSet min_source_dominating_set(const Network& g, std::size_t exact_limit) {
  const std::size_t n = g.size();
  if (n <= std::min<std::size_t>(exact_limit, 64)) {
    const auto masks = coverage_masks(g);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<Vertex> chosen;
    for (std::size_t k = 1; k <= n; ++k) {
      chosen.clear();
      if (search_size(masks, k, full, chosen, 0, 0)) return {chosen, true};
    }
  }

  // Greedy: most newly covered vertices first, lowest index on ties.
  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  VertexSet picked;
  while (remaining > 0) {
    std::size_t best_gain = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t gain = 0;
      auto row = g.row(v);
      for (Vertex x = 0; x < n; ++x)
        if (!covered[x] && row[x].is_finite()) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    picked.push_back(best);
    auto row = g.row(best);
    for (Vertex x = 0; x < n; ++x) {
      if (!covered[x] && row[x].is_finite()) {
        covered[x] = 1;
        --remaining;
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  return {prune_to_minimal(g, std::move(picked)), false};
}

Extended dominating_weight_bound(const Network& g, const VertexSet& k) {
  if (!is_source_dominating(g, k)) fail(Errc::NotDominating, "vertex set does not source-dominate the network");
  Extended bound = Extended::zero();
  for (Vertex v : k)
    for (Vertex x = 0; x < g.size(); ++x)
      if (g.has_edge(v, x)) bound = max(bound, g(v, x));
  return bound;
}

Network induced_subgraph(const Network& g, const VertexSet& k) {
  Network h(g.size());
  for (Vertex v : k) {
    if (v >= g.size()) fail(Errc::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
    for (Vertex x = 0; x < g.size(); ++x)
      if (g.has_edge(v, x)) h.set_weight(v, x, g(v, x));
  }
  h.set_labels(g.labels());
  return h;
}

}  // namespace dowker
