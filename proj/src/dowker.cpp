#include "dowker/dowker.hpp"

#include <algorithm>
#include <cstdint>

#include "dowker/dominating.hpp"
#include "dowker/error.hpp"
#include "dowker/witness.hpp"

namespace dowker {

SimplicialComplex dowker_complex(const Relation& r, Variant variant, std::size_t max_dim) {
  const Relation rel = variant == Variant::Source ? r : r.transposed();
  std::vector<Simplex> rows;
  for (Vertex w = 0; w < rel.size(); ++w) {
    Simplex s;
    for (Vertex x = 0; x < rel.size(); ++x)
      if (rel(w, x)) s.push_back(x);
    if (!s.empty()) rows.push_back(std::move(s));
  }
  return SimplicialComplex::closure(rows, max_dim);
}

Filtration dowker_filtration(const Network& g, Variant variant, std::size_t max_dim, std::optional<Extended> cutoff,
                             FiltrationMode mode) {
  Network d = path_completion(g);
  if (variant == Variant::Sink) d = d.transposed();
  const std::size_t n = d.size();
  const Extended limit = cutoff ? *cutoff : max_finite_entry(d);

  std::vector<SimplexBatch> batches;
  SimplexBatch vertices;
  vertices.dim = 0;
  for (Vertex v = 0; v < n; ++v) {
    vertices.vertices.push_back(v);
    vertices.values.push_back(Extended::zero());
  }
  batches.push_back(std::move(vertices));

  const std::size_t top = max_dim + 1;
  for (std::size_t k = 1; k <= top; ++k) {
    if (k == top && mode == FiltrationMode::Reduced) {
      batches.push_back(kernels::cone_simplices_parallel(n, d.matrix(), k, limit));
    } else if (k == 1) {
      batches.push_back(kernels::edge_values_parallel(n, d.matrix(), limit));
    } else {
      batches.push_back(kernels::witness_simplices_parallel(n, d.matrix(), k, limit));
    }
  }

  Filtration f = Filtration::from_batches(std::move(batches), limit, cutoff.has_value());
  if (cutoff && g.edge_count() > 0) f.set_cutoff_too_low(*cutoff < max_finite_weight(g));
  return f;
}

MaximalComplex maximal_complex(const Network& g, std::size_t max_dim) {
  const std::size_t n = g.size();
  std::vector<Simplex> hoods(n);
  for (Vertex v = 0; v < n; ++v) hoods[v] = out_neighborhood(g, v);

  auto contained = [](const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  MaximalComplex out;
  out.delta_max = Extended::zero();
  std::vector<Simplex> facets;
  for (Vertex v = 0; v < n; ++v) {
    bool maximal = true;
    for (Vertex u = 0; u < n && maximal; ++u) {
      if (u == v) continue;
      if (contained(hoods[v], hoods[u]) && (hoods[u].size() > hoods[v].size() || u < v)) maximal = false;
    }
    if (!maximal) continue;
    // Cheapest witness realising this facet.
    Extended best = Extended::infinity();
    for (Vertex u = 0; u < n; ++u) {
      if (hoods[u] != hoods[v]) continue;
      Extended reach = Extended::zero();
      for (Vertex x : hoods[u]) reach = max(reach, g(u, x));
      best = min(best, reach);
    }
    out.delta_max = max(out.delta_max, best);
    facets.push_back(hoods[v]);
  }
  std::sort(facets.begin(), facets.end());
  out.complex = SimplicialComplex::closure(facets, max_dim);
  out.facets = std::move(facets);
  return out;
}

SimplicialComplex neighborhood_nerve(const Network& g, const VertexSet& members, std::size_t max_dim) {
  VertexSet k = members;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (!is_source_dominating(g, k)) fail(Errc::NotDominating, "vertex set does not source-dominate the network");
  const std::size_t n = g.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cover(k.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < k.size(); ++i)
    for (Vertex x : out_neighborhood(g, k[i])) cover[i][x / 64] |= std::uint64_t{1} << (x % 64);

  std::vector<Simplex> simplices;
  Simplex current;
  // Depth-first over index-increasing subsets; an empty intersection prunes
  // every extension.
  auto visit = [&](auto&& self, std::size_t next, const std::vector<std::uint64_t>& meet) -> void {
    for (std::size_t i = next; i < k.size(); ++i) {
      std::vector<std::uint64_t> m(words);
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        m[w] = meet[w] & cover[i][w];
        any = any || m[w] != 0;
      }
      if (!any) continue;
      current.push_back(k[i]);
      simplices.push_back(current);
      if (current.size() <= max_dim) self(self, i + 1, m);
      current.pop_back();
    }
  };
  visit(visit, 0, std::vector<std::uint64_t>(words, ~std::uint64_t{0}));
  return SimplicialComplex(std::move(simplices));
}

}  // namespace dowker
