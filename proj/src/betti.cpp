#include "dowker/betti.hpp"

#include <algorithm>
#include <map>

#include "dowker/filtration.hpp"
#include "dowker/reduce.hpp"

namespace dowker {

namespace {

// Drops facets contained in another facet.
void keep_maximal(std::vector<Simplex>& facets) {
  std::sort(facets.begin(), facets.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Simplex> kept;
  for (Simplex& s : facets) {
    const bool inside = std::any_of(kept.begin(), kept.end(), [&](const Simplex& big) {
      return std::includes(big.begin(), big.end(), s.begin(), s.end());
    });
    if (!inside) kept.push_back(std::move(s));
  }
  facets = std::move(kept);
}

}  // namespace

bool BettiProfile::all_zero() const noexcept {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

bool operator==(const BettiProfile& a, const BettiProfile& b) noexcept {
  if (a.reduced != b.reduced) return false;
  const std::size_t top = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t k = 0; k < top; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

BettiProfile betti(const SimplicialComplex& c, bool reduced) {
  BettiProfile out;
  out.reduced = reduced;
  if (c.empty()) return out;
  const auto top = static_cast<std::size_t>(c.dimension());
  const PersistenceDiagram d = reduce(static_filtration(c), top);
  out.ranks.assign(top + 1, 0);
  for (const PersistencePair& p : d.raw())
    if (p.death.is_infinite()) ++out.ranks[p.dim];
  if (reduced) --out.ranks[0];
  return out;
}

std::vector<Simplex> strong_collapse(std::vector<Simplex> facets) {
  keep_maximal(facets);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Vertex, std::vector<std::size_t>> star;
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (Vertex v : facets[i]) star[v].push_back(i);
    if (star.size() <= 1) break;
    for (const auto& [v, containing] : star) {
      // Candidates u: common to every facet through v.
      Simplex common = facets[containing.front()];
      for (std::size_t i : containing) {
        Simplex next;
        std::set_intersection(common.begin(), common.end(), facets[i].begin(), facets[i].end(),
                              std::back_inserter(next));
        common = std::move(next);
      }
      if (common.size() < 2) continue;
      for (std::size_t i : containing) facets[i].erase(std::find(facets[i].begin(), facets[i].end(), v));
      keep_maximal(facets);
      changed = true;
      break;
    }
  }
  return facets;
}

BettiProfile betti_of_facets(std::vector<Simplex> facets, bool reduced) {
  facets = strong_collapse(std::move(facets));
  std::size_t top = 0;
  for (const Simplex& s : facets) top = std::max(top, s.size() - 1);
  return betti(SimplicialComplex::closure(facets, top), reduced);
}

}  // namespace dowker
