#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "dowker/network_io.hpp"

namespace testsupport {

using dowker::Edge;
using dowker::Filtration;
using dowker::PersistencePair;
using dowker::Simplex;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Network random_network(Rng& rng, std::size_t n, double p, int max_w) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, max_w);
  Network g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && coin(rng)) g.set_weight(i, j, weight(rng));
  return g;
}

Network random_cycle(Rng& rng, std::size_t n, int max_w, bool shuffle) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (shuffle) std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> weight(1, max_w);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = order[i], b = order[(i + 1) % n];
    if (coin(rng)) std::swap(a, b);
    edges.push_back({a, b, weight(rng)});
  }
  return Network::from_edges(n, edges);
}

Network directed_cycle(const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % n), weights[i]});
  return Network::from_edges(n, edges);
}

Network random_cactus(Rng& rng, std::size_t blocks, std::size_t max_n, int max_w) {
  std::uniform_int_distribution<int> weight(1, max_w);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  std::size_t n = 1;
  auto orient = [&](Vertex a, Vertex b) {
    if (coin(rng)) std::swap(a, b);
    edges.push_back({a, b, weight(rng)});
  };
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::size_t len = uniform(rng, 3, 6);
    if (n + len - 1 > max_n) break;
    const Vertex base = static_cast<Vertex>(uniform(rng, 0, n - 1));
    std::vector<Vertex> ring{base};
    for (std::size_t i = 1; i < len; ++i) ring.push_back(static_cast<Vertex>(n++));
    for (std::size_t i = 0; i < len; ++i) orient(ring[i], ring[(i + 1) % len]);
    if (n < max_n && coin(rng) && coin(rng)) {
      orient(static_cast<Vertex>(uniform(rng, 0, n - 1)), static_cast<Vertex>(n));
      ++n;
    }
  }
  return Network::from_edges(n, edges);
}

Network wedge(const Network& a, Vertex va, const Network& b, Vertex vb) {
  const std::size_t n = a.size() + b.size() - 1;
  auto map_b = [&](Vertex x) -> Vertex {
    if (x == vb) return va;
    return static_cast<Vertex>(a.size() + (x < vb ? x : x - 1));
  };
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({map_b(e.from), map_b(e.to), e.weight});
  return Network::from_edges(n, edges);
}

Network permuted(const Network& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.from], perm[e.to], e.weight});
  return Network::from_edges(g.size(), edges);
}

Filtration random_filtration(Rng& rng, std::size_t max_simplices) {
  const std::size_t nv = uniform(rng, 3, 6);
  std::set<Simplex> chosen;
  std::vector<Simplex> order;
  auto add_closure = [&](const Simplex& top) {
    std::vector<Simplex> missing;
    const std::size_t m = top.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) s.push_back(top[i]);
      if (!chosen.count(s)) missing.push_back(s);
    }
    if (chosen.size() + missing.size() > max_simplices) return;
    for (auto& s : missing) chosen.insert(s);
  };
  for (int attempt = 0; attempt < 40; ++attempt) {
    const std::size_t k = uniform(rng, 1, std::min<std::size_t>(4, nv));
    std::vector<Vertex> all(nv);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::shuffle(all.begin(), all.end(), rng);
    Simplex top(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(top.begin(), top.end());
    add_closure(top);
  }
  // Values: each simplex at least the max of its faces, plus a small step.
  std::vector<Simplex> sorted(chosen.begin(), chosen.end());
  std::sort(sorted.begin(), sorted.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<Simplex, int> value;
  std::vector<std::pair<Simplex, Extended>> entries;
  for (const Simplex& s : sorted) {
    int base = 0;
    for (std::size_t drop = 0; s.size() > 1 && drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      base = std::max(base, value.at(f));
    }
    const int v = base + static_cast<int>(uniform(rng, 0, 2));
    value[s] = v;
    entries.emplace_back(s, Extended(v));
  }
  return Filtration::from_entries(std::move(entries));
}

namespace {

// Incremental GF(2) basis over 64-bit vectors.
struct Basis {
  std::vector<std::uint64_t> rows;  // each with a distinct leading bit

  bool insert(std::uint64_t v) {
    for (std::uint64_t r : rows)
      if (v & (std::uint64_t{1} << (63 - std::countl_zero(r)))) v ^= r;
    if (v == 0) return false;
    // Keep rows reduced against the new leading bit.
    const std::uint64_t lead = std::uint64_t{1} << (63 - std::countl_zero(v));
    for (std::uint64_t& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
    return true;
  }
  std::size_t rank() const { return rows.size(); }
};

}  // namespace

std::vector<PersistencePair> rank_oracle(const Filtration& f, std::size_t max_dim) {
  // Distinct values, ascending.
  std::vector<Extended> levels;
  for (std::size_t i = 0; i < f.size(); ++i) levels.push_back(f.value(i));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t m = levels.size();

  // Simplices per dimension with their level.
  std::vector<std::vector<std::pair<Simplex, std::size_t>>> by_dim(max_dim + 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.dim(i) > max_dim + 1) continue;
    auto s = f.simplex(i);
    const std::size_t level =
        static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), f.value(i)) - levels.begin());
    by_dim[f.dim(i)].emplace_back(Simplex(s.begin(), s.end()), level);
  }
  auto position = [&](std::size_t dim, const Simplex& s) {
    for (std::size_t j = 0; j < by_dim[dim].size(); ++j)
      if (by_dim[dim][j].first == s) return j;
    return by_dim[dim].size();
  };
  auto boundary = [&](std::size_t dim, const Simplex& s) {
    std::uint64_t v = 0;
    if (dim == 0) return v;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      v |= std::uint64_t{1} << position(dim - 1, face);
    }
    return v;
  };

  std::vector<PersistencePair> out;
  for (std::size_t k = 0; k <= max_dim; ++k) {
    // cycles[a] = basis of Z_k(K_a); bounds[b] = generators of B_k(K_b).
    std::vector<std::vector<std::uint64_t>> cycles(m), bounds(m);
    for (std::size_t a = 0; a < m; ++a) {
      // Kernel of the boundary on k-chains of K_a, by elimination with tracking.
      std::vector<std::pair<std::uint64_t, std::uint64_t>> reduced;  // (boundary, chain)
      for (std::size_t j = 0; j < by_dim[k].size(); ++j) {
        if (by_dim[k][j].second > a) continue;
        std::uint64_t bd = boundary(k, by_dim[k][j].first), chain = std::uint64_t{1} << j;
        bool changed = true;
        while (bd != 0 && changed) {
          changed = false;
          for (const auto& [rb, rc] : reduced) {
            if (rb != 0 && (63 - std::countl_zero(rb)) == (63 - std::countl_zero(bd))) {
              bd ^= rb;
              chain ^= rc;
              changed = true;
              break;
            }
          }
        }
        if (bd == 0) cycles[a].push_back(chain);
        else reduced.emplace_back(bd, chain);
      }
      for (const auto& [s, level] : by_dim[k + 1])
        if (level <= a) bounds[a].push_back(boundary(k + 1, s));
    }
    // rank(H_k(K_a) -> H_k(K_b)) = dim Z_a - dim(Z_a cap B_b)
    //                              = dim(Z_a + B_b) - dim B_b.
    auto persistent_rank = [&](std::size_t a, std::size_t b) -> long {
      Basis zb, bb;
      for (auto v : bounds[b]) {
        zb.insert(v);
        bb.insert(v);
      }
      for (auto v : cycles[a]) zb.insert(v);
      return static_cast<long>(zb.rank()) - static_cast<long>(bb.rank());
    };
    std::vector<std::vector<long>> r(m, std::vector<long>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) r[a][b] = persistent_rank(a, b);
    auto rank = [&](long a, long b) -> long {
      if (a < 0) return 0;
      return r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    for (std::size_t a = 0; a < m; ++a) {
      const long ia = static_cast<long>(a);
      for (std::size_t b = a + 1; b < m; ++b) {
        const long ib = static_cast<long>(b);
        // Classes born at level a that die exactly at level b.
        const long mult = rank(ia, ib - 1) - rank(ia - 1, ib - 1) - rank(ia, ib) + rank(ia - 1, ib);
        for (long c = 0; c < mult; ++c) out.push_back({k, levels[a], levels[b], false});
      }
      const long mult = rank(ia, static_cast<long>(m) - 1) - rank(ia - 1, static_cast<long>(m) - 1);
      for (long c = 0; c < mult; ++c) out.push_back({k, levels[a], Extended::infinity(), false});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a < b; });
  return out;
}

Extended brute_value(const Network& d, const std::vector<Vertex>& s) {
  Extended best = Extended::infinity();
  for (Vertex w = 0; w < d.size(); ++w) {
    Extended reach = Extended::zero();
    for (Vertex x : s) reach = max(reach, d(w, x));
    best = min(best, reach);
  }
  return best;
}

std::vector<std::pair<double, double>> bars(const dowker::PersistenceDiagram& d, std::size_t dim) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : d.in_dim(dim)) out.emplace_back(p.birth.value(), p.death.value());
  return out;
}

std::string fixture(const std::string& name) { return std::string(DOWKER_FIXTURES) + "/" + name; }

Network load_fixture(const std::string& name) { return dowker::load_network(fixture(name)); }

}  // namespace testsupport

#include "dowker/betti.hpp"
#include "dowker/dominating.hpp"
#include "dowker/dowker.hpp"

namespace testsupport {

void for_each_preorder(std::size_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> masks;
  // Adds point m to a preorder on [0, m): its up-set U must be up-closed,
  // its down-set D down-closed, and every d in D must already reach U.
  std::function<void(std::size_t)> grow = [&](std::size_t m) {
    if (m == n) {
      fn(masks);
      return;
    }
    const std::uint32_t all = (std::uint32_t{1} << m) - 1;
    for (std::uint32_t up = 0; up <= all; ++up) {
      bool closed = true;
      for (std::size_t u = 0; u < m && closed; ++u)
        if ((up >> u & 1u) && (masks[u] & ~up)) closed = false;
      if (!closed) continue;
      for (std::uint32_t down = 0; down <= all; ++down) {
        bool ok = true;
        for (std::size_t d = 0; d < m && ok; ++d) {
          if (!(down >> d & 1u)) continue;
          for (std::size_t y = 0; y < m && ok; ++y)
            if ((masks[y] >> d & 1u) && !(down >> y & 1u)) ok = false;  // down-closed
          if ((up & ~masks[d]) != 0) ok = false;                       // d reaches U
        }
        if (!ok) continue;
        std::vector<std::uint32_t> saved = masks;
        for (std::size_t d = 0; d < m; ++d)
          if (down >> d & 1u) masks[d] |= std::uint32_t{1} << m;
        masks.push_back(up | (std::uint32_t{1} << m));
        grow(m + 1);
        masks = std::move(saved);
      }
    }
  };
  grow(0);
}

Network network_from_masks(const std::vector<std::uint32_t>& masks) {
  const std::size_t n = masks.size();
  Network g(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      if (x != v && (masks[v] >> x & 1u)) g.set_weight(v, x, 1.0);
  return g;
}

namespace {

std::string profile_text(const dowker::BettiProfile& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.ranks.size(); ++i) s += (i ? "," : "") + std::to_string(b.ranks[i]);
  return s + ")";
}

bool same_reduced(const dowker::BettiProfile& a, const dowker::BettiProfile& b) {
  const std::size_t top = std::max(a.ranks.size(), b.ranks.size());
  for (std::size_t k = 0; k < top; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

// Vanishing from degree |K| - 1 and nerve agreement on network h.
bool statements_hold(const Network& h, const dowker::VertexSet& k, const dowker::BettiProfile& complex_betti) {
  for (std::size_t j = k.size() - 1; j < complex_betti.ranks.size(); ++j)
    if (complex_betti[j] != 0) return false;
  return same_reduced(dowker::betti(dowker::neighborhood_nerve(h, k), true), complex_betti);
}

}  // namespace

std::string check_domination(const Network& g) {
  using namespace dowker;
  const Network p = path_completion(g);
  const MaximalComplex mc = maximal_complex(p, 0);
  const BettiProfile b = betti_of_facets(mc.facets, true);
  const DominatingSet k = min_source_dominating_set(p, 64);
  for (std::size_t j = k.vertices.size() - 1; j < b.ranks.size(); ++j) {
    if (b[j] != 0) {
      return "reduced H" + std::to_string(j) + " = " + std::to_string(b[j]) + " with |K| = " +
             std::to_string(k.vertices.size());
    }
  }
  const BettiProfile nb = betti(neighborhood_nerve(p, k.vertices), true);
  if (!same_reduced(nb, b)) return "nerve Betti " + profile_text(nb) + " vs complex " + profile_text(b);
  const DominatingSet kg = min_source_dominating_set(g, 64);
  const BettiProfile ng = betti(neighborhood_nerve(p, kg.vertices), true);
  if (!same_reduced(ng, b)) return "nerve of raw dominating set " + profile_text(ng) + " vs " + profile_text(b);
  if (maximal_complex(induced_subgraph(p, k.vertices), 0).facets != mc.facets) {
    return "restriction to the dominating set changed the maximal complex";
  }
  return {};
}

bool domination_holds_uncompleted(const Network& g) {
  using namespace dowker;
  const MaximalComplex mc = maximal_complex(g, 0);
  const BettiProfile b = betti_of_facets(mc.facets, true);
  const DominatingSet k = min_source_dominating_set(g, 64);
  if (!statements_hold(g, k.vertices, b)) return false;
  return maximal_complex(induced_subgraph(g, k.vertices), 0).facets == mc.facets;
}

}  // namespace testsupport
