#include "dowker/cycle_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "dowker/error.hpp"

namespace dowker {

std::string_view to_string(CycleCase c) noexcept {
  switch (c) {
    case CycleCase::Consistent: return "consistent";
    case CycleCase::Dom1: return "dom1";
    case CycleCase::Dom2: return "dom2";
    case CycleCase::Dom3Plus: return "dom3plus";
    case CycleCase::Empty: return "empty";
  }
  return "unknown";
}

namespace {

Extended one_source_death(const Network& d, const CycleStructure& cs) {
  const Vertex k = cs.sources.front();
  const Vertex s = cs.sinks.front();
  const auto& order = cs.order;
  const std::size_t n = order.size();
  const std::size_t ks = static_cast<std::size_t>(std::find(order.begin(), order.end(), k) - order.begin());
  Extended death = Extended::zero();
  bool any = false;
  for (const int step : {1, -1}) {
    Extended best = Extended::infinity();
    bool interior = false;
    for (std::size_t pos = (ks + n + step) % n; order[pos] != s; pos = (pos + n + step) % n) {
      const Vertex i = order[pos];
      interior = true;
      best = min(best, max(d(k, s), max(d(k, i), d(i, s))));
    }
    if (!interior) continue;
    any = true;
    death = max(death, best);
  }
  return any ? death : d(k, s);
}

}  // namespace

CyclePersistenceResult cycle_h1_oracle(const Network& g) {
  const CycleStructure cs = classify_cycle(g);
  const Extended birth = max_finite_weight(g);
  const Network d = path_completion(g);
  const std::size_t n = g.size();

  CyclePersistenceResult out;
  Extended death;
  if (cs.orientation == Orientation::Consistent) {
    out.tag = CycleCase::Consistent;
    death = Extended::infinity();
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) death = min(death, max(d(i, j), d(j, i)));
  } else if (cs.sources.size() >= 3) {
    out.tag = CycleCase::Dom3Plus;
    death = Extended::infinity();
  } else if (cs.sources.size() == 2) {
    out.tag = CycleCase::Dom2;
    death = Extended::zero();
    for (Vertex k : cs.sources)
      for (Vertex s : cs.sinks) death = max(death, d(k, s));
  } else {
    out.tag = CycleCase::Dom1;
    death = one_source_death(d, cs);
  }
  if (birth >= death) {
    out.tag = CycleCase::Empty;
    return out;
  }
  out.interval = std::make_pair(birth, death);
  return out;
}

std::vector<std::pair<Extended, Extended>> CactusBarcode::intervals() const {
  std::vector<std::pair<Extended, Extended>> out;
  for (const auto& c : cycles)
    if (c.interval) out.push_back(*c.interval);
  std::sort(out.begin(), out.end());
  return out;
}

CactusBarcode cactus_h1_oracle(const Network& g) {
  CactusBarcode out;
  for (const CycleBlock& block : cactus_decompose(g)) out.cycles.push_back(cycle_h1_oracle(block.network));
  return out;
}

PersistenceDiagram to_diagram(const CyclePersistenceResult& r) {
  std::vector<PersistencePair> pairs;
  if (r.interval) pairs.push_back({1, r.interval->first, r.interval->second, false});
  return PersistenceDiagram(std::move(pairs), 1);
}

PersistenceDiagram to_diagram(const CactusBarcode& b) {
  std::vector<PersistencePair> pairs;
  for (const auto& [birth, death] : b.intervals()) pairs.push_back({1, birth, death, false});
  return PersistenceDiagram(std::move(pairs), 1);
}

Network contract_cycle(const Network& g, Vertex v) {
  const CycleStructure cs = classify_cycle(g);
  if (cs.orientation != Orientation::Consistent) fail(Errc::NotACycle, "contraction needs a consistently oriented cycle");
  const std::size_t n = g.size();
  if (n == 3) fail(Errc::TooSmall, "cannot contract a 3-cycle");
  if (v >= n) fail(Errc::InvalidArgument, "vertex " + std::to_string(v) + " out of range");

  const auto& order = cs.order;
  const std::size_t pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
  const Vertex pred = order[(pos + n - 1) % n];
  const Vertex succ = order[(pos + 1) % n];
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.from == v || e.to == v) continue;
    edges.push_back({shift(e.from), shift(e.to), e.weight});
  }
  edges.push_back({shift(pred), shift(succ), g(pred, v) + g(v, succ)});
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) labels.erase(labels.begin() + v);
  return Network::from_edges(n - 1, edges, std::move(labels));
}

bool h1_cycle_support_check(const Network& g, Extended delta) {
  const std::size_t n = g.size();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const Extended w = min(g(x, y), g(y, x));
      if (w.is_infinite() || w > delta) continue;
      const Vertex a = find(x), b = find(y);
      if (a == b) return true;
      parent[a] = b;
    }
  }
  return false;
}

}  // namespace dowker
