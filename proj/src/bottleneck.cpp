#include "dowker/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "dowker/error.hpp"

namespace dowker {

namespace {

struct Point {
  double birth;
  double death;
};

// Hopcroft-Karp on a dense bipartite graph given by an adjacency predicate.
class Matcher {
 public:
  explicit Matcher(std::size_t n) : n_(n), adj_(n) {}

  void add(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  std::size_t maximum() {
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u)
        if (match_left_[u] == kFree && dfs(u)) ++size;
    }
    return size;
  }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    dist_.assign(n_, kFree);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kFree) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kFree;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
};

double linf(const Point& p, const Point& q) { return std::max(std::fabs(p.birth - q.birth), std::fabs(p.death - q.death)); }
double half(const Point& p) { return (p.death - p.birth) / 2.0; }

// Perfect matching test at threshold t: left = A plus diagonal copies of B,
// right = B plus diagonal copies of A. Diagonal-to-diagonal edges are free.
bool feasible(const std::vector<Point>& a, const std::vector<Point>& b, double t) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  Matcher m(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j)
      if (linf(a[i], b[j]) <= t) m.add(i, j);
    if (half(a[i]) <= t) m.add(i, nb + i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (half(b[j]) <= t) m.add(na + j, j);
    for (std::size_t i = 0; i < na; ++i) m.add(na + j, nb + i);
  }
  return m.maximum() == n;
}

}  // namespace

Extended bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, std::size_t dim) {
  const auto pa = a.in_dim(dim), pb = b.in_dim(dim);
  const bool any_censored =
      std::any_of(pa.begin(), pa.end(), [](const auto& p) { return p.censored; }) ||
      std::any_of(pb.begin(), pb.end(), [](const auto& p) { return p.censored; });
  if (any_censored && a.cutoff() != b.cutoff()) {
    fail(Errc::InvalidArgument, "diagrams censored at different cutoffs (" + a.cutoff().to_string() + " vs " +
                                    b.cutoff().to_string() + ")");
  }

  std::vector<Point> fa, fb;
  std::vector<double> ia, ib;
  for (const auto& p : pa) {
    if (p.death.is_infinite()) ia.push_back(p.birth.value());
    else fa.push_back({p.birth.value(), p.death.value()});
  }
  for (const auto& p : pb) {
    if (p.death.is_infinite()) ib.push_back(p.birth.value());
    else fb.push_back({p.birth.value(), p.death.value()});
  }
  if (ia.size() != ib.size()) return Extended::infinity();
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  double essential = 0.0;
  for (std::size_t i = 0; i < ia.size(); ++i) essential = std::max(essential, std::fabs(ia[i] - ib[i]));

  std::vector<double> candidates{0.0};
  for (const Point& p : fa) candidates.push_back(half(p));
  for (const Point& q : fb) candidates.push_back(half(q));
  for (const Point& p : fa)
    for (const Point& q : fb) candidates.push_back(linf(p, q));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (feasible(fa, fb, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return Extended(std::max(essential, candidates[lo]));
}

}  // namespace dowker
