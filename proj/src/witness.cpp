#include "dowker/witness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <tuple>
#include <utility>

#include "dowker/error.hpp"

#ifdef DOWKER_HAVE_OPENMP
#include <omp.h>
#endif

namespace dowker::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int thread_count() {
#ifdef DOWKER_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_id() {
#ifdef DOWKER_HAVE_OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Accumulates (simplex, value) candidates and keeps the minimum value per
// simplex. Vertex tuples are packed into one 64-bit key when they fit.
class Collector {
 public:
  Collector(std::size_t n, std::size_t dim)
      : dim_(dim), bits_(std::max<int>(1, std::bit_width(n > 0 ? n - 1 : 0))),
        packed_(static_cast<std::size_t>(bits_) * (dim + 1) <= 64) {}

  void add(std::span<const Vertex> s, double value) {
    if (packed_) {
      std::uint64_t key = 0;
      for (Vertex v : s) key = (key << bits_) | v;
      keyed_.emplace_back(key, value);
    } else {
      raw_.insert(raw_.end(), s.begin(), s.end());
      raw_values_.push_back(value);
    }
  }

  void append(Collector& other) {
    keyed_.insert(keyed_.end(), other.keyed_.begin(), other.keyed_.end());
    raw_.insert(raw_.end(), other.raw_.begin(), other.raw_.end());
    raw_values_.insert(raw_values_.end(), other.raw_values_.begin(), other.raw_values_.end());
    other = Collector(0, dim_);
  }

  SimplexBatch finish() {
    SimplexBatch out;
    out.dim = dim_;
    const std::size_t k = dim_ + 1;
    if (packed_) {
      std::sort(keyed_.begin(), keyed_.end());
      const std::uint64_t mask = bits_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
      for (std::size_t i = 0; i < keyed_.size(); ++i) {
        if (i > 0 && keyed_[i].first == keyed_[i - 1].first) continue;
        const std::size_t base = out.vertices.size();
        out.vertices.resize(base + k);
        std::uint64_t key = keyed_[i].first;
        for (std::size_t j = k; j-- > 0;) {
          out.vertices[base + j] = static_cast<Vertex>(key & mask);
          key = bits_ >= 64 ? 0 : key >> bits_;
        }
        out.values.emplace_back(keyed_[i].second);
      }
      keyed_.clear();
      keyed_.shrink_to_fit();
      return out;
    }
    const std::size_t count = raw_values_.size();
    std::vector<std::size_t> perm(count);
    for (std::size_t i = 0; i < count; ++i) perm[i] = i;
    auto at = [&](std::size_t i) { return std::span<const Vertex>(raw_.data() + i * k, k); };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      auto sa = at(a), sb = at(b);
      if (!std::equal(sa.begin(), sa.end(), sb.begin())) {
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
      }
      return raw_values_[a] < raw_values_[b];
    });
    for (std::size_t i = 0; i < count; ++i) {
      auto s = at(perm[i]);
      if (i > 0) {
        auto prev = at(perm[i - 1]);
        if (std::equal(s.begin(), s.end(), prev.begin())) continue;
      }
      out.vertices.insert(out.vertices.end(), s.begin(), s.end());
      out.values.emplace_back(raw_values_[perm[i]]);
    }
    raw_.clear();
    raw_values_.clear();
    return out;
  }

 private:
  std::size_t dim_;
  int bits_;
  bool packed_;
  std::vector<std::pair<std::uint64_t, double>> keyed_;
  std::vector<Vertex> raw_;
  std::vector<double> raw_values_;
};

// Calls f(idx) for every strictly increasing k-tuple of indices into [0, m).
template <class F>
void for_each_combination(std::size_t m, std::size_t k, F&& f) {
  if (k == 0 || k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_shape(std::size_t n, std::span<const Extended> d) {
  if (d.size() != n * n) fail(Errc::InvalidArgument, "distance matrix has the wrong size");
}

void witness_row(std::size_t n, std::span<const Extended> d, std::size_t dim, double cutoff, Vertex w,
                 Collector& out) {
  const Extended* row = d.data() + static_cast<std::size_t>(w) * n;
  std::vector<Vertex> nbrs;
  for (Vertex x = 0; x < n; ++x)
    if (row[x].is_finite() && row[x].value() <= cutoff) nbrs.push_back(x);
  std::vector<Vertex> s(dim + 1);
  for_each_combination(nbrs.size(), dim + 1, [&](std::span<const std::size_t> idx) {
    double value = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      s[i] = nbrs[idx[i]];
      value = std::max(value, row[s[i]].value());
    }
    out.add(s, value);
  });
}

// Undominated change points of every row, in increasing order.
std::vector<std::vector<double>> undominated_change_points(std::size_t n, std::span<const Extended> d,
                                                           double cutoff, bool parallel) {
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  auto set_bit = [&](std::size_t w, std::size_t x) { bits[w * words + x / 64] |= std::uint64_t{1} << (x % 64); };
  for (std::size_t w = 0; w < n; ++w) set_bit(w, w);

  std::vector<std::tuple<double, Vertex, Vertex>> events;
  for (Vertex w = 0; w < n; ++w)
    for (Vertex x = 0; x < n; ++x) {
      const double v = d[static_cast<std::size_t>(w) * n + x].value();
      if (x != w && v < kInf && v <= cutoff) events.emplace_back(v, w, x);
    }
  std::sort(events.begin(), events.end());

  auto dominated = [&](std::size_t w) {
    const std::uint64_t* a = bits.data() + w * words;
    for (std::size_t o = 0; o < n; ++o) {
      if (o == w) continue;
      const std::uint64_t* b = bits.data() + o * words;
      bool subset = true, equal = true;
      for (std::size_t i = 0; i < words && subset; ++i) {
        if (a[i] & ~b[i]) subset = false;
        if (a[i] != b[i]) equal = false;
      }
      if (subset && (!equal || o < w)) return true;
    }
    return false;
  };

  std::vector<std::vector<double>> points(n);
  std::vector<Vertex> changed;
  std::vector<char> flag;
  for (std::size_t lo = 0; lo < events.size();) {
    const double t = std::get<0>(events[lo]);
    std::size_t hi = lo;
    changed.clear();
    while (hi < events.size() && std::get<0>(events[hi]) == t) {
      const auto [v, w, x] = events[hi];
      set_bit(w, x);
      changed.push_back(w);
      ++hi;
    }
    changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
    flag.assign(changed.size(), 0);
    const auto count = static_cast<std::ptrdiff_t>(changed.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel && count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) flag[static_cast<std::size_t>(i)] = dominated(changed[static_cast<std::size_t>(i)]) ? 0 : 1;
    for (std::size_t i = 0; i < changed.size(); ++i)
      if (flag[i]) points[changed[i]].push_back(t);
    lo = hi;
  }
  return points;
}

void cone_row(std::size_t n, std::span<const Extended> d, std::size_t dim, const std::vector<double>& points,
              Vertex w, Collector& out) {
  if (points.empty() || dim == 0) return;
  const Extended* row = d.data() + static_cast<std::size_t>(w) * n;
  const double last = points.back();
  std::vector<Vertex> nbrs;
  for (Vertex x = 0; x < n; ++x)
    if (x != w && row[x].value() <= last) nbrs.push_back(x);
  std::vector<Vertex> s(dim + 1);
  for_each_combination(nbrs.size(), dim, [&](std::span<const std::size_t> idx) {
    double reach = 0.0;
    std::size_t j = 0;
    bool placed = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Vertex x = nbrs[idx[i]];
      reach = std::max(reach, row[x].value());
      if (!placed && w < x) {
        s[j++] = w;
        placed = true;
      }
      s[j++] = x;
    }
    if (!placed) s[j] = w;
    out.add(s, *std::lower_bound(points.begin(), points.end(), reach));
  });
}

SimplexBatch edge_values(std::size_t n, std::span<const Extended> d, Extended cutoff, bool parallel) {
  check_shape(n, d);
  std::vector<double> cols(n * n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x) cols[x * n + w] = d[w * n + x].value();
  const double limit = cutoff.value();

  std::vector<std::vector<std::pair<Vertex, double>>> found(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::ptrdiff_t ai = 0; ai < static_cast<std::ptrdiff_t>(n); ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    const double* ca = cols.data() + a * n;
    for (std::size_t b = a + 1; b < n; ++b) {
      const double* cb = cols.data() + b * n;
      double best = kInf;
      for (std::size_t w = 0; w < n; ++w) best = std::min(best, std::max(ca[w], cb[w]));
      if (best < kInf && best <= limit) found[a].emplace_back(static_cast<Vertex>(b), best);
    }
  }

  SimplexBatch out;
  out.dim = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [b, v] : found[a]) {
      out.vertices.push_back(static_cast<Vertex>(a));
      out.vertices.push_back(b);
      out.values.emplace_back(v);
    }
  }
  return out;
}

}  // namespace

SimplexBatch witness_simplices_serial(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff) {
  check_shape(n, d);
  Collector out(n, dim);
  for (Vertex w = 0; w < n; ++w) witness_row(n, d, dim, cutoff.value(), w, out);
  return out.finish();
}

SimplexBatch witness_simplices_parallel(std::size_t n, std::span<const Extended> d, std::size_t dim,
                                        Extended cutoff) {
  check_shape(n, d);
  std::vector<Collector> local(static_cast<std::size_t>(thread_count()), Collector(n, dim));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(n); ++w) {
    witness_row(n, d, dim, cutoff.value(), static_cast<Vertex>(w), local[static_cast<std::size_t>(thread_id())]);
  }
  for (std::size_t t = 1; t < local.size(); ++t) local[0].append(local[t]);
  return local[0].finish();
}

SimplexBatch edge_values_serial(std::size_t n, std::span<const Extended> d, Extended cutoff) {
  return edge_values(n, d, cutoff, false);
}

SimplexBatch edge_values_parallel(std::size_t n, std::span<const Extended> d, Extended cutoff) {
  return edge_values(n, d, cutoff, true);
}

SimplexBatch cone_simplices_serial(std::size_t n, std::span<const Extended> d, std::size_t dim, Extended cutoff) {
  check_shape(n, d);
  const auto points = undominated_change_points(n, d, cutoff.value(), false);
  Collector out(n, dim);
  for (Vertex w = 0; w < n; ++w) cone_row(n, d, dim, points[w], w, out);
  return out.finish();
}

SimplexBatch cone_simplices_parallel(std::size_t n, std::span<const Extended> d, std::size_t dim,
                                     Extended cutoff) {
  check_shape(n, d);
  const auto points = undominated_change_points(n, d, cutoff.value(), true);
  std::vector<Collector> local(static_cast<std::size_t>(thread_count()), Collector(n, dim));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(n); ++w) {
    cone_row(n, d, dim, points[static_cast<std::size_t>(w)], static_cast<Vertex>(w),
             local[static_cast<std::size_t>(thread_id())]);
  }
  for (std::size_t t = 1; t < local.size(); ++t) local[0].append(local[t]);
  return local[0].finish();
}

}  // namespace dowker::kernels
