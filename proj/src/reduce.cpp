#include "dowker/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "dowker/error.hpp"
#include "simplex_index.hpp"

namespace dowker {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};
using Column = std::vector<std::uint32_t>;

// Positions of the codimension-one faces of every simplex up to `top`, in
// drop-vertex order. Throws MissingFaces on a hole.
class FaceTable {
 public:
  FaceTable(const Filtration& f, std::size_t top) {
    for (std::size_t d = 0; d < top; ++d) index_.emplace_back(f, d);
  }

  void faces(const Filtration& f, std::size_t i, Column& out) const {
    out.clear();
    auto s = f.simplex(i);
    if (s.size() < 2) return;
    Simplex face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t j = 0, k = 0; j < s.size(); ++j)
        if (j != drop) face[k++] = s[j];
      const std::uint32_t at = index_[s.size() - 2].find(face);
      if (at == detail::SimplexIndex::npos || at > i) {
        fail(Errc::MissingFaces, "simplex at position " + std::to_string(i) + " has a face that is missing or later");
      }
      out.push_back(at);
    }
  }

 private:
  std::vector<detail::SimplexIndex> index_;
};

void symmetric_difference(Column& acc, std::span<const std::uint32_t> other, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
  acc.swap(scratch);
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  // Filtration position of the oldest vertex of the component rooted here.
  std::vector<std::uint32_t> oldest;

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

Extended essential_death(const Filtration& f) { return f.censored() ? f.cutoff() : Extended::infinity(); }

}  // namespace

PersistenceDiagram reduce(const Filtration& f, std::size_t max_dim) {
  const std::size_t top = max_dim + 1;
  const FaceTable table(f, top);
  const Extended never = essential_death(f);
  std::vector<PersistencePair> pairs;

  // Positions of simplices by dimension, increasing.
  std::vector<std::vector<std::uint32_t>> by_dim(top + 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.dim(i) <= top) by_dim[f.dim(i)].push_back(static_cast<std::uint32_t>(i));

  // Local id of each position inside its dimension.
  std::vector<std::uint32_t> local(f.size(), kNone);
  for (const auto& list : by_dim)
    for (std::size_t j = 0; j < list.size(); ++j) local[list[j]] = static_cast<std::uint32_t>(j);

  Column scratch, faces;

  // Dimension 0.
  std::vector<char> cleared(by_dim.size() > 1 ? by_dim[1].size() : 0, 0);
  {
    const auto& verts = by_dim[0];
    UnionFind uf;
    uf.parent.resize(verts.size());
    std::iota(uf.parent.begin(), uf.parent.end(), 0u);
    uf.oldest = verts;
    if (top >= 1) {
      for (std::uint32_t e : by_dim[1]) {
        table.faces(f, e, faces);
        std::uint32_t a = uf.find(local[faces[0]]), b = uf.find(local[faces[1]]);
        if (a == b) continue;
        if (uf.oldest[a] > uf.oldest[b]) std::swap(a, b);
        // b is younger and dies here.
        pairs.push_back({0, f.value(uf.oldest[b]), f.value(e), false});
        uf.parent[b] = a;
        cleared[local[e]] = 1;
      }
    }
    for (std::uint32_t v = 0; v < verts.size(); ++v) {
      if (uf.find(v) == v) pairs.push_back({0, f.value(uf.oldest[v]), never, f.censored()});
    }
  }

  for (std::size_t k = 1; k <= max_dim; ++k) {
    const auto& cols = by_dim[k];
    const auto& rows = by_dim[k + 1];

    // Coboundaries in CSR form, entries are local row ids in increasing order.
    std::vector<std::uint32_t> start(cols.size() + 1, 0);
    for (std::uint32_t r : rows) {
      table.faces(f, r, faces);
      for (std::uint32_t c : faces) ++start[local[c] + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::uint32_t> entries(start.back());
    {
      std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
      for (std::uint32_t j = 0; j < rows.size(); ++j) {
        table.faces(f, rows[j], faces);
        for (std::uint32_t c : faces) entries[fill[local[c]]++] = j;
      }
    }
    auto coboundary = [&](std::uint32_t c) {
      return std::span<const std::uint32_t>(entries.data() + start[c], start[c + 1] - start[c]);
    };

    std::vector<std::uint32_t> owner(rows.size(), kNone);
    // Reduced columns that differ from their coboundary; empty = unchanged.
    std::vector<Column> reduced(cols.size());
    std::vector<char> next_cleared(rows.size(), 0);
    Column col;
    for (std::size_t c = cols.size(); c-- > 0;) {
      if (cleared[c]) continue;
      auto cob = coboundary(static_cast<std::uint32_t>(c));
      col.assign(cob.begin(), cob.end());
      bool modified = false;
      while (!col.empty()) {
        const std::uint32_t o = owner[col.front()];
        if (o == kNone) break;
        const Column& other = reduced[o];
        if (other.empty()) {
          symmetric_difference(col, coboundary(o), scratch);
        } else {
          symmetric_difference(col, other, scratch);
        }
        modified = true;
      }
      const Extended birth = f.value(cols[c]);
      if (col.empty()) {
        pairs.push_back({k, birth, never, f.censored()});
        continue;
      }
      const std::uint32_t pivot = col.front();
      owner[pivot] = static_cast<std::uint32_t>(c);
      if (modified) reduced[c] = std::move(col);
      col = Column();
      next_cleared[pivot] = 1;
      pairs.push_back({k, birth, f.value(rows[pivot]), false});
    }
    cleared = std::move(next_cleared);
  }
  return PersistenceDiagram(std::move(pairs), max_dim, f.cutoff(), f.censored());
}

PersistenceDiagram reduce_homology(const Filtration& f, std::size_t max_dim) {
  const std::size_t top = max_dim + 1;
  const FaceTable table(f, top);
  const Extended never = essential_death(f);

  std::vector<std::uint32_t> used;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.dim(i) <= top) used.push_back(static_cast<std::uint32_t>(i));

  std::vector<Column> columns(used.size());
  std::vector<std::uint32_t> pos(f.size(), kNone);
  for (std::size_t j = 0; j < used.size(); ++j) pos[used[j]] = static_cast<std::uint32_t>(j);
  Column faces, scratch;
  for (std::size_t j = 0; j < used.size(); ++j) {
    table.faces(f, used[j], faces);
    for (std::uint32_t x : faces) columns[j].push_back(pos[x]);
    std::sort(columns[j].begin(), columns[j].end());
  }

  std::vector<std::uint32_t> low_owner(used.size(), kNone);
  std::vector<char> paired(used.size(), 0);
  std::vector<PersistencePair> pairs;
  for (std::size_t j = 0; j < used.size(); ++j) {
    Column& col = columns[j];
    while (!col.empty() && low_owner[col.back()] != kNone) symmetric_difference(col, columns[low_owner[col.back()]], scratch);
    if (col.empty()) continue;
    const std::uint32_t low = col.back();
    low_owner[low] = static_cast<std::uint32_t>(j);
    paired[low] = paired[j] = 1;
    const std::size_t d = f.dim(used[low]);
    if (d <= max_dim) pairs.push_back({d, f.value(used[low]), f.value(used[j]), false});
  }
  for (std::size_t j = 0; j < used.size(); ++j) {
    const std::size_t d = f.dim(used[j]);
    if (!paired[j] && d <= max_dim) pairs.push_back({d, f.value(used[j]), never, f.censored()});
  }
  return PersistenceDiagram(std::move(pairs), max_dim, f.cutoff(), f.censored());
}

}  // namespace dowker
