#include "dowker/filtration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dowker/error.hpp"
#include "simplex_index.hpp"

namespace dowker {

Filtration Filtration::from_batches(std::vector<SimplexBatch> batches, Extended cutoff, bool censored) {
  std::size_t total = 0, total_vertices = 0;
  for (const SimplexBatch& b : batches) {
    if (b.vertices.size() != b.size() * (b.dim + 1)) fail(Errc::InvalidArgument, "malformed simplex batch");
    total += b.size();
    total_vertices += b.vertices.size();
  }
  if (total_vertices > std::numeric_limits<std::uint32_t>::max() ||
      total >= std::numeric_limits<std::uint32_t>::max()) {
    fail(Errc::InvalidArgument, "filtration too large for 32-bit offsets");
  }

  // Flatten in batch order, then sort a permutation.
  std::vector<Vertex> flat;
  std::vector<std::uint32_t> start;
  std::vector<Extended> vals;
  flat.reserve(total_vertices);
  start.reserve(total + 1);
  vals.reserve(total);
  for (SimplexBatch& b : batches) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto s = b.simplex(i);
      for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j - 1] >= s[j]) fail(Errc::InvalidArgument, "simplex vertices must be strictly increasing");
      start.push_back(static_cast<std::uint32_t>(flat.size()));
      flat.insert(flat.end(), s.begin(), s.end());
      vals.push_back(b.values[i]);
    }
    b = SimplexBatch{};
  }
  start.push_back(static_cast<std::uint32_t>(flat.size()));

  std::vector<std::uint32_t> perm(total);
  std::iota(perm.begin(), perm.end(), 0u);
  auto span_of = [&](std::uint32_t i) { return std::span<const Vertex>(flat.data() + start[i], start[i + 1] - start[i]); };
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (vals[a] != vals[b]) return vals[a] < vals[b];
    return simplex_less(span_of(a), span_of(b));
  });

  Filtration f;
  f.vertices_.reserve(total_vertices);
  f.offsets_.reserve(total + 1);
  f.values_.reserve(total);
  for (std::uint32_t p : perm) {
    auto s = span_of(p);
    f.vertices_.insert(f.vertices_.end(), s.begin(), s.end());
    f.offsets_.push_back(static_cast<std::uint32_t>(f.vertices_.size()));
    f.values_.push_back(vals[p]);
  }
  f.cutoff_ = cutoff;
  f.censored_ = censored;
  return f;
}

Filtration Filtration::from_entries(std::vector<std::pair<Simplex, Extended>> entries, Extended cutoff, bool censored) {
  std::vector<SimplexBatch> batches;
  for (auto& [s, v] : entries) {
    if (s.empty()) fail(Errc::InvalidArgument, "empty simplex");
    const std::size_t d = s.size() - 1;
    if (batches.size() <= d) {
      const std::size_t old = batches.size();
      batches.resize(d + 1);
      for (std::size_t k = old; k <= d; ++k) batches[k].dim = k;
    }
    batches[d].vertices.insert(batches[d].vertices.end(), s.begin(), s.end());
    batches[d].values.push_back(v);
  }
  Filtration f = from_batches(std::move(batches), cutoff, censored);
  for (std::size_t i = 1; i < f.size(); ++i) {
    auto a = f.simplex(i - 1), b = f.simplex(i);
    if (std::equal(a.begin(), a.end(), b.begin(), b.end())) fail(Errc::InvalidArgument, "duplicate simplex");
  }
  for (long d = 0; d <= f.max_dim(); ++d) {
    if (detail::SimplexIndex(f, static_cast<std::size_t>(d)).has_duplicate()) {
      fail(Errc::InvalidArgument, "duplicate simplex");
    }
  }
  return f;
}

std::vector<std::size_t> Filtration::counts() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const std::size_t d = dim(i);
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

long Filtration::max_dim() const noexcept {
  long best = -1;
  for (std::size_t i = 0; i < size(); ++i) best = std::max(best, static_cast<long>(dim(i)));
  return best;
}

std::size_t Filtration::vertex_count() const noexcept {
  Vertex best = 0;
  for (Vertex v : vertices_) best = std::max(best, v);
  return vertices_.empty() ? 0 : static_cast<std::size_t>(best) + 1;
}

void Filtration::validate() const {
  for (std::size_t i = 1; i < size(); ++i) {
    const bool ordered = values_[i - 1] < values_[i] ||
                         (values_[i - 1] == values_[i] && simplex_less(simplex(i - 1), simplex(i)));
    if (!ordered) fail(Errc::InvalidArgument, "filtration is not sorted by (value, dim, lex) at entry " + std::to_string(i));
  }
  const long top = max_dim();
  std::vector<detail::SimplexIndex> index;
  for (long d = 0; d <= top; ++d) {
    index.emplace_back(*this, static_cast<std::size_t>(d));
    if (index.back().has_duplicate()) fail(Errc::InvalidArgument, "duplicate simplex");
  }
  Simplex face;
  for (std::size_t i = 0; i < size(); ++i) {
    auto s = simplex(i);
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      const std::uint32_t at = index[s.size() - 2].find(face);
      if (at == detail::SimplexIndex::npos || at > i) {
        fail(Errc::MissingFaces, "simplex at position " + std::to_string(i) + " has a face that is missing or later");
      }
    }
  }
}

SimplicialComplex Filtration::complex_at(Extended delta) const {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < size() && values_[i] <= delta; ++i) {
    auto s = simplex(i);
    out.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex(std::move(out));
}

std::vector<std::pair<Simplex, Extended>> Filtration::entries() const {
  std::vector<std::pair<Simplex, Extended>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto s = simplex(i);
    out.emplace_back(Simplex(s.begin(), s.end()), values_[i]);
  }
  return out;
}

Filtration static_filtration(const SimplicialComplex& c) {
  std::vector<std::pair<Simplex, Extended>> entries;
  entries.reserve(c.size());
  for (const Simplex& s : c.simplices()) entries.emplace_back(s, Extended::zero());
  return Filtration::from_entries(std::move(entries));
}

}  // namespace dowker
