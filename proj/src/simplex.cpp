#include "dowker/simplex.hpp"

#include <algorithm>

#include "dowker/error.hpp"

namespace dowker {

namespace {

void check_simplex(const Simplex& s) {
  if (s.empty()) fail(Errc::InvalidArgument, "empty simplex");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) fail(Errc::InvalidArgument, "simplex vertices must be strictly increasing");
}

void sort_unique(std::vector<Simplex>& v) {
  std::sort(v.begin(), v.end(), [](const Simplex& a, const Simplex& b) { return simplex_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Simplex> faces(std::span<const Vertex> s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  out.reserve(s.size());
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool simplex_less(std::span<const Vertex> a, std::span<const Vertex> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
  for (const Simplex& s : simplices_) check_simplex(s);
  sort_unique(simplices_);
  for (const Simplex& s : simplices_) {
    for (const Simplex& f : faces(s)) {
      if (!contains(f)) fail(Errc::MissingFaces, "a face of a " + std::to_string(s.size() - 1) + "-simplex is missing");
    }
  }
}

SimplicialComplex SimplicialComplex::closure(const std::vector<Simplex>& generators, std::size_t max_dim) {
  std::vector<Simplex> all;
  for (const Simplex& g : generators) {
    check_simplex(g);
    const std::size_t m = g.size();
    // Subsets by increasing size, each built from a sorted index combination.
    for (std::size_t k = 1; k <= std::min(m, max_dim + 1); ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        Simplex s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = g[idx[i]];
        all.push_back(std::move(s));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  SimplicialComplex c;
  sort_unique(all);
  c.simplices_ = std::move(all);
  return c;
}

bool SimplicialComplex::contains(std::span<const Vertex> s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s,
                             [](const Simplex& a, std::span<const Vertex> b) { return simplex_less(a, b); });
  return it != simplices_.end() && std::equal(it->begin(), it->end(), s.begin(), s.end());
}

long SimplicialComplex::dimension() const noexcept {
  return simplices_.empty() ? -1 : static_cast<long>(simplices_.back().size()) - 1;
}

std::size_t SimplicialComplex::count(std::size_t dim) const noexcept {
  return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
                                                [dim](const Simplex& s) { return s.size() == dim + 1; }));
}

SimplicialComplex SimplicialComplex::skeleton(std::size_t max_dim) const {
  SimplicialComplex c;
  for (const Simplex& s : simplices_)
    if (s.size() <= max_dim + 1) c.simplices_.push_back(s);
  return c;
}

}  // namespace dowker
