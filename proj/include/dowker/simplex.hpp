#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dowker/network.hpp"

namespace dowker {

/// Strictly increasing, non-empty vertex list; dimension = size - 1.
using Simplex = std::vector<Vertex>;

inline std::size_t dimension(std::span<const Vertex> s) noexcept { return s.size() - 1; }

/// Codimension-one faces in the order obtained by dropping vertex 0, 1, ...
std::vector<Simplex> faces(std::span<const Vertex> s);

/// Orders by (dimension, lexicographic vertices).
bool simplex_less(std::span<const Vertex> a, std::span<const Vertex> b) noexcept;

/// A finite, downward-closed set of simplices kept sorted by (dim, lex).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Errc::MissingFaces unless every face of every member is a member.
  /// Duplicates are removed; Errc::InvalidArgument on unsorted or empty simplices.
  explicit SimplicialComplex(std::vector<Simplex> simplices);

  /// Downward closure of the generators, cut at max_dim.
  static SimplicialComplex closure(const std::vector<Simplex>& generators, std::size_t max_dim);

  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  bool contains(std::span<const Vertex> s) const;
  /// -1 for the empty complex.
  long dimension() const noexcept;
  std::size_t count(std::size_t dim) const noexcept;

  SimplicialComplex skeleton(std::size_t max_dim) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Simplex> simplices_;
};

}  // namespace dowker
