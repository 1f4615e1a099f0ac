#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dowker/simplex.hpp"

namespace dowker {

/// Simplices of one dimension with their values, vertices packed back to back.
struct SimplexBatch {
  std::size_t dim = 0;
  std::vector<Vertex> vertices;
  std::vector<Extended> values;

  std::size_t size() const noexcept { return values.size(); }
  std::span<const Vertex> simplex(std::size_t i) const noexcept {
    return {vertices.data() + i * (dim + 1), dim + 1};
  }
};

/// Simplices with appearance values, sorted by (value, dim, lex). Storage is
/// flat: one vertex buffer plus offsets, so Lorenz-sized filtrations with
/// tens of millions of triangles stay compact.
class Filtration {
 public:
  Filtration() = default;

  /// Sorts the entries. Errc::InvalidArgument on duplicates or malformed
  /// simplices. Face closure is not checked here; see validate().
  static Filtration from_entries(std::vector<std::pair<Simplex, Extended>> entries,
                                 Extended cutoff = Extended::infinity(), bool censored = false);
  static Filtration from_batches(std::vector<SimplexBatch> batches, Extended cutoff = Extended::infinity(),
                                 bool censored = false);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const Vertex> simplex(std::size_t i) const noexcept {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t dim(std::size_t i) const noexcept { return offsets_[i + 1] - offsets_[i] - 1; }
  Extended value(std::size_t i) const noexcept { return values_[i]; }
  /// Number of simplices of each dimension.
  std::vector<std::size_t> counts() const;
  /// -1 when empty.
  long max_dim() const noexcept;
  /// One more than the largest vertex id.
  std::size_t vertex_count() const noexcept;

  /// Values above the cutoff were omitted during construction; when censored,
  /// classes still alive at the cutoff are reported with death = cutoff.
  Extended cutoff() const noexcept { return cutoff_; }
  bool censored() const noexcept { return censored_; }
  /// Warning flag: the cutoff is below the largest edge weight of the source
  /// network, so even the 1-skeleton is incomplete.
  bool cutoff_too_low() const noexcept { return cutoff_too_low_; }
  void set_cutoff_too_low(bool flag) noexcept { cutoff_too_low_ = flag; }

  /// Errc::MissingFaces when some face is absent or appears later than the
  /// simplex. Errc::InvalidArgument on duplicates or a broken sort order.
  void validate() const;

  /// Simplices with value <= delta.
  SimplicialComplex complex_at(Extended delta) const;

  std::vector<std::pair<Simplex, Extended>> entries() const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Extended> values_;
  Extended cutoff_ = Extended::infinity();
  bool censored_ = false;
  bool cutoff_too_low_ = false;
};

/// Every simplex of `c` at value zero.
Filtration static_filtration(const SimplicialComplex& c);

}  // namespace dowker
