#pragma once

#include <cstddef>
#include <vector>

#include "dowker/network.hpp"

namespace dowker {

/// Boolean n x n matrix; rows are witnesses, columns members.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(Vertex row, Vertex col) const noexcept { return bits_[row * n_ + col] != 0; }
  void set(Vertex row, Vertex col, bool value = true) { bits_.at(row * n_ + col) = value ? 1 : 0; }

  Relation transposed() const;
  /// Entrywise containment.
  bool subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_;
  std::vector<unsigned char> bits_;
};

/// R(x, y) = 1 iff w(x, y) is finite and <= delta. No completion is applied.
Relation relation_at(const Network& g, Extended delta);

}  // namespace dowker
