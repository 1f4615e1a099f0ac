#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "dowker/filtration.hpp"

namespace dowker::detail {

inline std::uint64_t hash_simplex(std::span<const Vertex> s) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

// Open-addressing map from the vertex list of a dim-k simplex to its position
// in a filtration. Stores only 32-bit positions; keys are read back from the
// filtration itself.
class SimplexIndex {
 public:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  SimplexIndex(const Filtration& f, std::size_t dim) : f_(&f) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.dim(i) == dim) ++count;
    std::size_t cap = 16;
    while (cap < 2 * count) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, npos);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.dim(i) != dim) continue;
      if (!insert(static_cast<std::uint32_t>(i))) duplicate_ = true;
    }
  }

  bool has_duplicate() const noexcept { return duplicate_; }

  std::uint32_t find(std::span<const Vertex> s) const noexcept {
    for (std::size_t slot = hash_simplex(s) & mask_;; slot = (slot + 1) & mask_) {
      const std::uint32_t at = slots_[slot];
      if (at == npos) return npos;
      auto t = f_->simplex(at);
      if (std::equal(t.begin(), t.end(), s.begin(), s.end())) return at;
    }
  }

 private:
  bool insert(std::uint32_t pos) {
    auto s = f_->simplex(pos);
    for (std::size_t slot = hash_simplex(s) & mask_;; slot = (slot + 1) & mask_) {
      const std::uint32_t at = slots_[slot];
      if (at == npos) {
        slots_[slot] = pos;
        return true;
      }
      auto t = f_->simplex(at);
      if (std::equal(t.begin(), t.end(), s.begin(), s.end())) return false;
    }
  }

  const Filtration* f_;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> slots_;
  bool duplicate_ = false;
};

}  // namespace dowker::detail
