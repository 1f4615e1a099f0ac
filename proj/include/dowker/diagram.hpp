#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker {

struct PersistencePair {
  std::size_t dim = 0;
  Extended birth;
  /// Infinite for essential classes of an uncensored filtration; equal to the
  /// cutoff (with censored set) when the class was still alive there.
  Extended death = Extended::infinity();
  bool censored = false;

  Extended length() const noexcept { return distance(death, birth); }
  bool zero_length() const noexcept { return birth == death; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair& a, const PersistencePair& b) noexcept {
    if (auto c = a.dim <=> b.dim; c != 0) return std::partial_ordering(c);
    if (auto c = a.birth <=> b.birth; c != 0) return c;
    if (auto c = a.death <=> b.death; c != 0) return c;
    return std::partial_ordering(a.censored <=> b.censored);
  }
};

class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  PersistenceDiagram(std::vector<PersistencePair> pairs, std::size_t max_dim,
                     Extended cutoff = Extended::infinity(), bool censored = false);

  /// Every pair produced by the reduction, zero-length ones included, sorted.
  const std::vector<PersistencePair>& raw() const noexcept { return pairs_; }
  /// Pairs with birth < death, sorted by (dim, birth, death).
  std::vector<PersistencePair> reported() const;
  /// Reported pairs of one dimension.
  std::vector<PersistencePair> in_dim(std::size_t dim) const;
  /// Reported (birth, death) intervals of one dimension, sorted.
  std::vector<std::pair<Extended, Extended>> intervals(std::size_t dim) const;

  std::size_t max_dim() const noexcept { return max_dim_; }
  Extended cutoff() const noexcept { return cutoff_; }
  bool censored() const noexcept { return censored_; }

  /// Same reported pairs and dimension range; cutoff bookkeeping ignored.
  bool same_pairs(const PersistenceDiagram& other) const { return reported() == other.reported(); }

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::vector<PersistencePair> pairs_;
  std::size_t max_dim_ = 0;
  Extended cutoff_ = Extended::infinity();
  bool censored_ = false;
};

/// Right-censors a diagram at `cutoff`: pairs born at or after it are dropped,
/// deaths beyond it become (cutoff, censored).
PersistenceDiagram censor_at(const PersistenceDiagram& d, Extended cutoff);

}  // namespace dowker
