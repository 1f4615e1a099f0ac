#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dowker/network.hpp"
#include "dowker/structure.hpp"
#include "dowker/trajectory.hpp"

namespace dowker {

/// A regular grid with b bins per dimension over a box. A point's bin along
/// each axis is floor((x - lo) / width), clamped into [0, b).
class BinningGrid {
 public:
  /// Errc::InvalidArgument unless lower < upper on every axis and bins >= 1.
  BinningGrid(std::vector<double> lower, std::vector<double> upper, std::size_t bins);

  /// Bounding box of the samples, widened by `pad` of the extent on each
  /// side. Flat axes are widened to +-0.5 around their value.
  static BinningGrid bounding(std::span<const Trajectory> ts, std::size_t bins, double pad = 0.01);
  static BinningGrid bounding(const Trajectory& t, std::size_t bins, double pad = 0.01);

  std::size_t dim() const noexcept { return lower_.size(); }
  std::size_t bins() const noexcept { return bins_; }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }

  std::vector<std::size_t> bin_of(std::span<const double> point) const;

 private:
  std::vector<double> lower_, upper_;
  std::size_t bins_;
};

/// "i:j:k" style label of a bin.
std::string bin_label(std::span<const std::size_t> bin);
/// Inverse of bin_label; Errc::Parse on malformed text.
std::vector<std::size_t> parse_bin_label(const std::string& label);

/// Coarse-grained state-space network: vertices are occupied bins in order of
/// first visit, labelled by bin_label; an edge A -> B records consecutive
/// samples crossing from A to B, weighted per `mode` by the crossing count.
/// Errc::EmptyTrajectory for an empty trajectory.
Network bin_trajectory(const Trajectory& t, const BinningGrid& grid, WeightMode mode = WeightMode::Unit);

/// Union over several trajectories on one grid; crossing counts add up.
/// Errc::EmptyTrajectory when there is no sample at all.
Network bin_multi(std::span<const Trajectory> ts, const BinningGrid& grid, WeightMode mode = WeightMode::Unit);

/// Occupied-bin partition of the samples of t, cells in order of first visit.
Partition bin_partition(const Trajectory& t, const BinningGrid& grid);

}  // namespace dowker
