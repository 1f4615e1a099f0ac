#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace dowker {

/// Samples of a d-dimensional time series with strictly increasing times.
class Trajectory {
 public:
  Trajectory() = default;
  /// Errc::InvalidArgument on a shape mismatch, non-increasing times or
  /// non-finite coordinates.
  Trajectory(std::size_t dim, std::vector<double> times, std::vector<double> data);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  double time(std::size_t i) const noexcept { return times_[i]; }
  std::span<const double> point(std::size_t i) const noexcept { return {data_.data() + i * dim_, dim_}; }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& data() const noexcept { return data_; }

  /// Spacing of the first two samples, 0 with fewer than two.
  double dt() const noexcept { return size() > 1 ? times_[1] - times_[0] : 0.0; }
  double duration() const noexcept { return empty() ? 0.0 : times_.back() - times_.front(); }

  /// Samples [begin, end).
  Trajectory slice(std::size_t begin, std::size_t end) const;
  /// Samples with time - time(0) <= duration (up to rounding in the times).
  Trajectory truncated(double duration) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> times_;
  std::vector<double> data_;
};

/// Floor-balanced contiguous split into `parts` disjoint index ranges.
/// Errc::InvalidArgument when parts is 0 or exceeds the sample count.
std::vector<Trajectory> split_segments(const Trajectory& t, std::size_t parts);

/// Gaussian random walk with unit step deviation, `steps` + 1 samples at
/// dt = 1 starting from the origin. Deterministic for a given seed.
Trajectory random_walk(std::size_t steps, std::size_t dim, std::uint64_t seed);

/// Header `t,x0,...,x{d-1}`, one row per sample. Values are written in
/// shortest round-trip form.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);
/// Errc::Parse with a line number on malformed rows.
Trajectory read_trajectory_csv(std::istream& in);

void save_trajectory(const std::filesystem::path& path, const Trajectory& t);
Trajectory load_trajectory(const std::filesystem::path& path);

}  // namespace dowker
