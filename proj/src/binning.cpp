#include "dowker/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "dowker/error.hpp"

namespace dowker {

BinningGrid::BinningGrid(std::vector<double> lower, std::vector<double> upper, std::size_t bins)
    : lower_(std::move(lower)), upper_(std::move(upper)), bins_(bins) {
  if (bins_ == 0) fail(Errc::InvalidArgument, "need at least one bin per dimension");
  if (lower_.empty() || lower_.size() != upper_.size()) fail(Errc::InvalidArgument, "grid bounds have mismatched dimensions");
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    if (!(lower_[k] < upper_[k]) || !std::isfinite(lower_[k]) || !std::isfinite(upper_[k])) {
      fail(Errc::InvalidArgument, "grid axis " + std::to_string(k) + " needs finite lower < upper");
    }
  }
}

BinningGrid BinningGrid::bounding(std::span<const Trajectory> ts, std::size_t bins, double pad) {
  std::size_t dim = 0;
  for (const Trajectory& t : ts) {
    if (t.empty()) continue;
    if (dim != 0 && t.dim() != dim) fail(Errc::InvalidArgument, "trajectories have different dimensions");
    dim = t.dim();
  }
  if (dim == 0) fail(Errc::EmptyTrajectory, "no samples to bound");
  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const Trajectory& t : ts) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto p = t.point(i);
      for (std::size_t k = 0; k < dim; ++k) {
        lo[k] = std::min(lo[k], p[k]);
        hi[k] = std::max(hi[k], p[k]);
      }
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    const double extent = hi[k] - lo[k];
    if (extent > 0.0) {
      lo[k] -= pad * extent;
      hi[k] += pad * extent;
    } else {
      lo[k] -= 0.5;
      hi[k] += 0.5;
    }
  }
  return BinningGrid(std::move(lo), std::move(hi), bins);
}

BinningGrid BinningGrid::bounding(const Trajectory& t, std::size_t bins, double pad) {
  return bounding(std::span<const Trajectory>(&t, 1), bins, pad);
}

std::vector<std::size_t> BinningGrid::bin_of(std::span<const double> point) const {
  if (point.size() != dim()) fail(Errc::InvalidArgument, "point dimension does not match the grid");
  std::vector<std::size_t> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const double width = (upper_[k] - lower_[k]) / static_cast<double>(bins_);
    const double raw = std::floor((point[k] - lower_[k]) / width);
    out[k] = raw < 0.0 ? 0 : std::min(bins_ - 1, static_cast<std::size_t>(raw));
  }
  return out;
}

std::string bin_label(std::span<const std::size_t> bin) {
  std::string out;
  for (std::size_t k = 0; k < bin.size(); ++k) {
    if (k) out += ':';
    out += std::to_string(bin[k]);
  }
  return out;
}

std::vector<std::size_t> parse_bin_label(const std::string& label) {
  std::vector<std::size_t> out;
  std::istringstream in(label);
  std::string part;
  while (std::getline(in, part, ':')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      fail(Errc::Parse, "bad bin label '" + label + "'");
    }
    out.push_back(std::stoul(part));
  }
  if (out.empty()) fail(Errc::Parse, "bad bin label '" + label + "'");
  return out;
}

namespace {

struct Binner {
  const BinningGrid& grid;
  std::map<std::vector<std::size_t>, Vertex> ids;
  std::vector<std::string> labels;
  std::map<std::pair<Vertex, Vertex>, std::size_t> crossings;

  Vertex visit(std::span<const double> p) {
    auto bin = grid.bin_of(p);
    auto [it, inserted] = ids.emplace(bin, static_cast<Vertex>(ids.size()));
    if (inserted) labels.push_back(bin_label(bin));
    return it->second;
  }

  void add(const Trajectory& t) {
    if (t.empty()) return;
    if (t.dim() != grid.dim()) fail(Errc::InvalidArgument, "trajectory dimension does not match the grid");
    Vertex prev = visit(t.point(0));
    for (std::size_t i = 1; i < t.size(); ++i) {
      const Vertex cur = visit(t.point(i));
      if (cur != prev) ++crossings[{prev, cur}];
      prev = cur;
    }
  }

  Network network(WeightMode mode) const {
    std::vector<Edge> edges;
    for (const auto& [key, count] : crossings) edges.push_back({key.first, key.second, crossing_weight(count, mode)});
    return Network::from_edges(ids.size(), edges, labels);
  }
};

}  // namespace

Network bin_trajectory(const Trajectory& t, const BinningGrid& grid, WeightMode mode) {
  if (t.empty()) fail(Errc::EmptyTrajectory, "trajectory has no samples");
  Binner b{grid, {}, {}, {}};
  b.add(t);
  return b.network(mode);
}

Network bin_multi(std::span<const Trajectory> ts, const BinningGrid& grid, WeightMode mode) {
  Binner b{grid, {}, {}, {}};
  for (const Trajectory& t : ts) b.add(t);
  if (b.ids.empty()) fail(Errc::EmptyTrajectory, "trajectories have no samples");
  return b.network(mode);
}

Partition bin_partition(const Trajectory& t, const BinningGrid& grid) {
  if (t.empty()) fail(Errc::EmptyTrajectory, "trajectory has no samples");
  Binner b{grid, {}, {}, {}};
  std::vector<std::size_t> assignment;
  for (std::size_t i = 0; i < t.size(); ++i) assignment.push_back(b.visit(t.point(i)));
  return Partition::from_assignment(std::move(assignment));
}

}  // namespace dowker
