#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dowker/binning.hpp"
#include "dowker/diagram.hpp"
#include "dowker/trajectory.hpp"

namespace dowker {

struct FragmentationCell {
  double duration = 0.0;
  std::size_t segments = 0;
  Extended b0;
  Extended b1;
  /// Empty on success; otherwise the error that stopped this cell.
  std::string error;

  bool ok() const noexcept { return error.empty(); }
};

/// Cells in row-major order: durations outer, segment counts inner.
struct FragmentationResult {
  std::vector<FragmentationCell> cells;
};

/// Dowker source diagram (H0, H1) of a binned network, uncensored.
PersistenceDiagram network_diagram(const Network& g);

/// For each (T, n): truncate t to duration T, bin it on `grid`, split the
/// truncated samples into n disjoint contiguous segments, bin their union,
/// and record bottleneck distances between the two diagrams in H0 and H1.
///
/// Both diagrams are right-censored at the larger of the two largest finite
/// completed distances, so classes that never die in a fragmented union stay
/// comparable. Failing cells keep their error and do not stop the grid.
FragmentationResult fragmentation_experiment(const Trajectory& t, const std::vector<double>& durations,
                                             const std::vector<std::size_t>& segments, const BinningGrid& grid,
                                             WeightMode mode = WeightMode::Unit, bool parallel = true);

/// Header `T,n,b0,b1`; failed cells print "nan" distances.
void write_fragmentation_csv(std::ostream& out, const FragmentationResult& r);

}  // namespace dowker
