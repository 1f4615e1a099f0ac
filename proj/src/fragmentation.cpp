#include "dowker/fragmentation.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "dowker/bottleneck.hpp"
#include "dowker/dowker.hpp"
#include "dowker/reduce.hpp"

namespace dowker {

namespace {

std::string format(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void run_cell(const Trajectory& t, const BinningGrid& grid, WeightMode mode, FragmentationCell& cell) {
  try {
    if (cell.duration > t.duration() * (1.0 + 1e-9)) {
      throw std::invalid_argument("duration " + format(cell.duration) + " exceeds the trajectory (" +
                                  format(t.duration()) + ")");
    }
    const Trajectory head = t.truncated(cell.duration);
    const Network full = bin_trajectory(head, grid, mode);
    const auto parts = split_segments(head, cell.segments);
    const Network joined = bin_multi(parts, grid, mode);
    const Extended cutoff = max(max_finite_entry(path_completion(full)), max_finite_entry(path_completion(joined)));
    const PersistenceDiagram a = censor_at(network_diagram(full), cutoff);
    const PersistenceDiagram b = censor_at(network_diagram(joined), cutoff);
    cell.b0 = bottleneck(a, b, 0);
    cell.b1 = bottleneck(a, b, 1);
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
}

}  // namespace

PersistenceDiagram network_diagram(const Network& g) { return reduce(dowker_filtration(g, Variant::Source, 1), 1); }

FragmentationResult fragmentation_experiment(const Trajectory& t, const std::vector<double>& durations,
                                             const std::vector<std::size_t>& segments, const BinningGrid& grid,
                                             WeightMode mode, bool parallel) {
  FragmentationResult out;
  for (double T : durations)
    for (std::size_t n : segments) out.cells.push_back({T, n, Extended::zero(), Extended::zero(), {}});
  const auto count = static_cast<std::ptrdiff_t>(out.cells.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) run_cell(t, grid, mode, out.cells[static_cast<std::size_t>(i)]);
  return out;
}

void write_fragmentation_csv(std::ostream& out, const FragmentationResult& r) {
  out << "T,n,b0,b1\n";
  for (const FragmentationCell& c : r.cells) {
    out << format(c.duration) << ',' << c.segments << ',';
    if (c.ok()) {
      out << c.b0.to_string() << ',' << c.b1.to_string() << '\n';
    } else {
      out << "nan,nan\n";
    }
  }
}

}  // namespace dowker
