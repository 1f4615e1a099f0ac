#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dowker/binning.hpp"
#include "dowker/bottleneck.hpp"
#include "dowker/cli.hpp"
#include "dowker/cycle_oracle.hpp"
#include "dowker/diagram_io.hpp"
#include "dowker/dowker.hpp"
#include "dowker/error.hpp"
#include "dowker/fragmentation.hpp"
#include "dowker/lorenz.hpp"
#include "dowker/network_io.hpp"
#include "dowker/reduce.hpp"

namespace dowker::cli {

namespace {

const std::map<std::string, WeightMode> kModes{
    {"unit", WeightMode::Unit}, {"count", WeightMode::Count}, {"inverse-count", WeightMode::InverseCount}};
const std::map<std::string, Variant> kVariants{{"source", Variant::Source}, {"sink", Variant::Sink}};

struct Options {
  std::uint64_t seed = 0;

  // simulate
  std::string system = "lorenz";
  double t_end = 100.0;
  double dt = 0.01;
  std::vector<double> x0{1.0, 1.0, 1.0};
  std::size_t steps = 1000;
  std::size_t walk_dim = 2;

  // shared
  std::string in;
  std::string out;
  std::string csv;
  std::size_t bins = 20;
  std::string mode = "unit";
  double pad = 0.01;

  // persist
  std::size_t max_dim = 1;
  std::string cutoff;
  std::string variant = "source";
  bool full = false;

  // oracle
  bool cactus = false;
  bool diff = false;

  // compare / fragment
  std::vector<std::string> diagrams;
  std::size_t dim = 0;
  bool fragment = false;
  std::vector<double> durations{5, 20, 50};
  std::vector<std::size_t> segments{2, 6, 12};
};

void emit(std::ostream& out, const std::string& path, const auto& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) fail(Errc::Io, "cannot write " + path);
  write(file);
  if (!file) fail(Errc::Io, "write failed for " + path);
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  Trajectory t;
  if (o.system == "lorenz") {
    if (o.x0.size() != 3) fail(Errc::InvalidArgument, "--x0 needs three values");
    t = lorenz63({o.x0[0], o.x0[1], o.x0[2]}, o.t_end, o.dt);
  } else if (o.system == "random-walk") {
    t = random_walk(o.steps, o.walk_dim, o.seed);
  } else {
    fail(Errc::InvalidArgument, "unknown system '" + o.system + "' (lorenz, random-walk)");
  }
  emit(out, o.out, [&](std::ostream& s) { write_trajectory_csv(s, t); });
  (o.out.empty() ? err : out) << "samples " << t.size() << '\n';
  return kOk;
}

int cmd_bin(const Options& o, std::ostream& out, std::ostream& err) {
  const Trajectory t = load_trajectory(o.in);
  if (t.empty()) fail(Errc::EmptyTrajectory, o.in + " has no samples");
  const BinningGrid grid = BinningGrid::bounding(t, o.bins, o.pad);
  const Network g = bin_trajectory(t, grid, kModes.at(o.mode));
  emit(out, o.out, [&](std::ostream& s) { write_network_json(s, g); });
  (o.out.empty() ? err : out) << "vertices " << g.size() << " edges " << g.edge_count() << '\n';
  return kOk;
}

PersistenceDiagram pipeline(const Network& g, const Options& o, std::ostream& err) {
  std::optional<Extended> cutoff;
  if (!o.cutoff.empty()) cutoff = Extended::parse(o.cutoff);
  const Filtration f = dowker_filtration(g, kVariants.at(o.variant), o.max_dim, cutoff,
                                         o.full ? FiltrationMode::Full : FiltrationMode::Reduced);
  if (f.cutoff_too_low()) {
    err << "warning: cutoff " << f.cutoff().to_string() << " is below the largest edge weight; the diagram is heavily censored\n";
  }
  return reduce(f, o.max_dim);
}

int cmd_persist(const Options& o, std::ostream& out, std::ostream& err) {
  const Network g = load_network(o.in);
  const PersistenceDiagram d = pipeline(g, o, err);
  if (!o.out.empty()) emit(out, o.out, [&](std::ostream& s) { write_diagram_json(s, d); });
  if (!o.csv.empty() || o.out.empty()) emit(out, o.csv, [&](std::ostream& s) { write_barcode_csv(s, d); });
  std::size_t censored = 0;
  for (const auto& p : d.reported()) censored += p.censored ? 1 : 0;
  if (censored > 0) err << "note: " << censored << " bar(s) censored at " << d.cutoff().to_string() << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Network g = load_network(o.in);
  const PersistenceDiagram oracle = o.cactus ? to_diagram(cactus_h1_oracle(g)) : to_diagram(cycle_h1_oracle(g));
  emit(out, o.out, [&](std::ostream& s) { write_diagram_json(s, oracle); });
  if (!o.diff) return kOk;
  Options p = o;
  p.max_dim = 1;
  p.cutoff.clear();
  const PersistenceDiagram piped = pipeline(g, p, err);
  if (piped.in_dim(1) == oracle.in_dim(1)) {
    err << "diff: clean (" << oracle.in_dim(1).size() << " bar(s))\n";
    return kOk;
  }
  err << "diff: oracle and pipeline disagree\n  oracle:";
  for (const auto& [b, d] : oracle.intervals(1)) err << " [" << b.to_string() << ", " << d.to_string() << ')';
  err << "\n  pipeline:";
  for (const auto& [b, d] : piped.intervals(1)) err << " [" << b.to_string() << ", " << d.to_string() << ')';
  err << '\n';
  return kMismatch;
}

int cmd_fragment(const Options& o, std::ostream& out, std::ostream& err) {
  const Trajectory t = load_trajectory(o.in);
  if (t.empty()) fail(Errc::EmptyTrajectory, o.in + " has no samples");
  const BinningGrid grid = BinningGrid::bounding(t, o.bins, o.pad);
  const FragmentationResult r = fragmentation_experiment(t, o.durations, o.segments, grid, kModes.at(o.mode));
  emit(out, o.out, [&](std::ostream& s) { write_fragmentation_csv(s, r); });
  for (const auto& c : r.cells)
    if (!c.ok()) err << "cell T=" << c.duration << " n=" << c.segments << ": " << c.error << '\n';
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.fragment) return cmd_fragment(o, out, err);
  if (o.diagrams.size() != 2) fail(Errc::InvalidArgument, "compare needs two diagram files");
  const PersistenceDiagram a = load_diagram(o.diagrams[0]);
  const PersistenceDiagram b = load_diagram(o.diagrams[1]);
  out << bottleneck(a, b, o.dim).to_string() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dowker persistent homology of directed weighted networks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Generate a trajectory CSV");
  simulate->add_option("system", o.system, "lorenz or random-walk")->capture_default_str();
  simulate->add_option("--t", o.t_end, "Integration time")->capture_default_str();
  simulate->add_option("--dt", o.dt, "Step size")->capture_default_str();
  simulate->add_option("--x0", o.x0, "Initial state")->delimiter(',')->expected(3);
  simulate->add_option("--steps", o.steps, "Random-walk steps")->capture_default_str();
  simulate->add_option("--dim", o.walk_dim, "Random-walk dimension")->capture_default_str();
  simulate->add_option("--out,-o", o.out, "Output CSV (default: standard output)");

  auto* bin = app.add_subcommand("bin", "Bin a trajectory into a state-space network");
  bin->add_option("--in,-i", o.in, "Trajectory CSV")->required();
  bin->add_option("--bins,-b", o.bins, "Bins per dimension")->capture_default_str()->check(CLI::PositiveNumber);
  bin->add_option("--mode", o.mode, "Edge weights")->capture_default_str()->check(CLI::IsMember({"unit", "count", "inverse-count"}));
  bin->add_option("--pad", o.pad, "Relative padding of the bounding box")->capture_default_str();
  bin->add_option("--out,-o", o.out, "Output network JSON (default: standard output)");

  auto* persist = app.add_subcommand("persist", "Dowker persistence diagram of a network");
  persist->add_option("--in,-i", o.in, "Network file (.json or edge list)")->required();
  persist->add_option("--max-dim", o.max_dim, "Highest homology dimension")->capture_default_str();
  persist->add_option("--cutoff", o.cutoff, "Right-censoring threshold (default: none)");
  persist->add_option("--variant", o.variant, "source or sink")->capture_default_str()->check(CLI::IsMember({"source", "sink"}));
  persist->add_flag("--full", o.full, "Enumerate every top-dimensional simplex");
  persist->add_option("--out,-o", o.out, "Diagram JSON");
  persist->add_option("--csv", o.csv, "Barcode CSV (default: standard output when --out is absent)");

  auto* oracle = app.add_subcommand("oracle", "Closed-form H1 barcode of a cycle or cactus");
  oracle->add_option("--in,-i", o.in, "Network file")->required();
  oracle->add_flag("--cactus", o.cactus, "Treat the input as a cactus");
  oracle->add_flag("--diff", o.diff, "Compare with the pipeline; exit 2 on mismatch");
  oracle->add_option("--variant", o.variant, "Pipeline variant for --diff")->capture_default_str()->check(CLI::IsMember({"source", "sink"}));
  oracle->add_option("--out,-o", o.out, "Diagram JSON (default: standard output)");

  auto* compare = app.add_subcommand("compare", "Bottleneck distance between two diagrams");
  compare->add_option("diagrams", o.diagrams, "Two diagram JSON files");
  compare->add_option("--dim", o.dim, "Homology dimension")->capture_default_str();
  compare->add_flag("--fragment", o.fragment, "Run the fragmentation grid instead (see 'fragment')");

  auto* fragment = app.add_subcommand("fragment", "Fragmentation stability grid");
  for (CLI::App* sub : {compare, fragment}) {
    sub->add_option("--in,-i", o.in, "Trajectory CSV");
    sub->add_option("--bins,-b", o.bins, "Bins per dimension")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--mode", o.mode, "Edge weights")->capture_default_str()->check(CLI::IsMember({"unit", "count", "inverse-count"}));
    sub->add_option("--pad", o.pad, "Relative padding of the bounding box")->capture_default_str();
    sub->add_option("--durations,-T", o.durations, "Durations T")->delimiter(',');
    sub->add_option("--segments,-n", o.segments, "Segment counts n")->delimiter(',');
    sub->add_option("--out,-o", o.out, "Heatmap CSV (default: standard output)");
  }
  fragment->get_option("--in")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kOk : kError;
  }

  try {
    if (*simulate) return cmd_simulate(o, out, err);
    if (*bin) return cmd_bin(o, out, err);
    if (*persist) return cmd_persist(o, out, err);
    if (*oracle) return cmd_oracle(o, out, err);
    if (*compare) {
      if (o.fragment && o.in.empty()) fail(Errc::InvalidArgument, "--fragment needs --in");
      return cmd_compare(o, out, err);
    }
    if (*fragment) return cmd_fragment(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace dowker::cli
