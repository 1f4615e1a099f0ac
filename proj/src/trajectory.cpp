#include "dowker/trajectory.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include "dowker/error.hpp"

namespace dowker {

namespace {

std::string format(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(Errc::Parse, "line " + std::to_string(line) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Trajectory::Trajectory(std::size_t dim, std::vector<double> times, std::vector<double> data)
    : dim_(dim), times_(std::move(times)), data_(std::move(data)) {
  if (dim_ == 0) fail(Errc::InvalidArgument, "trajectory dimension must be positive");
  if (data_.size() != times_.size() * dim_) fail(Errc::InvalidArgument, "trajectory data does not match its times");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1])) fail(Errc::InvalidArgument, "trajectory times must increase strictly");
  for (double x : data_)
    if (!std::isfinite(x)) fail(Errc::NonFinite, "trajectory holds a non-finite coordinate");
  for (double x : times_)
    if (!std::isfinite(x)) fail(Errc::NonFinite, "trajectory holds a non-finite time");
}

Trajectory Trajectory::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) fail(Errc::InvalidArgument, "slice out of range");
  return Trajectory(dim_, std::vector<double>(times_.begin() + begin, times_.begin() + end),
                    std::vector<double>(data_.begin() + begin * dim_, data_.begin() + end * dim_));
}

Trajectory Trajectory::truncated(double duration) const {
  if (empty()) return *this;
  const double slack = 1e-9 * std::max(1.0, std::fabs(duration));
  std::size_t end = 0;
  while (end < size() && times_[end] - times_[0] <= duration + slack) ++end;
  return slice(0, end);
}

std::vector<Trajectory> split_segments(const Trajectory& t, std::size_t parts) {
  if (parts == 0 || parts > t.size()) {
    fail(Errc::InvalidArgument, "cannot split " + std::to_string(t.size()) + " samples into " +
                                    std::to_string(parts) + " segments");
  }
  std::vector<Trajectory> out;
  const std::size_t m = t.size();
  for (std::size_t i = 0; i < parts; ++i) out.push_back(t.slice(i * m / parts, (i + 1) * m / parts));
  return out;
}

Trajectory random_walk(std::size_t steps, std::size_t dim, std::uint64_t seed) {
  if (dim == 0) fail(Errc::InvalidArgument, "random walk dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> times(steps + 1), data((steps + 1) * dim, 0.0);
  for (std::size_t i = 0; i <= steps; ++i) {
    times[i] = static_cast<double>(i);
    if (i == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) data[i * dim + k] = data[(i - 1) * dim + k] + step(rng);
  }
  return Trajectory(dim, std::move(times), std::move(data));
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << 't';
  for (std::size_t k = 0; k < t.dim(); ++k) out << ",x" << k;
  out << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << format(t.time(i));
    for (double x : t.point(i)) out << ',' << format(x);
    out << '\n';
  }
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto header = split_commas(line);
    if (header.size() < 2 || header[0] != "t") fail(Errc::Parse, "line " + std::to_string(line_no) + ": expected header 't,x0,...'");
    dim = header.size() - 1;
    break;
  }
  if (dim == 0) fail(Errc::Parse, "missing trajectory header");
  std::vector<double> times, data;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_commas(line);
    if (cells.size() != dim + 1) {
      fail(Errc::Parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(dim + 1) + " columns");
    }
    const double t = parse_double(cells[0], line_no);
    if (!times.empty() && !(t > times.back())) fail(Errc::Parse, "line " + std::to_string(line_no) + ": time is not increasing");
    times.push_back(t);
    for (std::size_t k = 1; k <= dim; ++k) data.push_back(parse_double(cells[k], line_no));
  }
  return Trajectory(dim, std::move(times), std::move(data));
}

void save_trajectory(const std::filesystem::path& path, const Trajectory& t) {
  std::ofstream out(path);
  if (!out) fail(Errc::Io, "cannot write " + path.string());
  write_trajectory_csv(out, t);
}

Trajectory load_trajectory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path.string());
  try {
    return read_trajectory_csv(in);
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) fail(Errc::Parse, path.string() + ": " + e.what());
    throw;
  }
}

}  // namespace dowker
