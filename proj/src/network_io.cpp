#include "dowker/network_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dowker/error.hpp"
#include "json_util.hpp"

namespace dowker {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

Vertex parse_vertex(const std::string& token, std::size_t n, std::size_t line) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(token, &used);
  } catch (const std::exception&) {
    parse_error(line, "bad vertex index '" + token + "'");
  }
  if (used != token.size() || token.front() == '-') parse_error(line, "bad vertex index '" + token + "'");
  if (v >= n) parse_error(line, "vertex " + token + " out of range for n = " + std::to_string(n));
  return static_cast<Vertex>(v);
}

}  // namespace

Network read_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream line(text);
    std::string first;
    if (!(line >> first) || first.front() == '#') continue;
    if (!have_header) {
      std::string count;
      if (first != "n" || !(line >> count)) parse_error(line_no, "expected header 'n <count>'");
      std::size_t used = 0;
      try {
        n = std::stoul(count, &used);
      } catch (const std::exception&) {
        parse_error(line_no, "bad vertex count '" + count + "'");
      }
      if (used != count.size() || n == 0) parse_error(line_no, "bad vertex count '" + count + "'");
      have_header = true;
      continue;
    }
    std::string to, weight, extra;
    if (!(line >> to >> weight)) parse_error(line_no, "expected 'u v w'");
    if (line >> extra) parse_error(line_no, "trailing text '" + extra + "'");
    Edge e;
    e.from = parse_vertex(first, n, line_no);
    e.to = parse_vertex(to, n, line_no);
    try {
      e.weight = Extended::parse(weight);
    } catch (const Error& err) {
      parse_error(line_no, err.what());
    }
    if (e.from != e.to && e.weight.is_finite() && e.weight.value() <= 0.0) {
      parse_error(line_no, "edge weight must be positive");
    }
    edges.push_back(e);
  }
  if (!have_header) fail(Errc::Parse, "missing header 'n <count>'");
  return Network::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Network& g) {
  out << "n " << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << ' ' << e.weight.to_string() << '\n';
}

Network read_network_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Errc::Parse, std::string("network JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    if (n == 0) fail(Errc::Parse, "network JSON: n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) fail(Errc::Parse, "network JSON: each edge is [u, v, w]");
      const auto u = e[0].get<std::size_t>();
      const auto v = e[1].get<std::size_t>();
      if (u >= n || v >= n) fail(Errc::Parse, "network JSON: edge endpoint out of range");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), detail::extended_from_json(e[2])});
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) labels = doc["labels"].get<std::vector<std::string>>();
    return Network::from_edges(n, edges, std::move(labels));
  } catch (const json::exception& e) {
    fail(Errc::Parse, std::string("network JSON: ") + e.what());
  }
}

void write_network_json(std::ostream& out, const Network& g) {
  json doc;
  doc["n"] = g.size();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to, detail::to_json(e.weight)});
  doc["edges"] = std::move(edges);
  if (!g.labels().empty()) doc["labels"] = g.labels();
  out << doc.dump() << '\n';
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path.string());
  try {
    return path.extension() == ".json" ? read_network_json(in) : read_edge_list(in);
  } catch (const Error& e) {
    if (e.code() == Errc::Parse) fail(Errc::Parse, path.string() + ": " + e.what());
    throw;
  }
}

void save_network(const std::filesystem::path& path, const Network& g) {
  std::ofstream out(path);
  if (!out) fail(Errc::Io, "cannot write " + path.string());
  if (path.extension() == ".json") {
    write_network_json(out, g);
  } else {
    write_edge_list(out, g);
  }
  if (!out) fail(Errc::Io, "write failed for " + path.string());
}

}  // namespace dowker
