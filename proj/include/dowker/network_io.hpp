#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dowker/network.hpp"

namespace dowker {

/// Edge-list text:
///
///   n 4
///   0 1 2.5
///   1 2 1
///
/// Blank lines and lines starting with '#' are skipped. Parse errors carry
/// the 1-based line number.
Network read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Network& g);

/// {"n": 4, "edges": [[0, 1, 2.5], ...], "labels": ["a", ...]}
Network read_network_json(std::istream& in);
void write_network_json(std::ostream& out, const Network& g);

/// Picks the format from the extension: ".json" is JSON, anything else is an
/// edge list.
Network load_network(const std::filesystem::path& path);
void save_network(const std::filesystem::path& path, const Network& g);

}  // namespace dowker
