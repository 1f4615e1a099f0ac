#pragma once

#include <filesystem>
#include <iosfwd>

#include "dowker/diagram.hpp"

namespace dowker {

/// {"dims": [0, 1], "cutoff": number | "inf", "pairs": [{"dim": d, "birth": b,
/// "death": x | "inf", "censored": bool}]}. Only reported pairs are written.
void write_diagram_json(std::ostream& out, const PersistenceDiagram& d);
PersistenceDiagram read_diagram_json(std::istream& in);

/// Header `dim,birth,death,censored`, rows sorted by (dim, birth, death).
void write_barcode_csv(std::ostream& out, const PersistenceDiagram& d);

void save_diagram(const std::filesystem::path& path, const PersistenceDiagram& d);
PersistenceDiagram load_diagram(const std::filesystem::path& path);

}  // namespace dowker
