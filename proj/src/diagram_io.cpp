#include "dowker/diagram_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "json_util.hpp"

namespace dowker {

using nlohmann::json;

void write_diagram_json(std::ostream& out, const PersistenceDiagram& d) {
  json doc;
  json dims = json::array();
  for (std::size_t k = 0; k <= d.max_dim(); ++k) dims.push_back(k);
  doc["dims"] = std::move(dims);
  doc["cutoff"] = detail::to_json(d.cutoff());
  doc["censored"] = d.censored();
  json pairs = json::array();
  for (const PersistencePair& p : d.reported()) {
    pairs.push_back({{"dim", p.dim},
                     {"birth", detail::to_json(p.birth)},
                     {"death", detail::to_json(p.death)},
                     {"censored", p.censored}});
  }
  doc["pairs"] = std::move(pairs);
  out << doc.dump(1) << '\n';
}

PersistenceDiagram read_diagram_json(std::istream& in) {
  try {
    const json doc = json::parse(in);
    std::size_t max_dim = 0;
    for (const auto& k : doc.at("dims")) max_dim = std::max(max_dim, k.get<std::size_t>());
    std::vector<PersistencePair> pairs;
    for (const auto& p : doc.at("pairs")) {
      PersistencePair pair;
      pair.dim = p.at("dim").get<std::size_t>();
      pair.birth = detail::extended_from_json(p.at("birth"));
      pair.death = detail::extended_from_json(p.at("death"));
      pair.censored = p.value("censored", false);
      if (pair.birth.is_infinite() || pair.death < pair.birth) fail(Errc::Parse, "diagram JSON: invalid pair");
      max_dim = std::max(max_dim, pair.dim);
      pairs.push_back(pair);
    }
    const Extended cutoff = doc.contains("cutoff") ? detail::extended_from_json(doc["cutoff"]) : Extended::infinity();
    return PersistenceDiagram(std::move(pairs), max_dim, cutoff, doc.value("censored", false));
  } catch (const json::exception& e) {
    fail(Errc::Parse, std::string("diagram JSON: ") + e.what());
  }
}

void write_barcode_csv(std::ostream& out, const PersistenceDiagram& d) {
  out << "dim,birth,death,censored\n";
  for (const PersistencePair& p : d.reported()) {
    out << p.dim << ',' << p.birth.to_string() << ',' << p.death.to_string() << ','
        << (p.censored ? "true" : "false") << '\n';
  }
}

void save_diagram(const std::filesystem::path& path, const PersistenceDiagram& d) {
  std::ofstream out(path);
  if (!out) fail(Errc::Io, "cannot write " + path.string());
  if (path.extension() == ".csv") {
    write_barcode_csv(out, d);
  } else {
    write_diagram_json(out, d);
  }
}

PersistenceDiagram load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path.string());
  return read_diagram_json(in);
}

}  // namespace dowker
