#include "dowker/filtration_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "json_util.hpp"

namespace dowker {

using nlohmann::json;

void write_filtration_json(std::ostream& out, const Filtration& f) {
  json doc;
  doc["censored"] = f.censored();
  doc["cutoff"] = detail::to_json(f.cutoff());
  if (f.cutoff_too_low()) doc["cutoff_too_low"] = true;
  json simplices = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto s = f.simplex(i);
    simplices.push_back({{"v", std::vector<Vertex>(s.begin(), s.end())}, {"val", detail::to_json(f.value(i))}});
  }
  doc["simplices"] = std::move(simplices);
  out << doc.dump() << '\n';
}

Filtration read_filtration_json(std::istream& in) {
  try {
    const json doc = json::parse(in);
    std::vector<std::pair<Simplex, Extended>> entries;
    for (const auto& s : doc.at("simplices")) {
      entries.emplace_back(s.at("v").get<Simplex>(), detail::extended_from_json(s.at("val")));
    }
    Filtration f = Filtration::from_entries(std::move(entries), detail::extended_from_json(doc.at("cutoff")),
                                            doc.at("censored").get<bool>());
    f.set_cutoff_too_low(doc.value("cutoff_too_low", false));
    return f;
  } catch (const json::exception& e) {
    fail(Errc::Parse, std::string("filtration JSON: ") + e.what());
  }
}

void save_filtration(const std::filesystem::path& path, const Filtration& f) {
  std::ofstream out(path);
  if (!out) fail(Errc::Io, "cannot write " + path.string());
  write_filtration_json(out, f);
}

Filtration load_filtration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path.string());
  return read_filtration_json(in);
}

}  // namespace dowker
