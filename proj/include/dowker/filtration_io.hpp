#pragma once

#include <filesystem>
#include <iosfwd>

#include "dowker/filtration.hpp"

namespace dowker {

/// {"censored": bool, "cutoff": number | "inf", "simplices": [{"v": [...], "val": number}]}
/// in stored order.
void write_filtration_json(std::ostream& out, const Filtration& f);
Filtration read_filtration_json(std::istream& in);

void save_filtration(const std::filesystem::path& path, const Filtration& f);
Filtration load_filtration(const std::filesystem::path& path);

}  // namespace dowker
