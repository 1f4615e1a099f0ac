#pragma once

#include <string>

#include <json.hpp>

#include "dowker/error.hpp"
#include "dowker/extended.hpp"

namespace dowker::detail {

// Integral values are written as JSON integers so integer fixtures
// round-trip textually; infinity is the string "inf".
inline nlohmann::json to_json(Extended v) {
  if (v.is_infinite()) return "inf";
  const double x = v.value();
  if (x < 9.0e15 && x == static_cast<double>(static_cast<long long>(x))) return static_cast<long long>(x);
  return x;
}

inline Extended extended_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Extended(j.get<double>());
  if (j.is_string()) return Extended::parse(j.get<std::string>());
  fail(Errc::Parse, "expected a number or \"inf\"");
}

}  // namespace dowker::detail
