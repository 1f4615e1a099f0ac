#include "dowker/extended.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "dowker/error.hpp"

namespace dowker {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidNetwork: return "InvalidNetwork";
    case Errc::NoEdges: return "NoEdges";
    case Errc::NotDominating: return "NotDominating";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NotCactus: return "NotCactus";
    case Errc::TooSmall: return "TooSmall";
    case Errc::BadPartition: return "BadPartition";
    case Errc::MissingFaces: return "MissingFaces";
    case Errc::EmptyTrajectory: return "EmptyTrajectory";
    case Errc::NonFinite: return "NonFinite";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Extended::Extended(double value) : v_(value) {
  if (std::isnan(value)) fail(Errc::InvalidArgument, "extended value is NaN");
  if (value < 0.0) fail(Errc::InvalidArgument, "extended value is negative: " + std::to_string(value));
  if (std::isinf(value)) v_ = kInf;
}

std::string Extended::to_string() const {
  if (is_infinite()) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v_);
  (void)ec;
  return std::string(buf, ptr);
}

Extended Extended::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(Errc::Parse, "not a number: '" + std::string(text) + "'");
  }
  if (std::isnan(v) || v < 0.0) fail(Errc::Parse, "value must be nonnegative: '" + std::string(text) + "'");
  return Extended(v);
}

Extended distance(Extended a, Extended b) noexcept {
  if (a.is_infinite() && b.is_infinite()) return Extended::zero();
  if (a.is_infinite() || b.is_infinite()) return Extended::infinity();
  return Extended(std::fabs(a.value() - b.value()));
}

}  // namespace dowker
