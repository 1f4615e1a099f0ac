#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dowker {

enum class Errc {
  InvalidNetwork,
  NoEdges,
  NotDominating,
  NotACycle,
  NotCactus,
  TooSmall,
  BadPartition,
  MissingFaces,
  EmptyTrajectory,
  NonFinite,
  Parse,
  Io,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dowker
