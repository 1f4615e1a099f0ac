#pragma once

#include <compare>
#include <limits>
#include <string>
#include <string_view>

namespace dowker {

/// A value in [0, inf]. The infinite state is a distinct value of the type,
/// not a large finite sentinel: inf + x == inf for every x, and comparisons
/// order it above every finite value. Internally the infinite state is stored
/// as IEEE +inf, which keeps the type 8 bytes wide inside distance matrices.
class Extended {
 public:
  constexpr Extended() noexcept = default;

  /// Throws Errc::InvalidArgument for NaN or negative input.
  Extended(double value);  // NOLINT(google-explicit-constructor)

  static constexpr Extended infinity() noexcept { return Extended(kInf, Unchecked{}); }
  static constexpr Extended zero() noexcept { return Extended(); }

  constexpr bool is_finite() const noexcept { return v_ != kInf; }
  constexpr bool is_infinite() const noexcept { return v_ == kInf; }

  /// The finite value, or +inf as a double.
  constexpr double value() const noexcept { return v_; }

  friend constexpr Extended operator+(Extended a, Extended b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Extended(a.v_ + b.v_, Unchecked{});
  }
  Extended& operator+=(Extended other) noexcept { return *this = *this + other; }

  friend constexpr bool operator==(Extended a, Extended b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(Extended a, Extended b) noexcept {
    return a.v_ <=> b.v_;
  }

  friend constexpr Extended max(Extended a, Extended b) noexcept { return a < b ? b : a; }
  friend constexpr Extended min(Extended a, Extended b) noexcept { return b < a ? b : a; }

  /// Shortest decimal text that round-trips; "inf" for the infinite value.
  std::string to_string() const;

  /// Accepts "inf"/"infinity" (any case) or a nonnegative decimal number.
  static Extended parse(std::string_view text);

 private:
  struct Unchecked {};
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr Extended(double v, Unchecked) noexcept : v_(v) {}

  double v_ = 0.0;
};

/// Absolute difference |a - b|; infinite when exactly one side is infinite,
/// zero when both are.
Extended distance(Extended a, Extended b) noexcept;

}  // namespace dowker
