#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hypermatch {

/// Small positive rational for accuracy parameters such as epsilon.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Accepts "a" or "a/b" with a, b positive integers.
  static Rational parse(std::string_view text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// ceil(k * this) for k >= 0.
  std::int64_t ceil_times(std::int64_t k) const { return (k * num + den - 1) / den; }
  /// ceil(1 / this)
  std::int64_t ceil_inverse() const { return (den + num - 1) / num; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace hypermatch
