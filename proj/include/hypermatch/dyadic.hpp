#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hypermatch {

/// Exact dyadic rational: numerator / 2^exponent.
///
/// Values are kept canonical (odd numerator, or zero with exponent 0), so two
/// equal values always have identical representations and serialize to the
/// same text. Arithmetic that would leave the 64-bit numerator range or push
/// the exponent past kMaxExponent throws std::overflow_error instead of
/// rounding.
class Dyadic {
 public:
  static constexpr int kMaxExponent = 62;

  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, int exponent);

  static Dyadic integer(std::int64_t value) { return Dyadic(value, 0); }
  /// 2^-exponent
  static Dyadic inverse_pow2(int exponent) { return Dyadic(1, exponent); }

  std::int64_t numerator() const noexcept { return num_; }
  int exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_positive() const noexcept { return num_ > 0; }

  Dyadic doubled() const { return mul_pow2(1); }
  Dyadic halved() const { return mul_pow2(-1); }
  /// value * 2^shift (shift may be negative)
  Dyadic mul_pow2(int shift) const;

  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  friend Dyadic operator*(const Dyadic& a, std::int64_t k);
  friend Dyadic operator*(std::int64_t k, const Dyadic& a) { return a * k; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  double to_double() const noexcept;

  /// "0", "3", "-5/8", ...; parse() accepts exactly this grammar back.
  std::string str() const;
  static Dyadic parse(std::string_view text);

 private:
  void normalize();

  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline const Dyadic kZero{};
inline const Dyadic kOne = Dyadic::integer(1);
inline const Dyadic kHalf = Dyadic::inverse_pow2(1);

/// Smallest power of two >= value (value >= 1); 1 for value <= 1.
std::uint64_t ceil_pow2(std::uint64_t value);
/// floor(log2(value)) for value >= 1.
int floor_log2(std::uint64_t value);
bool is_pow2(std::uint64_t value);

}  // namespace hypermatch
