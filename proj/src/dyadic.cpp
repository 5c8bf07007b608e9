#include "hypermatch/dyadic.hpp"

#include <bit>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace hypermatch {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("dyadic numerator overflow");
  }
  return static_cast<std::int64_t>(value);
}

// Both values scaled to the common exponent max(a.exp, b.exp).
std::pair<i128, i128> aligned(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exponent(), b.exponent());
  return {static_cast<i128>(a.numerator()) << (e - a.exponent()),
          static_cast<i128>(b.numerator()) << (e - b.exponent())};
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exp_ < 0) {
    const i128 scaled = static_cast<i128>(num_) << std::min(-exp_, 64);
    if (-exp_ >= 64 && num_ != 0) throw std::overflow_error("dyadic numerator overflow");
    num_ = narrow(scaled);
    exp_ = 0;
  }
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const std::uint64_t magnitude =
      num_ < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(num_) : static_cast<std::uint64_t>(num_);
  const int tz = std::min(std::countr_zero(magnitude), exp_);
  num_ >>= tz;
  exp_ -= tz;
  if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent overflow");
}

Dyadic Dyadic::mul_pow2(int shift) const {
  if (num_ == 0) return {};
  return Dyadic(num_, exp_ - shift);
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  const int e = std::max(exp_, rhs.exp_);
  const auto [a, b] = aligned(*this, rhs);
  num_ = narrow(a + b);
  exp_ = e;
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic operator*(const Dyadic& a, std::int64_t k) {
  return Dyadic(narrow(static_cast<i128>(a.num_) * k), a.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const auto [x, y] = aligned(a, b);
  return x <=> y;
}

double Dyadic::to_double() const noexcept {
  double v = static_cast<double>(num_);
  for (int i = 0; i < exp_; ++i) v /= 2.0;
  return v;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s, auto& out) {
    if (s.empty()) throw std::invalid_argument("malformed dyadic value: '" + std::string(text) + "'");
    const auto* first = s.data();
    if (*first == '+') throw std::invalid_argument("malformed dyadic value: '" + std::string(text) + "'");
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed dyadic value: '" + std::string(text) + "'");
    }
  };
  const auto slash = text.find('/');
  std::int64_t num = 0;
  if (slash == std::string_view::npos) {
    parse_int(text, num);
    return Dyadic(num, 0);
  }
  std::uint64_t den = 0;
  parse_int(text.substr(0, slash), num);
  parse_int(text.substr(slash + 1), den);
  if (!is_pow2(den)) throw std::invalid_argument("denominator is not a power of two: '" + std::string(text) + "'");
  return Dyadic(num, floor_log2(den));
}

std::uint64_t ceil_pow2(std::uint64_t value) { return value <= 1 ? 1 : std::bit_ceil(value); }

int floor_log2(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("floor_log2(0)");
  return std::bit_width(value) - 1;
}

bool is_pow2(std::uint64_t value) { return std::has_single_bit(value); }

}  // namespace hypermatch
