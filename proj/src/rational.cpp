#include "hypermatch/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hypermatch {

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("expected a positive rational 'a' or 'a/b', got '" + std::string(text) + "'"); };
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) throw bad();
    return v;
  };
  Rational q;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    q.num = number(text);
  } else {
    q.num = number(text.substr(0, slash));
    q.den = number(text.substr(slash + 1));
  }
  const std::int64_t g = std::gcd(q.num, q.den);
  q.num /= g;
  q.den /= g;
  return q;
}

}  // namespace hypermatch
