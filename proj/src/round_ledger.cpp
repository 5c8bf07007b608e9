#include "hypermatch/round_ledger.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hypermatch {

void RoundLedger::charge(std::string_view label, std::uint64_t rounds, std::string_view formula) {
  if (!entries_.empty() && entries_.back().label == label && entries_.back().formula == formula) {
    entries_.back().rounds += rounds;
    entries_.back().calls += 1;
  } else {
    entries_.push_back({std::string(label), std::string(formula), rounds, 1});
  }
  total_ += rounds;
}

std::uint64_t RoundLedger::total_for(std::string_view label) const {
  std::uint64_t sum = 0;
  for (const auto& e : entries_) {
    if (e.label == label) sum += e.rounds;
  }
  return sum;
}

int recurrence_depth(std::uint64_t L) {
  if (L == 0) throw std::invalid_argument("recurrence_depth: L must be positive");
  // (L/2)^{2^-t} <= 2  <=>  log2(L/2) <= 2^t  <=>  ceil(log2 L) - 1 <= 2^t.
  const int need = static_cast<int>(std::bit_width(L - 1)) - 1;
  int t = 0;
  while (need > (1 << t)) ++t;
  return t;
}

namespace {

double log2_degree(std::uint64_t delta) { return delta <= 1 ? 0.0 : std::log2(static_cast<double>(delta)); }

double unit_bound(std::uint64_t L, std::size_t r, std::uint64_t delta, double alpha) {
  const double rr = static_cast<double>(r);
  return 2.0 * std::pow(alpha * rr, recurrence_depth(L)) * (rr * rr + log2_degree(delta));
}

}  // namespace

double recurrence_bound(std::uint64_t L, std::size_t r, std::uint64_t delta, const RecurrenceConstants& k) {
  return k.c * unit_bound(L, r, delta, k.alpha);
}

RecurrenceVerdict check_recurrence_bound(std::uint64_t measured, std::uint64_t L, std::size_t r,
                                         std::uint64_t delta, const RecurrenceConstants& k) {
  RecurrenceVerdict v;
  v.depth = recurrence_depth(L);
  v.bound = recurrence_bound(L, r, delta, k);
  v.measured = measured;
  v.ok = static_cast<double>(measured) <= v.bound;
  return v;
}

double fit_recurrence_c(std::uint64_t measured, std::uint64_t L, std::size_t r, std::uint64_t delta, double alpha) {
  const double unit = unit_bound(L, r, delta, alpha);
  // Nudged up so the fitting instance itself passes despite rounding.
  return unit > 0 ? static_cast<double>(measured) / unit * (1.0 + 1e-12) : 0.0;
}

}  // namespace hypermatch
