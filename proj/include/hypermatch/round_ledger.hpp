#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypermatch {

struct LedgerEntry {
  std::string label;
  std::string formula;  ///< cost formula the charge instantiates
  std::uint64_t rounds = 0;
  std::uint64_t calls = 1;  ///< consecutive identical charges are merged
};

/// Append-only record of LOCAL-model rounds charged by each primitive.
class RoundLedger {
 public:
  void charge(std::string_view label, std::uint64_t rounds, std::string_view formula = {});

  const std::vector<LedgerEntry>& entries() const noexcept { return entries_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t total_for(std::string_view label) const;

 private:
  std::vector<LedgerEntry> entries_;
  std::uint64_t total_ = 0;
};

/// Null-safe charge helper used by the algorithms.
inline void charge(RoundLedger* ledger, std::string_view label, std::uint64_t rounds, std::string_view formula = {}) {
  if (ledger != nullptr) ledger->charge(label, rounds, formula);
}

// Closed-form bound for the recursive rounding recurrence
//   R(L) <= a*r*(2 R(sqrt(2L)) + O(1)),  R(L) = c r^2 + c log D  for L <= 4,
// namely R(L) < 2 (alpha r)^{t_L} (c r^2 + c log2 D) where t_L is the least t
// with (L/2)^{2^-t} <= 2.

struct RecurrenceConstants {
  double alpha = 32.0;
  double c = 1.0;
};

/// t_L, computed with integer arithmetic. L >= 1.
int recurrence_depth(std::uint64_t L);

double recurrence_bound(std::uint64_t L, std::size_t r, std::uint64_t delta, const RecurrenceConstants& k);

struct RecurrenceVerdict {
  bool ok = true;
  int depth = 0;
  double bound = 0;
  std::uint64_t measured = 0;
};

RecurrenceVerdict check_recurrence_bound(std::uint64_t measured, std::uint64_t L, std::size_t r,
                                         std::uint64_t delta, const RecurrenceConstants& k);

/// Smallest c for which `measured` meets the bound with the given alpha.
double fit_recurrence_c(std::uint64_t measured, std::uint64_t L, std::size_t r, std::uint64_t delta, double alpha);

}  // namespace hypermatch
