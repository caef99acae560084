#include "topoprobe/complexes.hpp"

namespace topoprobe {

FiltrationSchedule::FiltrationSchedule() {
  // (10 - l) / 10^(m+1): both operands are exact integers in double, so each
  // threshold is the correctly rounded decimal (0.9, 0.09, 1e-7, ...).
  for (int n = 1; n <= kScheduleLength; ++n) {
    const int m = (n - 1) / 9;
    const int l = (n - 1) % 9;
    double scale = 10.0;
    for (int k = 0; k < m; ++k) scale *= 10.0;
    thresholds_[static_cast<std::size_t>(n - 1)] = static_cast<double>(10 - l) / scale;
  }
}

const FiltrationSchedule& threshold_schedule() {
  static const FiltrationSchedule schedule;
  return schedule;
}

std::optional<int> threshold_index(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("relevance outside [0, 1]");
  const auto& t = threshold_schedule().thresholds();
  // thresholds are strictly decreasing; find the first one r meets
  int lo = 0, hi = kScheduleLength;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (meets_threshold(r, t[static_cast<std::size_t>(mid)])) hi = mid;
    else lo = mid + 1;
  }
  if (lo == kScheduleLength) return std::nullopt;
  return lo + 1;
}

}  // namespace topoprobe
