#ifndef FORESTCC_METRICS_HPP
#define FORESTCC_METRICS_HPP

#include <span>

namespace forestcc {

/// Tie-aware Kendall rank correlation (tau-b) between two score vectors
/// over the same index set. 1 for identical orders, -1 for exact reversal.
/// O(n log n) via merge-sort inversion counting.
double kendall_tau(std::span<const double> a, std::span<const double> b);

double max_abs_error(std::span<const double> estimate, std::span<const double> reference);
double avg_abs_error(std::span<const double> estimate, std::span<const double> reference);

} // namespace forestcc

#endif
