#include "forestcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace forestcc {

namespace {

// number of (i, j) pairs falling into equal-value runs
std::uint64_t tied_pairs(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::uint64_t ties = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i < values.size() && values[i] == values[i - 1]) {
            ++run;
        } else {
            ties += static_cast<std::uint64_t>(run) * (run - 1) / 2;
            run = 1;
        }
    }
    return ties;
}

// strict inversions of `seq`, counted by merge sort
std::uint64_t count_inversions(std::vector<double> &seq, std::vector<double> &scratch,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = count_inversions(seq, scratch, lo, mid) + count_inversions(seq, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
            inv += mid - i;
            scratch[k++] = seq[j++];
        } else {
            scratch[k++] = seq[i++];
        }
    }
    while (i < mid)
        scratch[k++] = seq[i++];
    while (j < hi)
        scratch[k++] = seq[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, seq.begin() + lo);
    return inv;
}

} // namespace

double kendall_tau(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("kendall_tau: score vectors differ in length");
    const std::size_t n = a.size();
    if (n < 2)
        return 1.0;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (a[i] != a[j])
            return a[i] < a[j];
        return b[i] < b[j];
    });

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t n1 = tied_pairs({a.begin(), a.end()});
    const std::uint64_t n2 = tied_pairs({b.begin(), b.end()});

    // pairs tied in both a and b
    std::uint64_t n12 = 0;
    {
        std::size_t run_start = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == n || a[order[i]] != a[order[run_start]]) {
                std::size_t sub = run_start, len = 1;
                for (std::size_t j = run_start + 1; j <= i; ++j) {
                    if (j < i && b[order[j]] == b[order[sub]]) {
                        ++len;
                    } else {
                        n12 += static_cast<std::uint64_t>(len) * (len - 1) / 2;
                        sub = j;
                        len = 1;
                    }
                }
                run_start = i;
            }
        }
    }

    std::vector<double> b_sorted(n), scratch(n);
    for (std::size_t i = 0; i < n; ++i)
        b_sorted[i] = b[order[i]];
    const std::uint64_t discordant = count_inversions(b_sorted, scratch, 0, n);

    const auto num = static_cast<double>(static_cast<std::int64_t>(n0) -
                                         static_cast<std::int64_t>(n1) -
                                         static_cast<std::int64_t>(n2) +
                                         static_cast<std::int64_t>(n12) -
                                         2 * static_cast<std::int64_t>(discordant));
    const double den = std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2));
    if (den == 0.0) {
        // at least one ranking is fully tied; identical orders score 1
        return n1 == n0 && n2 == n0 ? 1.0 : 0.0;
    }
    return num / den;
}

double max_abs_error(std::span<const double> estimate, std::span<const double> reference) {
    if (estimate.size() != reference.size())
        throw std::invalid_argument("max_abs_error: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < estimate.size(); ++i)
        worst = std::max(worst, std::abs(estimate[i] - reference[i]));
    return worst;
}

double avg_abs_error(std::span<const double> estimate, std::span<const double> reference) {
    if (estimate.size() != reference.size())
        throw std::invalid_argument("avg_abs_error: length mismatch");
    if (estimate.empty())
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < estimate.size(); ++i)
        sum += std::abs(estimate[i] - reference[i]);
    return sum / static_cast<double>(estimate.size());
}

} // namespace forestcc
