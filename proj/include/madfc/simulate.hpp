#pragma once

// Deterministic synthetic datasets behind the `simulate` CLI subcommand
// (fig4a: interval estimates, fig5a: boxplot sweep, fig6a: violin groups).
//
// All generators are pure functions of their arguments. Randomness, where
// used at all, comes from a seeded std::mt19937_64 with normal deviates drawn
// by the Marsaglia polar method, so a given seed reproduces the same bytes on
// any IEEE-754 platform.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "madfc/stats.hpp"
#include "madfc/table.hpp"

namespace madfc {

// Interval half-width of the simulated error-bar dataset, in fold change
// units from no change.
inline constexpr double kIntervalHalfWidthFcz = 2.0;

// Group point estimates at evenly spaced coordinates -(n-1), -(n-3), ...,
// +(n-1) in MAD space, each with a +-2 unit interval. The construction is
// deterministic; the seed is accepted for interface symmetry with the other
// simulators.
std::vector<GroupSummary> simulate_interval_dataset(int group_count, std::uint64_t seed);

// Nine boxes with medians swept across MAD coordinates -8, -6, ..., +8
// (fold changes 1/9 through 9) and five-number summaries at median +-{4,2,0}
// MAD units, so every box has identical quantile widths in fold change units.
std::vector<FiveNumberSummary> simulate_boxplot_dataset(std::uint64_t seed);

// One gene, group_count groups at the same centers as the interval dataset.
// A single sequence of normal deviates (sd sigma_fcz in MAD space) is reused
// for every group, so all groups share one distribution shape translated to
// different fold changes.
ExpressionMatrix simulate_violin_dataset(int group_count, int samples_per_group,
                                         double sigma_fcz, std::uint64_t seed);

namespace detail {

// MAD-space center of group `index` out of `group_count`: evenly spaced with
// step 2, symmetric about zero.
double group_center(int index, int group_count);

// n standard normal deviates from the given seed.
Eigen::ArrayXd standard_normal(int n, std::uint64_t seed);

}  // namespace detail

}  // namespace madfc
