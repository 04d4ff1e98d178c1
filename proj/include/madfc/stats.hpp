#pragma once

// Summary statistics for fold change datasets: group fold changes, type-7
// quantile summaries, Gaussian kernel density estimates computed in a chosen
// scale's transformed space, and interval construction in fold change units.

#include <string>
#include <utility>

#include <Eigen/Core>

#include "madfc/transform.hpp"

namespace madfc {

// Measurements of one group, arbitrary positive units.
struct SampleSet {
    std::string label;
    Eigen::ArrayXd values;
};

// Point estimate with an interval, all in raw fold change.
struct GroupSummary {
    std::string label;
    double point_fc = 1.0;
    double lower_fc = 1.0;
    double upper_fc = 1.0;
    std::string interval_kind;  // e.g. "confidence interval", "standard deviation"
};

struct FiveNumberSummary {
    std::string label;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

// Density over a uniform grid in transformed space; trapezoid integral is 1.
struct DensityCurve {
    Eigen::ArrayXd grid;
    Eigen::ArrayXd density;
};

inline constexpr int kKdeGridSize = 256;
inline constexpr double kKdeRangePaddingBandwidths = 3.0;

// mean(experiment) / mean(control).
double fold_change_of_groups(const SampleSet& experiment, const SampleSet& control);

// Five-number summary under linear-interpolation (type-7) quantiles, computed
// on the raw values. Requires at least 5 samples.
FiveNumberSummary quantile_summary(const SampleSet& samples);

// Gaussian KDE of the samples after mapping through scale_forward, Silverman
// bandwidth 0.9 * min(sd, iqr/1.34) * n^(-1/5), evaluated on kKdeGridSize
// evenly spaced points spanning the data range padded by 3 bandwidths, then
// renormalized to unit trapezoid integral. Requires at least 5 samples and
// nonzero variance.
DensityCurve kde_density(const SampleSet& samples, ScaleKind scale);

// Interval of constant +-half_width around the point estimate in fold change
// units from no change, mapped back to raw fold changes.
std::pair<double, double> interval_from_fcz(double point_fc, double half_width);

}  // namespace madfc
