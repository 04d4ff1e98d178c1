#include "madfc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace madfc {

namespace {

void check_samples(const SampleSet& samples, Eigen::Index minimum, const char* op) {
    if (samples.values.size() < minimum)
        throw degenerate_input_error(std::string(op) + " needs at least " +
                                     std::to_string(minimum) + " samples, got " +
                                     std::to_string(samples.values.size()) +
                                     (samples.label.empty() ? "" : " in group '" + samples.label + "'"));
    if (!samples.values.isFinite().all())
        throw degenerate_input_error(std::string(op) + ": non-finite sample value" +
                                     (samples.label.empty() ? "" : " in group '" + samples.label + "'"));
}

// Type-7 quantile on an ascending vector.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const auto n = sorted.size();
    double h = q * static_cast<double>(n - 1);
    auto lo = static_cast<size_t>(h);
    if (lo + 1 >= n)
        return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double fold_change_of_groups(const SampleSet& experiment, const SampleSet& control) {
    check_samples(experiment, 1, "fold change");
    check_samples(control, 1, "fold change");
    const double control_mean = control.values.mean();
    if (!(control_mean > 0.0))
        throw degenerate_input_error("control group mean must be positive, got " +
                                     std::to_string(control_mean));
    const double fc = experiment.values.mean() / control_mean;
    if (!(std::isfinite(fc) && fc > 0.0))
        throw degenerate_input_error("group means give a non-positive fold change");
    return fc;
}

FiveNumberSummary quantile_summary(const SampleSet& samples) {
    check_samples(samples, 5, "quantile summary");
    std::vector<double> sorted(samples.values.data(),
                               samples.values.data() + samples.values.size());
    std::sort(sorted.begin(), sorted.end());
    return FiveNumberSummary{samples.label,
                             sorted.front(),
                             quantile_sorted(sorted, 0.25),
                             quantile_sorted(sorted, 0.5),
                             quantile_sorted(sorted, 0.75),
                             sorted.back()};
}

DensityCurve kde_density(const SampleSet& samples, ScaleKind scale) {
    check_samples(samples, 5, "kernel density estimate");

    const Eigen::ArrayXd y = scale_forward(scale, samples.values);
    const auto n = y.size();
    const double mean = y.mean();
    const double sd = std::sqrt((y - mean).square().sum() / static_cast<double>(n - 1));
    if (!(sd > 0.0))
        throw degenerate_input_error("kernel density estimate needs nonzero variance" +
                                     (samples.label.empty() ? std::string()
                                                            : " in group '" + samples.label + "'"));

    std::vector<double> sorted(y.data(), y.data() + n);
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    double spread = sd;
    if (iqr > 0.0)
        spread = std::min(sd, iqr / 1.34);
    const double bandwidth =
        0.9 * spread * std::pow(static_cast<double>(n), -0.2);

    const double lo = sorted.front() - kKdeRangePaddingBandwidths * bandwidth;
    const double hi = sorted.back() + kKdeRangePaddingBandwidths * bandwidth;

    DensityCurve curve;
    curve.grid = Eigen::ArrayXd::LinSpaced(kKdeGridSize, lo, hi);
    curve.density.resize(kKdeGridSize);
    const double norm = 1.0 / (static_cast<double>(n) * bandwidth * std::sqrt(2.0 * M_PI));
    for (Eigen::Index j = 0; j < kKdeGridSize; ++j)
        curve.density[j] = norm * (-0.5 * ((y - curve.grid[j]) / bandwidth).square()).exp().sum();

    // Renormalize so the truncated grid carries exactly unit mass.
    const double dx = (hi - lo) / static_cast<double>(kKdeGridSize - 1);
    const double integral =
        dx * (curve.density.sum() - 0.5 * (curve.density[0] + curve.density[kKdeGridSize - 1]));
    curve.density /= integral;
    return curve;
}

std::pair<double, double> interval_from_fcz(double point_fc, double half_width) {
    detail::check_fold_change(point_fc);
    if (!(std::isfinite(half_width) && half_width >= 0.0))
        throw domain_error("interval half width must be finite and non-negative, got " +
                           std::to_string(half_width));
    const double center = mad_forward(point_fc);
    return {mad_inverse(center - half_width), mad_inverse(center + half_width)};
}

}  // namespace madfc
