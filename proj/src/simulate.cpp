#include "madfc/simulate.hpp"

#include <cmath>
#include <random>

namespace madfc {

namespace detail {

double group_center(int index, int group_count) {
    return static_cast<double>(-(group_count - 1) + 2 * index);
}

Eigen::ArrayXd standard_normal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // 53-bit mantissa draw in [0, 1).
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    Eigen::ArrayXd out(n);
    int filled = 0;
    double spare = 0.0;
    bool have_spare = false;
    while (filled < n) {
        if (have_spare) {
            out[filled++] = spare;
            have_spare = false;
            continue;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        out[filled++] = u * m;
        spare = v * m;
        have_spare = true;
    }
    return out;
}

}  // namespace detail

std::vector<GroupSummary> simulate_interval_dataset(int group_count, std::uint64_t /*seed*/) {
    if (group_count < 2)
        throw domain_error("interval dataset needs at least 2 groups, got " +
                           std::to_string(group_count));
    std::vector<GroupSummary> groups;
    groups.reserve(static_cast<size_t>(group_count));
    for (int i = 0; i < group_count; ++i) {
        GroupSummary g;
        g.label = "group " + std::to_string(i + 1);
        g.point_fc = mad_inverse(detail::group_center(i, group_count));
        auto [lower, upper] = interval_from_fcz(g.point_fc, kIntervalHalfWidthFcz);
        g.lower_fc = lower;
        g.upper_fc = upper;
        g.interval_kind = "confidence interval";
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<FiveNumberSummary> simulate_boxplot_dataset(std::uint64_t /*seed*/) {
    std::vector<FiveNumberSummary> summaries;
    int index = 0;
    for (int median_coord = -8; median_coord <= 8; median_coord += 2) {
        FiveNumberSummary s;
        s.label = "group " + std::to_string(++index);
        s.min = mad_inverse(static_cast<double>(median_coord - 4));
        s.q1 = mad_inverse(static_cast<double>(median_coord - 2));
        s.median = mad_inverse(static_cast<double>(median_coord));
        s.q3 = mad_inverse(static_cast<double>(median_coord + 2));
        s.max = mad_inverse(static_cast<double>(median_coord + 4));
        summaries.push_back(std::move(s));
    }
    return summaries;
}

ExpressionMatrix simulate_violin_dataset(int group_count, int samples_per_group,
                                         double sigma_fcz, std::uint64_t seed) {
    if (group_count < 2)
        throw domain_error("violin dataset needs at least 2 groups, got " +
                           std::to_string(group_count));
    if (samples_per_group < 50)
        throw domain_error("violin dataset needs at least 50 samples per group, got " +
                           std::to_string(samples_per_group));
    if (!(std::isfinite(sigma_fcz) && sigma_fcz > 0.0))
        throw domain_error("violin dispersion must be finite and positive, got " +
                           std::to_string(sigma_fcz));

    const Eigen::ArrayXd deviates = detail::standard_normal(samples_per_group, seed);

    ExpressionMatrix matrix;
    matrix.gene_labels = {"sim"};
    matrix.cells.resize(1);
    for (int i = 0; i < group_count; ++i) {
        const double center = detail::group_center(i, group_count);
        std::string label = "group " + std::to_string(i + 1);
        matrix.group_labels.push_back(label);
        matrix.cells[0].push_back(
            SampleSet{std::move(label), mad_inverse(center + sigma_fcz * deviates)});
    }
    return matrix;
}

}  // namespace madfc
