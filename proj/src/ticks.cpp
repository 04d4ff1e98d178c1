#include "madfc/ticks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "madfc/text.hpp"

namespace madfc {

namespace {

// Reciprocals that miss an integer by no more than this still label as "1/d".
constexpr double kReciprocalSnapTolerance = 1e-9;

// Best rational approximation of x in (0, 1) by continued fraction
// convergents; stops once within kReciprocalSnapTolerance or the denominator
// grows past 10^6.
std::pair<std::int64_t, std::int64_t> rational_approximation(double x) {
    constexpr std::int64_t kMaxDenominator = 1000000;
    std::int64_t p_prev = 1, q_prev = 0;  // convergent k-1
    std::int64_t p = 0, q = 1;            // convergent k
    double frac = x;
    for (int i = 0; i < 64; ++i) {
        if (frac <= 0.0)
            break;
        double inv = 1.0 / frac;
        double a_floor = std::floor(inv);
        if (a_floor > static_cast<double>(kMaxDenominator))
            break;
        auto a = static_cast<std::int64_t>(a_floor);
        std::int64_t p_next = a * p + p_prev;
        std::int64_t q_next = a * q + q_prev;
        if (q_next > kMaxDenominator)
            break;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        if (std::fabs(x - static_cast<double>(p) / static_cast<double>(q)) <=
            kReciprocalSnapTolerance)
            break;
        frac = inv - a_floor;
    }
    if (q == 1 && p == 0)
        return {1, kMaxDenominator};  // x smaller than every representable convergent
    return {p, q};
}

// `places` counts significant fraction digits, so leading zeros after the
// decimal point extend the printed width (0.0032, not 0.00).
std::string decimal_label(double fc, int places) {
    if (places < 0)
        places = 0;
    int digits = places;
    if (fc < 1.0) {
        int leading = -1 - static_cast<int>(std::floor(std::log10(fc)));
        if (leading > 0)
            digits += leading;
    }
    digits = std::min(digits, 40);
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, fc);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    return s;
}

bool is_integer_reciprocal(double fc, double& d_out) {
    double r = 1.0 / fc;
    double d = std::round(r);
    if (d >= 1.0 && std::fabs(r - d) <= kReciprocalSnapTolerance) {
        d_out = d;
        return true;
    }
    return false;
}

// 1-2-5 ladder step represented exactly so neighbors are reachable in both
// directions.
struct LadderStep {
    int mantissa_index;  // 0 -> 1, 1 -> 2, 2 -> 5
    int exponent;

    double value() const {
        static constexpr double kMantissa[3] = {1.0, 2.0, 5.0};
        return kMantissa[mantissa_index] * std::pow(10.0, exponent);
    }
    LadderStep up() const {
        return mantissa_index == 2 ? LadderStep{0, exponent + 1}
                                   : LadderStep{mantissa_index + 1, exponent};
    }
    LadderStep down() const {
        return mantissa_index == 0 ? LadderStep{2, exponent - 1}
                                   : LadderStep{mantissa_index - 1, exponent};
    }
};

LadderStep ladder_step_at_least(double raw) {
    int exponent = static_cast<int>(std::floor(std::log10(raw)));
    LadderStep step{0, exponent};
    while (step.value() < raw * (1.0 - 1e-12))
        step = step.up();
    return step;
}

}  // namespace

namespace detail {

double nice_step_at_least(double raw) {
    return ladder_step_at_least(raw).value();
}

std::vector<double> nice_positions(double lo, double hi, int target_count) {
    const double tol = 1e-9 * (hi - lo);
    auto count_for = [&](const LadderStep& step) {
        auto k0 = static_cast<std::int64_t>(std::ceil((lo - tol) / step.value()));
        auto k1 = static_cast<std::int64_t>(std::floor((hi + tol) / step.value()));
        return k1 - k0 + 1;
    };

    LadderStep step = ladder_step_at_least((hi - lo) / std::max(1, target_count - 1));
    while (count_for(step) > target_count)
        step = step.up();
    while (count_for(step.down()) <= target_count)
        step = step.down();
    while (count_for(step) < 2)
        step = step.down();

    auto k0 = static_cast<std::int64_t>(std::ceil((lo - tol) / step.value()));
    auto k1 = static_cast<std::int64_t>(std::floor((hi + tol) / step.value()));
    std::vector<double> positions;
    positions.reserve(static_cast<size_t>(k1 - k0 + 1));
    for (std::int64_t k = k0; k <= k1; ++k) {
        double pos = static_cast<double>(k) * step.value();
        if (pos == 0.0)
            pos = 0.0;  // normalize -0.0
        positions.push_back(pos);
    }
    return positions;
}

}  // namespace detail

std::string format_label(double fc, LabelFormat format, int decimal_places) {
    detail::check_fold_change(fc);
    if (fc >= 1.0)
        return shortest_repr(fc);

    switch (format) {
        case LabelFormat::decimal:
            return decimal_label(fc, decimal_places);
        case LabelFormat::fraction: {
            double d;
            if (is_integer_reciprocal(fc, d))
                return "1/" + shortest_repr(d);
            auto [num, den] = rational_approximation(fc);
            return std::to_string(num) + "/" + std::to_string(den);
        }
        case LabelFormat::exponent: {
            double d;
            if (is_integer_reciprocal(fc, d))
                return shortest_repr(d) + "^-1";
            return shortest_repr(1.0 / fc) + "^-1";
        }
    }
    throw domain_error("unknown label format");
}

double parse_label(const std::string& label) {
    auto fail = [&]() -> double {
        throw parse_error("unrecognized axis label '" + label + "'");
    };

    double value = 0.0;
    if (label.size() > 3 && label.compare(label.size() - 3, 3, "^-1") == 0) {
        double base;
        if (!parse_double_strict(std::string_view(label).substr(0, label.size() - 3), base) ||
            !(base > 0.0) || !std::isfinite(base))
            return fail();
        value = 1.0 / base;
    } else if (auto slash = label.find('/'); slash != std::string::npos) {
        double num, den;
        if (!parse_double_strict(std::string_view(label).substr(0, slash), num) ||
            !parse_double_strict(std::string_view(label).substr(slash + 1), den) ||
            !(num > 0.0) || !(den > 0.0))
            return fail();
        value = num / den;
    } else {
        if (!parse_double_strict(label, value))
            return fail();
    }
    if (!(std::isfinite(value) && value > 0.0))
        return fail();
    return value;
}

TickSet generate_ticks(ScaleKind scale, double fc_min, double fc_max, int target_count,
                       LabelFormat format, int decimal_places) {
    if (!std::isfinite(fc_min) || !std::isfinite(fc_max) || fc_min <= 0.0 || fc_min >= fc_max)
        throw domain_error("tick range requires 0 < fc_min < fc_max, got [" +
                           std::to_string(fc_min) + ", " + std::to_string(fc_max) + "]");
    if (target_count < 3)
        throw domain_error("target tick count must be at least 3, got " +
                           std::to_string(target_count));

    const double lo = scale_forward(scale, fc_min);
    const double hi = scale_forward(scale, fc_max);

    TickSet ticks;
    ticks.scale = scale;
    ticks.format = format;
    ticks.positions = detail::nice_positions(lo, hi, target_count);

    // A tick must sit exactly on the reference coordinate whenever the range
    // spans it. Multiples of any step already contain 0, so this only ever
    // inserts for the linear scale (reference 1).
    const double ref = reference_coordinate(scale);
    if (lo <= ref && ref <= hi) {
        const double snap = 1e-9 * (hi - lo);
        auto at = std::lower_bound(ticks.positions.begin(), ticks.positions.end(), ref - snap);
        if (at == ticks.positions.end() || std::fabs(*at - ref) > snap)
            ticks.positions.insert(at, ref);
        else
            *at = ref;
    }

    ticks.labels.reserve(ticks.positions.size());
    for (double pos : ticks.positions)
        ticks.labels.push_back(format_label(scale_inverse(scale, pos), format, decimal_places));
    return ticks;
}

}  // namespace madfc
