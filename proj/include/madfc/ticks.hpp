#pragma once

// Tick placement and axis labeling for fold change axes.
//
// madfc and log2 axes get ticks at even steps in transformed space, and every
// label is the pre-transform fold change of its position, so original values
// read straight off the axis. Negative-direction fold changes render as
// decimals ("0.33"), fractions ("1/3"), or reciprocal exponents ("3^-1");
// values at or above 1 render the same way in every format.

#include <string>
#include <string_view>
#include <vector>

#include "madfc/transform.hpp"

namespace madfc {

enum class LabelFormat { decimal, fraction, exponent };

constexpr const char* to_string(LabelFormat format) {
    switch (format) {
        case LabelFormat::decimal: return "decimal";
        case LabelFormat::fraction: return "fraction";
        case LabelFormat::exponent: return "exponent";
    }
    return "?";
}

inline LabelFormat label_format_from_string(std::string_view name) {
    if (name == "decimal") return LabelFormat::decimal;
    if (name == "fraction") return LabelFormat::fraction;
    if (name == "exponent") return LabelFormat::exponent;
    throw domain_error("unknown label format '" + std::string(name) +
                       "' (expected decimal, fraction, or exponent)");
}

// Fractional digits used by LabelFormat::decimal for fold changes below 1.
inline constexpr int kDefaultDecimalPlaces = 2;

struct TickSet {
    ScaleKind scale = ScaleKind::madfc;
    LabelFormat format = LabelFormat::fraction;
    std::vector<double> positions;    // transformed-space coordinates, strictly increasing
    std::vector<std::string> labels;  // labels[i] reads back the fold change at positions[i]
};

// Renders a fold change for an axis label. Values >= 1 use the shortest exact
// decimal in every format.
std::string format_label(double fc, LabelFormat format,
                         int decimal_places = kDefaultDecimalPlaces);

// Reads back any string produced by format_label. Throws parse_error on
// unrecognized syntax or a non-positive value.
double parse_label(const std::string& label);

// Ticks spanning [scale_forward(fc_min), scale_forward(fc_max)]. Steps come
// from the 1-2-5 ladder in transformed space, widened until at most
// target_count ticks fit; a tick lands exactly on the reference coordinate
// whenever the range spans it.
TickSet generate_ticks(ScaleKind scale, double fc_min, double fc_max, int target_count,
                       LabelFormat format = LabelFormat::fraction,
                       int decimal_places = kDefaultDecimalPlaces);

namespace detail {

// Smallest step of the form {1,2,5} * 10^k that is >= raw.
double nice_step_at_least(double raw);

// Multiples of a 1-2-5 ladder step inside [lo, hi], using the finest step
// that keeps the count within target_count (always at least two positions).
std::vector<double> nice_positions(double lo, double hi, int target_count);

}  // namespace detail

}  // namespace madfc
