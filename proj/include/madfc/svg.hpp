#pragma once

// Deterministic SVG renderers for the six fold change chart families, each
// parameterized by ScaleKind so any chart can be produced in log2, linear,
// and madfc variants.
//
// Every renderer is a pure function of (data, spec): repeated calls return
// byte-identical documents. Computed geometry is written with exactly three
// decimal places, and element order is fixed as data marks, then axes, then
// text labels. Data marks carry stable class names ("marker", "errorbar",
// "box", "violin", "cell", ...) so structural tests can read geometry back
// out of the document.

#include <cstdint>
#include <string>
#include <vector>

#include "madfc/table.hpp"
#include "madfc/ticks.hpp"

namespace madfc {

enum class ChartKind { volcano, ma, errorbar, box, violin, heatmap };

constexpr const char* to_string(ChartKind kind) {
    switch (kind) {
        case ChartKind::volcano: return "volcano";
        case ChartKind::ma: return "ma";
        case ChartKind::errorbar: return "errorbar";
        case ChartKind::box: return "box";
        case ChartKind::violin: return "violin";
        case ChartKind::heatmap: return "heatmap";
    }
    return "?";
}

inline ChartKind chart_kind_from_string(std::string_view name) {
    if (name == "volcano") return ChartKind::volcano;
    if (name == "ma") return ChartKind::ma;
    if (name == "errorbar") return ChartKind::errorbar;
    if (name == "box") return ChartKind::box;
    if (name == "violin") return ChartKind::violin;
    if (name == "heatmap") return ChartKind::heatmap;
    throw domain_error("unknown chart kind '" + std::string(name) + "'");
}

struct ChartSpec {
    ChartKind kind = ChartKind::volcano;
    ScaleKind scale = ScaleKind::madfc;
    LabelFormat label_format = LabelFormat::fraction;
    int width_px = 800;
    int height_px = 600;
    std::string title;
    int decimal_places = kDefaultDecimalPlaces;
    int tick_target = 7;
};

struct SvgDocument {
    std::string bytes;                   // UTF-8 SVG 1.1 text
    std::vector<std::string> warnings;   // e.g. p-value clamping notes
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    std::string hex() const;
};

// Diverging ramp endpoints (RdBu): full negative saturation, neutral
// reference, full positive saturation.
inline constexpr Rgb kRampNegative{33, 102, 172};
inline constexpr Rgb kRampNeutral{255, 255, 255};
inline constexpr Rgb kRampPositive{178, 24, 43};

// Diverging blue-white-red color for a fold change: the scale's coordinate,
// measured from the reference coordinate, is clamped to [-limit, +limit] and
// mapped linearly so the reference (fold change 1) is white and the clamp
// boundaries are the saturated endpoints.
Rgb map_color(double fc, ScaleKind scale, double limit);

SvgDocument render_volcano(const DETable& table, const ChartSpec& spec);
SvgDocument render_ma(const DETable& table, const ChartSpec& spec);
SvgDocument render_errorbar(const std::vector<GroupSummary>& groups, const ChartSpec& spec);
SvgDocument render_box(const std::vector<FiveNumberSummary>& summaries, const ChartSpec& spec);
SvgDocument render_box(const ExpressionMatrix& matrix, const ChartSpec& spec);
SvgDocument render_violin(const ExpressionMatrix& matrix, const ChartSpec& spec);
SvgDocument render_heatmap(const HeatmapTable& table, const ChartSpec& spec);

}  // namespace madfc
