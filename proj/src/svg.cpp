#include "madfc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "madfc/stats.hpp"
#include "madfc/text.hpp"

namespace madfc {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;
constexpr double kHeatmapLegendSpace = 72.0;  // extra right margin for the color legend
constexpr double kTickLength = 5.0;
constexpr double kMarkerRadius = 2.5;
constexpr double kPointRadius = 3.5;
constexpr double kRangePadFraction = 0.05;
constexpr int kLegendSteps = 64;

// Computed geometry is emitted at exactly three decimals so documents are
// byte-stable across platforms.
std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0)
        return std::string(buf + 1);
    return std::string(buf);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c; break;
        }
    }
    return out;
}

struct Frame {
    double x0, y0, w, h;
    double right() const { return x0 + w; }
    double bottom() const { return y0 + h; }
};

// Linear data-to-pixel map; construct with pixel endpoints in the desired
// orientation (y maps use bottom, top so larger data is higher on screen).
struct AxisMap {
    double d0, d1, p0, p1;
    double operator()(double v) const { return p0 + (v - d0) / (d1 - d0) * (p1 - p0); }
};

struct Range {
    double lo, hi;
};

Range padded(double lo, double hi) {
    double pad = kRangePadFraction * (hi - lo);
    if (pad <= 0.0)
        pad = std::max(1.0, std::fabs(lo) * kRangePadFraction);
    return {lo - pad, hi + pad};
}

// Axis range for a fold change axis, in transformed coordinates. madfc and
// log2 ranges become symmetric about 0 when the data spans the reference.
Range fc_axis_range(ScaleKind scale, double tmin, double tmax) {
    Range r = padded(tmin, tmax);
    if (scale != ScaleKind::linear && tmin <= 0.0 && tmax >= 0.0) {
        double limit = std::max(-r.lo, r.hi);
        r = {-limit, limit};
    }
    return r;
}

// Ticks covering the axis range. A padded linear axis (or a density grid)
// can dip below zero where no fold change exists; ticks stay inside the
// valid domain.
TickSet fc_ticks(ScaleKind scale, const Range& r, const ChartSpec& spec) {
    double lo = r.lo;
    if (scale == ScaleKind::linear && lo <= 0.0)
        lo = r.hi / 256.0;
    return generate_ticks(scale, scale_inverse(scale, lo), scale_inverse(scale, r.hi),
                          spec.tick_target, spec.label_format, spec.decimal_places);
}

struct PlainTick {
    double position;
    std::string label;
};

std::vector<PlainTick> plain_ticks(double lo, double hi, int target_count) {
    std::vector<PlainTick> ticks;
    for (double pos : detail::nice_positions(lo, hi, target_count))
        ticks.push_back({pos, shortest_repr(pos)});
    return ticks;
}

void check_common(const ChartSpec& spec, ChartKind expected) {
    if (spec.kind != expected)
        throw render_error(std::string("chart spec kind is '") + to_string(spec.kind) +
                           "' but the renderer draws '" + to_string(expected) + "'");
    if (spec.width_px < 100 || spec.height_px < 100)
        throw render_error("chart dimensions must be at least 100x100 px");
}

Frame frame_for(const ChartSpec& spec, double extra_right = 0.0) {
    return Frame{kMarginLeft, kMarginTop,
                 static_cast<double>(spec.width_px) - kMarginLeft - kMarginRight - extra_right,
                 static_cast<double>(spec.height_px) - kMarginTop - kMarginBottom};
}

std::string document(const ChartSpec& spec, const std::string& data, const std::string& axes,
                     const std::string& labels) {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px
        << "\" height=\"" << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << " "
        << spec.height_px << "\">\n"
        << "<rect class=\"background\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<g class=\"data\">\n" << data << "</g>\n"
        << "<g class=\"axes\" stroke=\"#000\" stroke-width=\"1\">\n" << axes << "</g>\n"
        << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#000\">\n"
        << labels << "</g>\n"
        << "</svg>\n";
    return svg.str();
}

void emit_frame(std::ostream& os, const Frame& f) {
    os << "<rect class=\"frame\" x=\"" << fmt3(f.x0) << "\" y=\"" << fmt3(f.y0) << "\" width=\""
       << fmt3(f.w) << "\" height=\"" << fmt3(f.h) << "\" fill=\"none\"/>\n";
}

void emit_x_tick_marks(std::ostream& os, const Frame& f, const AxisMap& x,
                       const std::vector<double>& positions) {
    for (double p : positions) {
        double px = x(p);
        os << "<line x1=\"" << fmt3(px) << "\" y1=\"" << fmt3(f.bottom()) << "\" x2=\"" << fmt3(px)
           << "\" y2=\"" << fmt3(f.bottom() + kTickLength) << "\"/>\n";
    }
}

void emit_y_tick_marks(std::ostream& os, const Frame& f, const AxisMap& y,
                       const std::vector<double>& positions) {
    for (double p : positions) {
        double py = y(p);
        os << "<line x1=\"" << fmt3(f.x0 - kTickLength) << "\" y1=\"" << fmt3(py) << "\" x2=\""
           << fmt3(f.x0) << "\" y2=\"" << fmt3(py) << "\"/>\n";
    }
}

void emit_x_tick_labels(std::ostream& os, const Frame& f, const AxisMap& x,
                        const std::vector<double>& positions,
                        const std::vector<std::string>& labels) {
    for (size_t i = 0; i < positions.size(); ++i)
        os << "<text x=\"" << fmt3(x(positions[i])) << "\" y=\"" << fmt3(f.bottom() + 18.0)
           << "\" text-anchor=\"middle\">" << xml_escape(labels[i]) << "</text>\n";
}

void emit_y_tick_labels(std::ostream& os, const Frame& f, const AxisMap& y,
                        const std::vector<double>& positions,
                        const std::vector<std::string>& labels) {
    for (size_t i = 0; i < positions.size(); ++i)
        os << "<text x=\"" << fmt3(f.x0 - kTickLength - 4.0) << "\" y=\""
           << fmt3(y(positions[i]) + 3.5) << "\" text-anchor=\"end\">" << xml_escape(labels[i])
           << "</text>\n";
}

void emit_axis_titles(std::ostream& os, const ChartSpec& spec, const Frame& f,
                      const std::string& x_title, const std::string& y_title) {
    if (!x_title.empty())
        os << "<text x=\"" << fmt3(f.x0 + f.w / 2.0) << "\" y=\"" << fmt3(f.bottom() + 40.0)
           << "\" text-anchor=\"middle\">" << xml_escape(x_title) << "</text>\n";
    if (!y_title.empty()) {
        double cx = f.x0 - 46.0;
        double cy = f.y0 + f.h / 2.0;
        os << "<text x=\"" << fmt3(cx) << "\" y=\"" << fmt3(cy)
           << "\" text-anchor=\"middle\" transform=\"rotate(-90," << fmt3(cx) << "," << fmt3(cy)
           << ")\">" << xml_escape(y_title) << "</text>\n";
    }
    if (!spec.title.empty())
        os << "<text x=\"" << fmt3(f.x0 + f.w / 2.0) << "\" y=\"" << fmt3(f.y0 - 16.0)
           << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(spec.title)
           << "</text>\n";
}

void emit_category_labels(std::ostream& os, const Frame& f,
                          const std::vector<std::string>& labels) {
    const double slot = f.w / static_cast<double>(labels.size());
    for (size_t i = 0; i < labels.size(); ++i)
        os << "<text x=\"" << fmt3(f.x0 + (static_cast<double>(i) + 0.5) * slot) << "\" y=\""
           << fmt3(f.bottom() + 18.0) << "\" text-anchor=\"middle\">" << xml_escape(labels[i])
           << "</text>\n";
}

std::string fc_axis_title(ScaleKind scale) {
    return std::string("fold change (") + to_string(scale) + ")";
}

// Vertical (volcano) or horizontal reference line at the no-change
// coordinate, drawn only when the axis range contains it.
void emit_vertical_refline(std::ostream& os, const Frame& f, const AxisMap& x, ScaleKind scale,
                           const Range& range) {
    const double ref = reference_coordinate(scale);
    if (ref < range.lo || ref > range.hi)
        return;
    os << "<line class=\"refline\" x1=\"" << fmt3(x(ref)) << "\" y1=\"" << fmt3(f.y0) << "\" x2=\""
       << fmt3(x(ref)) << "\" y2=\"" << fmt3(f.bottom()) << "\" stroke-dasharray=\"4,3\"/>\n";
}

void emit_horizontal_refline(std::ostream& os, const Frame& f, const AxisMap& y, ScaleKind scale,
                             const Range& range) {
    const double ref = reference_coordinate(scale);
    if (ref < range.lo || ref > range.hi)
        return;
    os << "<line class=\"refline\" x1=\"" << fmt3(f.x0) << "\" y1=\"" << fmt3(y(ref)) << "\" x2=\""
       << fmt3(f.right()) << "\" y2=\"" << fmt3(y(ref)) << "\" stroke-dasharray=\"4,3\"/>\n";
}

Rgb ramp(double t) {
    const Rgb& endpoint = t >= 0.0 ? kRampPositive : kRampNegative;
    const double a = std::fabs(t);
    auto channel = [a](std::uint8_t from, std::uint8_t to) {
        return static_cast<std::uint8_t>(
            std::lround(static_cast<double>(from) + a * (static_cast<double>(to) - from)));
    };
    return Rgb{channel(kRampNeutral.r, endpoint.r), channel(kRampNeutral.g, endpoint.g),
               channel(kRampNeutral.b, endpoint.b)};
}

}  // namespace

std::string Rgb::hex() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return std::string(buf);
}

Rgb map_color(double fc, ScaleKind scale, double limit) {
    if (!(std::isfinite(limit) && limit > 0.0))
        throw domain_error("color limit must be finite and positive, got " +
                           std::to_string(limit));
    const double coordinate = scale_forward(scale, fc) - reference_coordinate(scale);
    const double t = std::clamp(coordinate, -limit, limit) / limit;
    return ramp(t);
}

SvgDocument render_volcano(const DETable& table, const ChartSpec& spec) {
    check_common(spec, ChartKind::volcano);
    if (table.records.empty())
        throw render_error("volcano plot needs at least one record");

    SvgDocument doc;

    // -log10(0) is infinite; zero (or negative) p-values are clamped to the
    // smallest positive p-value present in the table.
    double min_positive_p = std::numeric_limits<double>::min();
    bool any_positive = false;
    for (const auto& r : table.records)
        if (r.p_value > 0.0) {
            min_positive_p = any_positive ? std::min(min_positive_p, r.p_value) : r.p_value;
            any_positive = true;
        }
    if (!any_positive)
        min_positive_p = std::numeric_limits<double>::min();

    std::vector<double> xs, ys;
    int clamped = 0;
    for (const auto& r : table.records) {
        xs.push_back(scale_forward(spec.scale, r.fc));
        double p = r.p_value;
        if (!(p > 0.0)) {
            p = min_positive_p;
            ++clamped;
        }
        ys.push_back(-std::log10(p));
    }
    if (clamped > 0)
        doc.warnings.push_back("clamped " + std::to_string(clamped) +
                               " non-positive p-value(s) to " + shortest_repr(min_positive_p));

    const Range xr = fc_axis_range(spec.scale, *std::min_element(xs.begin(), xs.end()),
                                   *std::max_element(xs.begin(), xs.end()));
    const Range yr = padded(*std::min_element(ys.begin(), ys.end()),
                            *std::max_element(ys.begin(), ys.end()));

    const Frame f = frame_for(spec);
    const AxisMap x{xr.lo, xr.hi, f.x0, f.right()};
    const AxisMap y{yr.lo, yr.hi, f.bottom(), f.y0};

    const TickSet xticks = fc_ticks(spec.scale, xr, spec);
    const auto yticks = plain_ticks(yr.lo, yr.hi, spec.tick_target);

    std::ostringstream data;
    for (size_t i = 0; i < xs.size(); ++i)
        data << "<circle class=\"marker\" cx=\"" << fmt3(x(xs[i])) << "\" cy=\"" << fmt3(y(ys[i]))
             << "\" r=\"" << fmt3(kMarkerRadius) << "\" fill=\"#1f4e79\" fill-opacity=\"0.7\"/>\n";

    std::ostringstream axes;
    emit_frame(axes, f);
    emit_vertical_refline(axes, f, x, spec.scale, xr);
    emit_x_tick_marks(axes, f, x, xticks.positions);
    std::vector<double> ypos;
    std::vector<std::string> ylabels;
    for (const auto& t : yticks) {
        ypos.push_back(t.position);
        ylabels.push_back(t.label);
    }
    emit_y_tick_marks(axes, f, y, ypos);

    std::ostringstream labels;
    emit_x_tick_labels(labels, f, x, xticks.positions, xticks.labels);
    emit_y_tick_labels(labels, f, y, ypos, ylabels);
    emit_axis_titles(labels, spec, f, fc_axis_title(spec.scale), "-log10 p-value");

    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

SvgDocument render_ma(const DETable& table, const ChartSpec& spec) {
    check_common(spec, ChartKind::ma);
    if (table.records.empty())
        throw render_error("MA plot needs at least one record");

    std::vector<double> xs, ys;
    for (const auto& r : table.records) {
        xs.push_back(std::log10(r.base_mean + 1.0));
        ys.push_back(scale_forward(spec.scale, r.fc));
    }

    const Range xr = padded(*std::min_element(xs.begin(), xs.end()),
                            *std::max_element(xs.begin(), xs.end()));
    const Range yr = fc_axis_range(spec.scale, *std::min_element(ys.begin(), ys.end()),
                                   *std::max_element(ys.begin(), ys.end()));

    const Frame f = frame_for(spec);
    const AxisMap x{xr.lo, xr.hi, f.x0, f.right()};
    const AxisMap y{yr.lo, yr.hi, f.bottom(), f.y0};

    const auto xticks = plain_ticks(xr.lo, xr.hi, spec.tick_target);
    const TickSet yticks = fc_ticks(spec.scale, yr, spec);

    std::ostringstream data;
    for (size_t i = 0; i < xs.size(); ++i)
        data << "<circle class=\"marker\" cx=\"" << fmt3(x(xs[i])) << "\" cy=\"" << fmt3(y(ys[i]))
             << "\" r=\"" << fmt3(kMarkerRadius) << "\" fill=\"#1f4e79\" fill-opacity=\"0.7\"/>\n";

    std::ostringstream axes;
    emit_frame(axes, f);
    emit_horizontal_refline(axes, f, y, spec.scale, yr);
    std::vector<double> xpos;
    std::vector<std::string> xlabels;
    for (const auto& t : xticks) {
        xpos.push_back(t.position);
        xlabels.push_back(t.label);
    }
    emit_x_tick_marks(axes, f, x, xpos);
    emit_y_tick_marks(axes, f, y, yticks.positions);

    std::ostringstream labels;
    emit_x_tick_labels(labels, f, x, xpos, xlabels);
    emit_y_tick_labels(labels, f, y, yticks.positions, yticks.labels);
    emit_axis_titles(labels, spec, f, "log10(mean count + 1)", fc_axis_title(spec.scale));

    SvgDocument doc;
    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

SvgDocument render_errorbar(const std::vector<GroupSummary>& groups, const ChartSpec& spec) {
    check_common(spec, ChartKind::errorbar);
    if (groups.empty())
        throw render_error("error-bar chart needs at least one group");

    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -std::numeric_limits<double>::infinity();
    for (const auto& g : groups) {
        tmin = std::min(tmin, scale_forward(spec.scale, g.lower_fc));
        tmax = std::max(tmax, scale_forward(spec.scale, g.upper_fc));
    }
    const Range yr = fc_axis_range(spec.scale, tmin, tmax);

    const Frame f = frame_for(spec);
    const AxisMap y{yr.lo, yr.hi, f.bottom(), f.y0};
    const double slot = f.w / static_cast<double>(groups.size());

    const TickSet yticks = fc_ticks(spec.scale, yr, spec);

    std::ostringstream data;
    std::vector<std::string> names;
    for (size_t i = 0; i < groups.size(); ++i) {
        const auto& g = groups[i];
        names.push_back(g.label);
        const double cx = f.x0 + (static_cast<double>(i) + 0.5) * slot;
        if (g.upper_fc > g.lower_fc)
            data << "<line class=\"errorbar\" x1=\"" << fmt3(cx) << "\" y1=\""
                 << fmt3(y(scale_forward(spec.scale, g.upper_fc))) << "\" x2=\"" << fmt3(cx)
                 << "\" y2=\"" << fmt3(y(scale_forward(spec.scale, g.lower_fc)))
                 << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        data << "<circle class=\"point\" cx=\"" << fmt3(cx) << "\" cy=\""
             << fmt3(y(scale_forward(spec.scale, g.point_fc))) << "\" r=\"" << fmt3(kPointRadius)
             << "\" fill=\"#1f4e79\"/>\n";
    }

    std::ostringstream axes;
    emit_frame(axes, f);
    emit_horizontal_refline(axes, f, y, spec.scale, yr);
    emit_y_tick_marks(axes, f, y, yticks.positions);

    std::ostringstream labels;
    emit_category_labels(labels, f, names);
    emit_y_tick_labels(labels, f, y, yticks.positions, yticks.labels);
    emit_axis_titles(labels, spec, f, "", fc_axis_title(spec.scale));

    SvgDocument doc;
    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

SvgDocument render_box(const std::vector<FiveNumberSummary>& summaries, const ChartSpec& spec) {
    check_common(spec, ChartKind::box);
    if (summaries.empty())
        throw render_error("box plot needs at least one group");

    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -std::numeric_limits<double>::infinity();
    for (const auto& s : summaries) {
        tmin = std::min(tmin, scale_forward(spec.scale, s.min));
        tmax = std::max(tmax, scale_forward(spec.scale, s.max));
    }
    const Range yr = fc_axis_range(spec.scale, tmin, tmax);

    const Frame f = frame_for(spec);
    const AxisMap y{yr.lo, yr.hi, f.bottom(), f.y0};
    const double slot = f.w / static_cast<double>(summaries.size());
    const double half_box = 0.3 * slot;

    const TickSet yticks = fc_ticks(spec.scale, yr, spec);

    std::ostringstream data;
    std::vector<std::string> names;
    for (size_t i = 0; i < summaries.size(); ++i) {
        const auto& s = summaries[i];
        names.push_back(s.label);
        const double cx = f.x0 + (static_cast<double>(i) + 0.5) * slot;
        const double py_min = y(scale_forward(spec.scale, s.min));
        const double py_q1 = y(scale_forward(spec.scale, s.q1));
        const double py_med = y(scale_forward(spec.scale, s.median));
        const double py_q3 = y(scale_forward(spec.scale, s.q3));
        const double py_max = y(scale_forward(spec.scale, s.max));

        data << "<g class=\"boxgroup\">\n";
        data << "<line class=\"whisker\" x1=\"" << fmt3(cx) << "\" y1=\"" << fmt3(py_min)
             << "\" x2=\"" << fmt3(cx) << "\" y2=\"" << fmt3(py_q1) << "\" stroke=\"#333\"/>\n";
        data << "<line class=\"whisker\" x1=\"" << fmt3(cx) << "\" y1=\"" << fmt3(py_q3)
             << "\" x2=\"" << fmt3(cx) << "\" y2=\"" << fmt3(py_max) << "\" stroke=\"#333\"/>\n";
        data << "<line class=\"cap\" x1=\"" << fmt3(cx - half_box / 2.0) << "\" y1=\""
             << fmt3(py_min) << "\" x2=\"" << fmt3(cx + half_box / 2.0) << "\" y2=\""
             << fmt3(py_min) << "\" stroke=\"#333\"/>\n";
        data << "<line class=\"cap\" x1=\"" << fmt3(cx - half_box / 2.0) << "\" y1=\""
             << fmt3(py_max) << "\" x2=\"" << fmt3(cx + half_box / 2.0) << "\" y2=\""
             << fmt3(py_max) << "\" stroke=\"#333\"/>\n";
        data << "<rect class=\"box\" x=\"" << fmt3(cx - half_box) << "\" y=\"" << fmt3(py_q3)
             << "\" width=\"" << fmt3(2.0 * half_box) << "\" height=\"" << fmt3(py_q1 - py_q3)
             << "\" fill=\"#9dc3e6\" stroke=\"#333\"/>\n";
        data << "<line class=\"median\" x1=\"" << fmt3(cx - half_box) << "\" y1=\""
             << fmt3(py_med) << "\" x2=\"" << fmt3(cx + half_box) << "\" y2=\"" << fmt3(py_med)
             << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        data << "</g>\n";
    }

    std::ostringstream axes;
    emit_frame(axes, f);
    emit_horizontal_refline(axes, f, y, spec.scale, yr);
    emit_y_tick_marks(axes, f, y, yticks.positions);

    std::ostringstream labels;
    emit_category_labels(labels, f, names);
    emit_y_tick_labels(labels, f, y, yticks.positions, yticks.labels);
    emit_axis_titles(labels, spec, f, "", fc_axis_title(spec.scale));

    SvgDocument doc;
    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

namespace {

// One box per (gene, group) cell, gene-major; single-gene matrices keep the
// plain group labels.
std::vector<SampleSet> flatten_cells(const ExpressionMatrix& matrix) {
    std::vector<SampleSet> flat;
    const bool single_gene = matrix.gene_labels.size() == 1;
    for (size_t g = 0; g < matrix.gene_labels.size(); ++g)
        for (size_t h = 0; h < matrix.group_labels.size(); ++h) {
            SampleSet cell = matrix.cells[g][h];
            cell.label = single_gene ? matrix.group_labels[h]
                                     : matrix.gene_labels[g] + ":" + matrix.group_labels[h];
            flat.push_back(std::move(cell));
        }
    return flat;
}

}  // namespace

SvgDocument render_box(const ExpressionMatrix& matrix, const ChartSpec& spec) {
    check_common(spec, ChartKind::box);
    std::vector<FiveNumberSummary> summaries;
    for (auto& cell : flatten_cells(matrix))
        summaries.push_back(quantile_summary(cell));
    return render_box(summaries, spec);
}

SvgDocument render_violin(const ExpressionMatrix& matrix, const ChartSpec& spec) {
    check_common(spec, ChartKind::violin);
    const auto cells = flatten_cells(matrix);
    if (cells.empty())
        throw render_error("violin plot needs at least one group");

    std::vector<DensityCurve> curves;
    double max_density = 0.0;
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -std::numeric_limits<double>::infinity();
    for (const auto& cell : cells) {
        DensityCurve curve = kde_density(cell, spec.scale);
        max_density = std::max(max_density, curve.density.maxCoeff());
        tmin = std::min(tmin, curve.grid[0]);
        tmax = std::max(tmax, curve.grid[curve.grid.size() - 1]);
        curves.push_back(std::move(curve));
    }
    const Range yr = fc_axis_range(spec.scale, tmin, tmax);

    const Frame f = frame_for(spec);
    const AxisMap y{yr.lo, yr.hi, f.bottom(), f.y0};
    const double slot = f.w / static_cast<double>(cells.size());
    const double half_width = 0.42 * slot;

    const TickSet yticks = fc_ticks(spec.scale, yr, spec);

    std::ostringstream data;
    std::vector<std::string> names;
    for (size_t i = 0; i < curves.size(); ++i) {
        names.push_back(cells[i].label);
        const double cx = f.x0 + (static_cast<double>(i) + 0.5) * slot;
        const auto& curve = curves[i];
        const auto n = curve.grid.size();
        data << "<polygon class=\"violin\" points=\"";
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j > 0)
                data << " ";
            double w = curve.density[j] / max_density * half_width;
            data << fmt3(cx - w) << "," << fmt3(y(curve.grid[j]));
        }
        for (Eigen::Index j = n - 1; j >= 0; --j) {
            double w = curve.density[j] / max_density * half_width;
            data << " " << fmt3(cx + w) << "," << fmt3(y(curve.grid[j]));
        }
        data << "\" fill=\"#9dc3e6\" stroke=\"#333\"/>\n";
    }

    std::ostringstream axes;
    emit_frame(axes, f);
    emit_horizontal_refline(axes, f, y, spec.scale, yr);
    emit_y_tick_marks(axes, f, y, yticks.positions);

    std::ostringstream labels;
    emit_category_labels(labels, f, names);
    emit_y_tick_labels(labels, f, y, yticks.positions, yticks.labels);
    emit_axis_titles(labels, spec, f, "", fc_axis_title(spec.scale));

    SvgDocument doc;
    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

SvgDocument render_heatmap(const HeatmapTable& table, const ChartSpec& spec) {
    check_common(spec, ChartKind::heatmap);
    const auto rows = table.cells.rows();
    const auto cols = table.cells.cols();
    if (rows == 0 || cols == 0)
        throw render_error("heatmap needs at least one cell");

    const double ref = reference_coordinate(spec.scale);
    double limit = 0.0;
    double fc_min = std::numeric_limits<double>::infinity();
    double fc_max = 0.0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double fc = table.cells(r, c);
            limit = std::max(limit, std::fabs(scale_forward(spec.scale, fc) - ref));
            fc_min = std::min(fc_min, fc);
            fc_max = std::max(fc_max, fc);
        }
    if (limit == 0.0)
        limit = 1.0;

    const Frame f = frame_for(spec, kHeatmapLegendSpace);
    const double cw = f.w / static_cast<double>(cols);
    const double rh = f.h / static_cast<double>(rows);

    std::ostringstream data;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            data << "<rect class=\"cell\" x=\"" << fmt3(f.x0 + static_cast<double>(c) * cw)
                 << "\" y=\"" << fmt3(f.y0 + static_cast<double>(r) * rh) << "\" width=\""
                 << fmt3(cw) << "\" height=\"" << fmt3(rh) << "\" fill=\""
                 << map_color(table.cells(r, c), spec.scale, limit).hex() << "\"/>\n";

    // Color legend: a vertical ramp from +limit (top) to -limit (bottom),
    // with ticks labeled in fold change.
    const double legend_x = f.right() + 16.0;
    const double legend_w = 14.0;
    const double step_h = f.h / static_cast<double>(kLegendSteps);
    for (int s = 0; s < kLegendSteps; ++s) {
        const double t = 1.0 - 2.0 * (static_cast<double>(s) + 0.5) / kLegendSteps;
        data << "<rect class=\"legend-step\" x=\"" << fmt3(legend_x) << "\" y=\""
             << fmt3(f.y0 + static_cast<double>(s) * step_h) << "\" width=\"" << fmt3(legend_w)
             << "\" height=\"" << fmt3(step_h) << "\" fill=\"" << ramp(t).hex() << "\"/>\n";
    }

    std::ostringstream axes;
    emit_frame(axes, f);
    axes << "<rect class=\"legend-frame\" x=\"" << fmt3(legend_x) << "\" y=\"" << fmt3(f.y0)
         << "\" width=\"" << fmt3(legend_w) << "\" height=\"" << fmt3(f.h)
         << "\" fill=\"none\"/>\n";

    std::ostringstream labels;
    for (Eigen::Index r = 0; r < rows; ++r)
        labels << "<text x=\"" << fmt3(f.x0 - 6.0) << "\" y=\""
               << fmt3(f.y0 + (static_cast<double>(r) + 0.5) * rh + 3.5)
               << "\" text-anchor=\"end\">" << xml_escape(table.row_labels[static_cast<size_t>(r)])
               << "</text>\n";
    for (Eigen::Index c = 0; c < cols; ++c)
        labels << "<text x=\"" << fmt3(f.x0 + (static_cast<double>(c) + 0.5) * cw) << "\" y=\""
               << fmt3(f.bottom() + 18.0) << "\" text-anchor=\"middle\">"
               << xml_escape(table.column_labels[static_cast<size_t>(c)]) << "</text>\n";

    // Legend tick labels over the data's fold change range.
    double tick_lo = fc_min, tick_hi = fc_max;
    if (!(tick_lo < tick_hi)) {
        tick_lo = fc_min / 2.0;
        tick_hi = fc_min * 2.0;
    }
    const TickSet legend_ticks = generate_ticks(spec.scale, tick_lo, tick_hi, 5,
                                                spec.label_format, spec.decimal_places);
    for (size_t i = 0; i < legend_ticks.positions.size(); ++i) {
        const double coordinate = legend_ticks.positions[i] - ref;
        if (coordinate < -limit || coordinate > limit)
            continue;
        const double py = f.y0 + (1.0 - (coordinate + limit) / (2.0 * limit)) * f.h;
        labels << "<text class=\"legend-tick\" x=\"" << fmt3(legend_x + legend_w + 4.0)
               << "\" y=\"" << fmt3(py + 3.5) << "\">" << xml_escape(legend_ticks.labels[i])
               << "</text>\n";
    }
    if (!spec.title.empty())
        labels << "<text x=\"" << fmt3(f.x0 + f.w / 2.0) << "\" y=\"" << fmt3(f.y0 - 16.0)
               << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(spec.title)
               << "</text>\n";

    SvgDocument doc;
    doc.bytes = document(spec, data.str(), axes.str(), labels.str());
    return doc;
}

}  // namespace madfc
