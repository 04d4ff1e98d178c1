#include "madfc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "madfc/simulate.hpp"
#include "madfc/svg.hpp"
#include "madfc/text.hpp"

namespace madfc {

namespace {

constexpr int kDefaultIntervalGroups = 5;
constexpr int kDefaultViolinGroups = 5;
constexpr int kDefaultViolinSamples = 200;
constexpr double kDefaultViolinSigma = 1.0;

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot open output file '" + path + "' for writing");
    out << bytes;
    if (!out.good())
        throw error("failed while writing output file '" + path + "'");
}

void warn_dynamic_range(const std::vector<double>& fold_changes, std::ostream& err) {
    for (double fc : fold_changes) {
        if (std::fabs(mad_forward(fc)) > kDynamicRangeLimitMad) {
            err << "warning: dataset exceeds the MAD-FC dynamic range (|coordinate| > "
                << shortest_repr(kDynamicRangeLimitMad)
                << " fold change units); a log2 scale may read better\n";
            return;
        }
    }
}

// Box input is either an expression matrix or a precomputed five-number
// table; the first header cell tells them apart.
bool box_input_is_matrix(const std::string& text, char delimiter) {
    const std::string head = text.substr(0, text.find('\n'));
    const std::string first = head.substr(0, head.find(delimiter));
    if (first == "gene")
        return true;
    if (first == "group")
        return false;
    throw parse_error("box input must start with a 'gene,group,s1,...' or "
                      "'group,min,q1,median,q3,max' header, got first column '" + first + "'",
                      1, 1);
}

struct PlotArgs {
    std::string kind;
    std::string input;
    std::string output;
    std::string scale = "madfc";
    std::string format = "fraction";
    std::string fc_mode = "fc";
    std::string delimiter = ",";
    std::string title;
    int width = 800;
    int height = 600;
    int decimal_places = kDefaultDecimalPlaces;

    char delimiter_char() const { return delimiter[0]; }
};

void run_plot(const PlotArgs& args, std::ostream& err) {
    ChartSpec spec;
    spec.kind = chart_kind_from_string(args.kind);
    spec.scale = scale_kind_from_string(args.scale);
    spec.label_format = label_format_from_string(args.format);
    spec.width_px = args.width;
    spec.height_px = args.height;
    spec.title = args.title;
    spec.decimal_places = args.decimal_places;

    const std::string text = slurp_file(args.input);
    const char delimiter = args.delimiter_char();

    SvgDocument doc;
    std::vector<double> fold_changes;
    switch (spec.kind) {
        case ChartKind::volcano:
        case ChartKind::ma: {
            DETable table = parse_de_table(
                text, DeParseOptions{delimiter, fc_column_mode_from_string(args.fc_mode)});
            table.source = args.input;
            for (const auto& r : table.records)
                fold_changes.push_back(r.fc);
            doc = spec.kind == ChartKind::volcano ? render_volcano(table, spec)
                                                  : render_ma(table, spec);
            break;
        }
        case ChartKind::errorbar: {
            auto groups = parse_group_summaries(text, delimiter);
            for (const auto& g : groups) {
                fold_changes.push_back(g.lower_fc);
                fold_changes.push_back(g.point_fc);
                fold_changes.push_back(g.upper_fc);
            }
            doc = render_errorbar(groups, spec);
            break;
        }
        case ChartKind::box: {
            if (box_input_is_matrix(text, delimiter)) {
                auto matrix = parse_expression_matrix(text, delimiter);
                for (const auto& row : matrix.cells)
                    for (const auto& cell : row)
                        fold_changes.insert(fold_changes.end(), cell.values.data(),
                                            cell.values.data() + cell.values.size());
                doc = render_box(matrix, spec);
            } else {
                auto summaries = parse_five_number_summaries(text, delimiter);
                for (const auto& s : summaries) {
                    fold_changes.push_back(s.min);
                    fold_changes.push_back(s.max);
                }
                doc = render_box(summaries, spec);
            }
            break;
        }
        case ChartKind::violin: {
            auto matrix = parse_expression_matrix(text, delimiter);
            for (const auto& row : matrix.cells)
                for (const auto& cell : row)
                    fold_changes.insert(fold_changes.end(), cell.values.data(),
                                        cell.values.data() + cell.values.size());
            doc = render_violin(matrix, spec);
            break;
        }
        case ChartKind::heatmap: {
            auto table = parse_heatmap_table(text, delimiter);
            fold_changes.assign(table.cells.data(), table.cells.data() + table.cells.size());
            doc = render_heatmap(table, spec);
            break;
        }
    }

    write_file(args.output, doc.bytes);
    for (const auto& warning : doc.warnings)
        err << "warning: " << warning << "\n";
    warn_dynamic_range(fold_changes, err);
}

struct SimulateArgs {
    std::string kind;
    std::string output;
    std::uint64_t seed = 1;
    int groups = 0;  // 0 = per-figure default
    int samples = kDefaultViolinSamples;
    double sigma = kDefaultViolinSigma;
};

void run_simulate(const SimulateArgs& args) {
    std::string bytes;
    if (args.kind == "fig4a") {
        int groups = args.groups > 0 ? args.groups : kDefaultIntervalGroups;
        bytes = serialize_group_summaries(simulate_interval_dataset(groups, args.seed));
    } else if (args.kind == "fig5a") {
        bytes = serialize_five_number_summaries(simulate_boxplot_dataset(args.seed));
    } else {
        int groups = args.groups > 0 ? args.groups : kDefaultViolinGroups;
        bytes = serialize_expression_matrix(
            simulate_violin_dataset(groups, args.samples, args.sigma, args.seed));
    }
    write_file(args.output, bytes);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fold change transforms, axis ticks, and deterministic SVG charts"};
    app.name("madfc");
    app.require_subcommand(1);

    const std::vector<std::string> scale_names = {"log2", "linear", "madfc"};
    const std::vector<std::string> format_names = {"decimal", "fraction", "exponent"};

    // transform
    double value = 1.0;
    std::string scale_name = "madfc";
    auto* transform_cmd =
        app.add_subcommand("transform", "map a fold change to its scale coordinate");
    transform_cmd->add_option("--value", value, "fold change to transform")->required();
    transform_cmd->add_option("--scale", scale_name, "axis scale")
        ->default_val("madfc")
        ->check(CLI::IsMember(scale_names));
    transform_cmd->callback([&]() {
        out << shortest_repr(scale_forward(scale_kind_from_string(scale_name), value)) << "\n";
    });

    // inverse
    double coordinate = 0.0;
    std::string inverse_scale = "madfc";
    auto* inverse_cmd =
        app.add_subcommand("inverse", "map a scale coordinate back to a fold change");
    inverse_cmd->add_option("--value", coordinate, "coordinate to invert")->required();
    inverse_cmd->add_option("--scale", inverse_scale, "axis scale")
        ->default_val("madfc")
        ->check(CLI::IsMember(scale_names));
    inverse_cmd->callback([&]() {
        out << shortest_repr(scale_inverse(scale_kind_from_string(inverse_scale), coordinate))
            << "\n";
    });

    // ticks
    double fc_min = 0.0, fc_max = 0.0;
    std::string ticks_scale = "madfc", ticks_format = "fraction";
    int tick_count = 7, tick_decimals = kDefaultDecimalPlaces;
    auto* ticks_cmd = app.add_subcommand("ticks", "print a tick table for a fold change range");
    ticks_cmd->add_option("--min", fc_min, "lower fold change bound")->required();
    ticks_cmd->add_option("--max", fc_max, "upper fold change bound")->required();
    ticks_cmd->add_option("--scale", ticks_scale, "axis scale")
        ->default_val("madfc")
        ->check(CLI::IsMember(scale_names));
    ticks_cmd->add_option("--format", ticks_format, "label format")
        ->default_val("fraction")
        ->check(CLI::IsMember(format_names));
    ticks_cmd->add_option("--count", tick_count, "target tick count")
        ->default_val(7)
        ->check(CLI::Range(3, 100));
    ticks_cmd->add_option("--decimal-places", tick_decimals,
                          "fraction digits for decimal labels below 1")
        ->default_val(kDefaultDecimalPlaces)
        ->check(CLI::Range(0, 12));
    ticks_cmd->callback([&]() {
        TickSet ticks = generate_ticks(scale_kind_from_string(ticks_scale), fc_min, fc_max,
                                       tick_count, label_format_from_string(ticks_format),
                                       tick_decimals);
        for (size_t i = 0; i < ticks.positions.size(); ++i)
            out << shortest_repr(ticks.positions[i]) << "\t" << ticks.labels[i] << "\n";
    });

    // plot
    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "render a chart from a delimited table");
    plot_cmd->add_option("kind", plot.kind, "chart kind")
        ->required()
        ->check(CLI::IsMember({"volcano", "ma", "errorbar", "box", "violin", "heatmap"}));
    plot_cmd->add_option("--input", plot.input, "input table path")->required();
    plot_cmd->add_option("--out", plot.output, "output SVG path")->required();
    plot_cmd->add_option("--scale", plot.scale, "axis scale")
        ->default_val("madfc")
        ->check(CLI::IsMember(scale_names));
    plot_cmd->add_option("--format", plot.format, "axis label format")
        ->default_val("fraction")
        ->check(CLI::IsMember(format_names));
    plot_cmd->add_option("--width", plot.width, "chart width in px")
        ->default_val(800)
        ->check(CLI::Range(100, 100000));
    plot_cmd->add_option("--height", plot.height, "chart height in px")
        ->default_val(600)
        ->check(CLI::Range(100, 100000));
    plot_cmd->add_option("--title", plot.title, "chart title");
    plot_cmd->add_option("--delimiter", plot.delimiter, "field delimiter")
        ->default_val(",")
        ->check(CLI::Validator(
            [](std::string& s) {
                return s.size() == 1 ? std::string() : std::string("delimiter must be one character");
            },
            "CHAR"));
    plot_cmd->add_option("--fc-column-mode", plot.fc_mode,
                         "DE table fold change column: raw fc or log2fc")
        ->default_val("fc")
        ->check(CLI::IsMember({"fc", "log2fc"}));
    plot_cmd->add_option("--decimal-places", plot.decimal_places,
                         "fraction digits for decimal labels below 1")
        ->default_val(kDefaultDecimalPlaces)
        ->check(CLI::Range(0, 12));
    plot_cmd->callback([&]() { run_plot(plot, err); });

    // simulate
    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "write a synthetic figure dataset");
    sim_cmd->add_option("kind", sim.kind, "dataset kind")
        ->required()
        ->check(CLI::IsMember({"fig4a", "fig5a", "fig6a"}));
    sim_cmd->add_option("--out", sim.output, "output CSV path")->required();
    sim_cmd->add_option("--seed", sim.seed, "random seed")->default_val(1);
    sim_cmd->add_option("--groups", sim.groups, "group count (fig4a, fig6a)")
        ->check(CLI::Range(2, 1000));
    sim_cmd->add_option("--samples", sim.samples, "samples per group (fig6a)")
        ->default_val(kDefaultViolinSamples)
        ->check(CLI::Range(50, 1000000));
    sim_cmd->add_option("--sigma", sim.sigma, "MAD-space dispersion (fig6a)")
        ->default_val(kDefaultViolinSigma)
        ->check(CLI::PositiveNumber);
    sim_cmd->callback([&]() { run_simulate(sim); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace madfc
