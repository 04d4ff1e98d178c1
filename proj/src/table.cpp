#include "madfc/table.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "madfc/text.hpp"

namespace madfc {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find('\r') != std::string_view::npos)
            throw parse_error("carriage return found; only LF line endings are accepted",
                              static_cast<int>(i + 1));
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t end = line.find(delimiter, start);
        if (end == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

void check_field_count(const std::vector<std::string_view>& fields, size_t expected, int row) {
    if (fields.size() != expected)
        throw parse_error("expected " + std::to_string(expected) + " columns, got " +
                          std::to_string(fields.size()), row);
}

void check_header_cell(std::string_view got, std::string_view expected, int column) {
    if (got != expected)
        throw parse_error("expected header '" + std::string(expected) + "', got '" +
                          std::string(got) + "'", 1, column);
}

double parse_number(std::string_view cell, int row, int column) {
    double value;
    if (!parse_double_strict(cell, value))
        throw parse_error("cell '" + std::string(cell) + "' is not a number", row, column);
    return value;
}

std::string parse_nonempty(std::string_view cell, int row, int column, const char* what) {
    if (cell.empty())
        throw parse_error(std::string(what) + " must not be empty", row, column);
    return std::string(cell);
}

double parse_fold_change(std::string_view cell, int row, int column) {
    double value = parse_number(cell, row, column);
    if (!(std::isfinite(value) && value > 0.0))
        throw parse_error("fold change must be positive, got '" + std::string(cell) + "'",
                          row, column);
    return value;
}

const std::vector<std::string_view>& require_rows(const std::vector<std::string_view>& lines) {
    if (lines.empty())
        throw parse_error("missing header row", 1);
    return lines;
}

}  // namespace

DETable parse_de_table(std::string_view text, const DeParseOptions& options) {
    auto lines = require_rows(split_lines(text));
    auto header = split_fields(lines[0], options.delimiter);
    check_field_count(header, 4, 1);
    check_header_cell(header[0], "id", 1);
    check_header_cell(header[1], options.fc_mode == FcColumnMode::fc ? "fc" : "log2fc", 2);
    check_header_cell(header[2], "pvalue", 3);
    check_header_cell(header[3], "basemean", 4);

    DETable table;
    std::unordered_set<std::string> seen_ids;
    for (size_t i = 1; i < lines.size(); ++i) {
        const int row = static_cast<int>(i + 1);
        auto fields = split_fields(lines[i], options.delimiter);
        check_field_count(fields, 4, row);

        DERecord record;
        record.id = parse_nonempty(fields[0], row, 1, "id");
        if (!seen_ids.insert(record.id).second)
            throw parse_error("duplicate id '" + record.id + "'", row, 1);

        if (options.fc_mode == FcColumnMode::fc) {
            record.fc = parse_fold_change(fields[1], row, 2);
        } else {
            double log2fc = parse_number(fields[1], row, 2);
            if (!std::isfinite(log2fc))
                throw parse_error("log2 fold change must be finite", row, 2);
            record.fc = std::exp2(log2fc);
            if (!(std::isfinite(record.fc) && record.fc > 0.0))
                throw parse_error("log2 fold change '" + std::string(fields[1]) +
                                  "' overflows the fold change domain", row, 2);
        }

        record.p_value = parse_number(fields[2], row, 3);
        if (!(record.p_value > 0.0 && record.p_value <= 1.0))
            throw parse_error("p-value must lie in (0, 1], got '" + std::string(fields[2]) + "'",
                              row, 3);

        record.base_mean = parse_number(fields[3], row, 4);
        if (!(std::isfinite(record.base_mean) && record.base_mean >= 0.0))
            throw parse_error("base mean must be non-negative, got '" + std::string(fields[3]) + "'",
                              row, 4);

        table.records.push_back(std::move(record));
    }
    return table;
}

ExpressionMatrix parse_expression_matrix(std::string_view text, char delimiter) {
    auto lines = require_rows(split_lines(text));
    auto header = split_fields(lines[0], delimiter);
    if (header.size() < 3)
        throw parse_error("expression matrix needs columns gene,group,s1,...", 1);
    check_header_cell(header[0], "gene", 1);
    check_header_cell(header[1], "group", 2);
    const size_t sample_count = header.size() - 2;
    for (size_t c = 0; c < sample_count; ++c)
        check_header_cell(header[c + 2], "s" + std::to_string(c + 1), static_cast<int>(c + 3));

    ExpressionMatrix matrix;
    std::unordered_map<std::string, size_t> gene_index;
    std::unordered_map<std::string, size_t> group_index;
    struct CellRow {
        size_t gene, group;
        Eigen::ArrayXd values;
        int row;
    };
    std::vector<CellRow> cell_rows;

    for (size_t i = 1; i < lines.size(); ++i) {
        const int row = static_cast<int>(i + 1);
        auto fields = split_fields(lines[i], delimiter);
        check_field_count(fields, sample_count + 2, row);

        std::string gene = parse_nonempty(fields[0], row, 1, "gene label");
        std::string group = parse_nonempty(fields[1], row, 2, "group label");
        auto [git, gnew] = gene_index.try_emplace(gene, matrix.gene_labels.size());
        if (gnew)
            matrix.gene_labels.push_back(gene);
        auto [hit, hnew] = group_index.try_emplace(group, matrix.group_labels.size());
        if (hnew)
            matrix.group_labels.push_back(group);

        Eigen::ArrayXd values(static_cast<Eigen::Index>(sample_count));
        for (size_t c = 0; c < sample_count; ++c)
            values[static_cast<Eigen::Index>(c)] =
                parse_fold_change(fields[c + 2], row, static_cast<int>(c + 3));
        cell_rows.push_back({git->second, hit->second, std::move(values), row});
    }

    matrix.cells.assign(matrix.gene_labels.size(),
                        std::vector<SampleSet>(matrix.group_labels.size()));
    std::vector<std::vector<bool>> filled(matrix.gene_labels.size(),
                                          std::vector<bool>(matrix.group_labels.size(), false));
    for (auto& cell : cell_rows) {
        if (filled[cell.gene][cell.group])
            throw parse_error("duplicate cell for gene '" + matrix.gene_labels[cell.gene] +
                              "', group '" + matrix.group_labels[cell.group] + "'", cell.row);
        filled[cell.gene][cell.group] = true;
        matrix.cells[cell.gene][cell.group] =
            SampleSet{matrix.group_labels[cell.group], std::move(cell.values)};
    }
    for (size_t g = 0; g < matrix.gene_labels.size(); ++g)
        for (size_t h = 0; h < matrix.group_labels.size(); ++h)
            if (!filled[g][h])
                throw parse_error("missing cell for gene '" + matrix.gene_labels[g] +
                                  "', group '" + matrix.group_labels[h] + "'");
    if (matrix.gene_labels.empty())
        throw parse_error("expression matrix has no data rows");
    return matrix;
}

HeatmapTable parse_heatmap_table(std::string_view text, char delimiter) {
    auto lines = require_rows(split_lines(text));
    auto header = split_fields(lines[0], delimiter);
    if (header.size() < 2)
        throw parse_error("heatmap table needs columns row,<labels...>", 1);
    check_header_cell(header[0], "row", 1);

    HeatmapTable table;
    for (size_t c = 1; c < header.size(); ++c)
        table.column_labels.push_back(
            parse_nonempty(header[c], 1, static_cast<int>(c + 1), "column label"));

    const auto cols = static_cast<Eigen::Index>(table.column_labels.size());
    table.cells.resize(static_cast<Eigen::Index>(lines.size() - 1), cols);
    for (size_t i = 1; i < lines.size(); ++i) {
        const int row = static_cast<int>(i + 1);
        auto fields = split_fields(lines[i], delimiter);
        check_field_count(fields, header.size(), row);
        table.row_labels.push_back(parse_nonempty(fields[0], row, 1, "row label"));
        for (Eigen::Index c = 0; c < cols; ++c)
            table.cells(static_cast<Eigen::Index>(i - 1), c) =
                parse_fold_change(fields[static_cast<size_t>(c) + 1], row,
                                  static_cast<int>(c + 2));
    }
    return table;
}

std::vector<GroupSummary> parse_group_summaries(std::string_view text, char delimiter) {
    auto lines = require_rows(split_lines(text));
    auto header = split_fields(lines[0], delimiter);
    check_field_count(header, 5, 1);
    const char* expected[] = {"group", "fc", "lower", "upper", "kind"};
    for (int c = 0; c < 5; ++c)
        check_header_cell(header[static_cast<size_t>(c)], expected[c], c + 1);

    std::vector<GroupSummary> groups;
    for (size_t i = 1; i < lines.size(); ++i) {
        const int row = static_cast<int>(i + 1);
        auto fields = split_fields(lines[i], delimiter);
        check_field_count(fields, 5, row);
        GroupSummary g;
        g.label = parse_nonempty(fields[0], row, 1, "group label");
        g.point_fc = parse_fold_change(fields[1], row, 2);
        g.lower_fc = parse_fold_change(fields[2], row, 3);
        g.upper_fc = parse_fold_change(fields[3], row, 4);
        g.interval_kind = std::string(fields[4]);
        if (!(g.lower_fc <= g.point_fc && g.point_fc <= g.upper_fc))
            throw parse_error("interval must satisfy lower <= fc <= upper", row);
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<FiveNumberSummary> parse_five_number_summaries(std::string_view text,
                                                           char delimiter) {
    auto lines = require_rows(split_lines(text));
    auto header = split_fields(lines[0], delimiter);
    check_field_count(header, 6, 1);
    const char* expected[] = {"group", "min", "q1", "median", "q3", "max"};
    for (int c = 0; c < 6; ++c)
        check_header_cell(header[static_cast<size_t>(c)], expected[c], c + 1);

    std::vector<FiveNumberSummary> summaries;
    for (size_t i = 1; i < lines.size(); ++i) {
        const int row = static_cast<int>(i + 1);
        auto fields = split_fields(lines[i], delimiter);
        check_field_count(fields, 6, row);
        FiveNumberSummary s;
        s.label = parse_nonempty(fields[0], row, 1, "group label");
        s.min = parse_fold_change(fields[1], row, 2);
        s.q1 = parse_fold_change(fields[2], row, 3);
        s.median = parse_fold_change(fields[3], row, 4);
        s.q3 = parse_fold_change(fields[4], row, 5);
        s.max = parse_fold_change(fields[5], row, 6);
        if (!(s.min <= s.q1 && s.q1 <= s.median && s.median <= s.q3 && s.q3 <= s.max))
            throw parse_error("five-number summary must be ordered min <= q1 <= median <= q3 <= max",
                              row);
        summaries.push_back(std::move(s));
    }
    return summaries;
}

std::string serialize_de_table(const DETable& table, char delimiter) {
    std::string out = "id";
    const char d = delimiter;
    out += d; out += "fc"; out += d; out += "pvalue"; out += d; out += "basemean"; out += '\n';
    for (const auto& r : table.records) {
        out += r.id; out += d;
        out += shortest_repr(r.fc); out += d;
        out += shortest_repr(r.p_value); out += d;
        out += shortest_repr(r.base_mean); out += '\n';
    }
    return out;
}

std::string serialize_expression_matrix(const ExpressionMatrix& matrix, char delimiter) {
    if (matrix.cells.empty() || matrix.cells[0].empty())
        throw domain_error("cannot serialize an empty expression matrix");
    const auto sample_count = matrix.cells[0][0].values.size();
    std::string out = "gene";
    out += delimiter; out += "group";
    for (Eigen::Index s = 0; s < sample_count; ++s) {
        out += delimiter;
        out += "s" + std::to_string(s + 1);
    }
    out += '\n';
    for (size_t g = 0; g < matrix.gene_labels.size(); ++g) {
        for (size_t h = 0; h < matrix.group_labels.size(); ++h) {
            const auto& cell = matrix.cells[g][h];
            if (cell.values.size() != sample_count)
                throw domain_error("expression matrix cells must share one sample count");
            out += matrix.gene_labels[g]; out += delimiter;
            out += matrix.group_labels[h];
            for (Eigen::Index s = 0; s < sample_count; ++s) {
                out += delimiter;
                out += shortest_repr(cell.values[s]);
            }
            out += '\n';
        }
    }
    return out;
}

std::string serialize_heatmap_table(const HeatmapTable& table, char delimiter) {
    std::string out = "row";
    for (const auto& label : table.column_labels) {
        out += delimiter;
        out += label;
    }
    out += '\n';
    for (Eigen::Index r = 0; r < table.cells.rows(); ++r) {
        out += table.row_labels[static_cast<size_t>(r)];
        for (Eigen::Index c = 0; c < table.cells.cols(); ++c) {
            out += delimiter;
            out += shortest_repr(table.cells(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string serialize_group_summaries(const std::vector<GroupSummary>& groups, char delimiter) {
    const char d = delimiter;
    std::string out = "group";
    out += d; out += "fc"; out += d; out += "lower"; out += d; out += "upper"; out += d; out += "kind";
    out += '\n';
    for (const auto& g : groups) {
        out += g.label; out += d;
        out += shortest_repr(g.point_fc); out += d;
        out += shortest_repr(g.lower_fc); out += d;
        out += shortest_repr(g.upper_fc); out += d;
        out += g.interval_kind; out += '\n';
    }
    return out;
}

std::string serialize_five_number_summaries(const std::vector<FiveNumberSummary>& summaries,
                                            char delimiter) {
    const char d = delimiter;
    std::string out = "group";
    out += d; out += "min"; out += d; out += "q1"; out += d; out += "median"; out += d; out += "q3";
    out += d; out += "max"; out += '\n';
    for (const auto& s : summaries) {
        out += s.label; out += d;
        out += shortest_repr(s.min); out += d;
        out += shortest_repr(s.q1); out += d;
        out += shortest_repr(s.median); out += d;
        out += shortest_repr(s.q3); out += d;
        out += shortest_repr(s.max); out += '\n';
    }
    return out;
}

}  // namespace madfc
