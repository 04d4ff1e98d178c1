#pragma once

// Strict delimited-table ingestion and serialization.
//
// Every parser rejects rather than coerces: unexpected headers, missing or
// extra cells, non-numeric text, and out-of-domain values all raise
// parse_error with 1-based row/column locations. Line endings are LF, with or
// without a trailing newline. Serializers emit the same canonical form the
// parsers accept, with numbers in shortest round-trip notation.
//
// Schemas (first line is the exact header for the default ',' delimiter):
//
//   DE table            id,fc,pvalue,basemean     (or id,log2fc,pvalue,basemean)
//   expression matrix   gene,group,s1,...,sN
//   heatmap table       row,<column labels...>
//   group summaries     group,fc,lower,upper,kind
//   five-number table   group,min,q1,median,q3,max

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "madfc/stats.hpp"

namespace madfc {

// One differentially expressed gene/protein: precomputed fold change,
// p-value, and normalized mean count.
struct DERecord {
    std::string id;
    double fc = 1.0;
    double p_value = 1.0;
    double base_mean = 0.0;
};

struct DETable {
    std::vector<DERecord> records;
    std::string source;
};

// Whether the DE table's second column carries raw fold change or log2 fold
// change (converted to raw on ingest).
enum class FcColumnMode { fc, log2fc };

inline FcColumnMode fc_column_mode_from_string(std::string_view name) {
    if (name == "fc") return FcColumnMode::fc;
    if (name == "log2fc") return FcColumnMode::log2fc;
    throw domain_error("unknown fc column mode '" + std::string(name) +
                       "' (expected fc or log2fc)");
}

struct DeParseOptions {
    char delimiter = ',';
    FcColumnMode fc_mode = FcColumnMode::fc;
};

// Per-group sample sets for a list of genes; cells[gene][group].
struct ExpressionMatrix {
    std::vector<std::string> gene_labels;
    std::vector<std::string> group_labels;
    std::vector<std::vector<SampleSet>> cells;
};

struct HeatmapTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    Eigen::MatrixXd cells;  // fold changes, all > 0
};

DETable parse_de_table(std::string_view text, const DeParseOptions& options = {});
ExpressionMatrix parse_expression_matrix(std::string_view text, char delimiter = ',');
HeatmapTable parse_heatmap_table(std::string_view text, char delimiter = ',');
std::vector<GroupSummary> parse_group_summaries(std::string_view text, char delimiter = ',');
std::vector<FiveNumberSummary> parse_five_number_summaries(std::string_view text,
                                                           char delimiter = ',');

std::string serialize_de_table(const DETable& table, char delimiter = ',');
std::string serialize_expression_matrix(const ExpressionMatrix& matrix, char delimiter = ',');
std::string serialize_heatmap_table(const HeatmapTable& table, char delimiter = ',');
std::string serialize_group_summaries(const std::vector<GroupSummary>& groups,
                                      char delimiter = ',');
std::string serialize_five_number_summaries(const std::vector<FiveNumberSummary>& summaries,
                                            char delimiter = ',');

}  // namespace madfc
