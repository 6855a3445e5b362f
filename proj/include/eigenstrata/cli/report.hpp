#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eigenstrata/cli/io.hpp"
#include "eigenstrata/combinatorics.hpp"
#include "eigenstrata/error.hpp"

namespace eigenstrata::cli {

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
    std::string path;
    std::string format;
    std::size_t order = 0;
    std::vector<std::string> names;
    double tolerance = 0.0;
    std::string digest;  // FNV-1a 64 of the normalized matrix, hex
    std::vector<double> eigenvalues;
    std::vector<double> normalized_eigenvalues;
    std::vector<int> parts;     // canonical, descending
    std::vector<int> clusters;  // cluster sizes in increasing eigenvalue order
    std::int64_t codim = 0;
    StratumDims stratum{};
    std::vector<double> simplex_point;
    std::vector<std::vector<int>> cell;  // eigenvalue positions 1..n grouped by cluster
    std::optional<std::vector<std::vector<int>>> axis_cell;  // when the frame is a signed permutation
    std::string normalizer_order;  // decimal
    std::optional<std::vector<std::vector<double>>> frame;
    std::vector<std::string> warnings;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const MatrixInput& input, const std::string& path, double rel_tol, bool include_frame);

nlohmann::json to_json(const AnalysisReport& report);

/// Throws ParseError if the document does not follow the schema.
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string render_text(const AnalysisReport& report);

nlohmann::json error_record(const std::string& path, const Error& error);

/// Exit status for an error: 2 for a degenerate form, 1 otherwise.
int exit_code_for(const Error& error);

}  // namespace eigenstrata::cli
