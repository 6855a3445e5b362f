#include "eigenstrata/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "eigenstrata/spectral.hpp"

namespace eigenstrata::cli {

namespace {

using nlohmann::json;

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string matrix_digest(const SymmetricMatrix& q, double lo, double range) {
    std::string bytes;
    char buf[40];
    for (std::size_t i = 0; i < q.order(); ++i)
        for (std::size_t j = 0; j < q.order(); ++j) {
            const double v = (q(i, j) - (i == j ? lo : 0.0)) / range;
            std::snprintf(buf, sizeof buf, "%.12e,", v == 0.0 ? 0.0 : v);
            bytes += buf;
        }
    return fnv1a_hex(bytes);
}

std::optional<std::vector<int>> dominant_axes(const DenseMatrix& frame) {
    const std::size_t n = frame.order();
    std::vector<int> axis(n, -1);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = std::abs(frame(i, j));
            if (v >= 1.0 - 1e-12) {
                axis[i] = static_cast<int>(j);
            } else if (v > 1e-12) {
                return std::nullopt;
            }
        }
        if (axis[i] < 0 || used[static_cast<std::size_t>(axis[i])]) return std::nullopt;
        used[static_cast<std::size_t>(axis[i])] = true;
    }
    return axis;
}

template <typename T>
T require(const json& doc, const char* key) {
    if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("report is missing \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::ParseError, std::string("report field \"") + key + "\" has the wrong type");
    }
}

}  // namespace

AnalysisReport analyze(const MatrixInput& input, const std::string& path, double rel_tol, bool include_frame) {
    const SymmetricMatrix& q = input.matrix;
    const EigenDecomposition eig = jacobi_eigen(q);
    const EigenConfiguration config = eigen_configuration(eig, rel_tol);

    AnalysisReport r;
    r.path = path;
    r.format = std::string(format_name(input.format));
    r.order = q.order();
    r.names = input.names;
    r.tolerance = rel_tol;
    const double lo = config.clusters.representatives.front();
    r.digest = matrix_digest(q, lo, config.clusters.representatives.back() - lo);
    r.eigenvalues = config.eigenvalues;
    r.normalized_eigenvalues = config.normalized_eigenvalues;
    r.parts = config.partition.parts();
    r.clusters = config.clusters.sizes;
    r.codim = config.codim;
    r.stratum = config.stratum;
    r.simplex_point = config.point.t;

    int position = 1;
    for (int size : config.clusters.sizes) {
        std::vector<int> block;
        for (int k = 0; k < size; ++k) block.push_back(position++);
        r.cell.push_back(std::move(block));
    }
    if (const auto axes = dominant_axes(eig.frame)) {
        std::vector<std::vector<int>> blocks;
        for (const auto& block : r.cell) {
            std::vector<int> labels;
            for (int pos : block) labels.push_back((*axes)[static_cast<std::size_t>(pos - 1)] + 1);
            std::sort(labels.begin(), labels.end());
            blocks.push_back(std::move(labels));
        }
        r.axis_cell = std::move(blocks);
    }
    r.normalizer_order = config.normalizer_order.str();
    if (include_frame) {
        std::vector<std::vector<double>> rows(q.order(), std::vector<double>(q.order()));
        for (std::size_t i = 0; i < q.order(); ++i)
            for (std::size_t j = 0; j < q.order(); ++j) rows[i][j] = eig.frame(i, j);
        r.frame = std::move(rows);
    }

    const double threshold = config.clusters.threshold;
    for (std::size_t k = 0; k + 1 < config.eigenvalues.size(); ++k) {
        const double gap = config.eigenvalues[k + 1] - config.eigenvalues[k];
        const bool merged = std::find(config.clusters.merged_gaps.begin(), config.clusters.merged_gaps.end(), k) !=
                            config.clusters.merged_gaps.end();
        const std::string pair = "eigenvalues " + std::to_string(k + 1) + " and " + std::to_string(k + 2);
        if (merged) {
            r.warnings.push_back(pair + " merged: gap " + short_number(gap) + " <= threshold " + short_number(threshold));
        } else if (gap <= 100.0 * threshold) {
            r.warnings.push_back(pair + " kept apart: gap " + short_number(gap) + " is within 100x the threshold " +
                                 short_number(threshold));
        }
    }
    return r;
}

json to_json(const AnalysisReport& r) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["input"] = {{"path", r.path}, {"format", r.format}, {"order", r.order}, {"names", r.names}};
    doc["tolerance"] = r.tolerance;
    doc["digest"] = r.digest;
    doc["eigenvalues"] = r.eigenvalues;
    doc["normalized_eigenvalues"] = r.normalized_eigenvalues;
    std::string label;
    for (std::size_t k = 0; k < r.parts.size(); ++k) label += (k ? "+" : "") + std::to_string(r.parts[k]);
    doc["partition"] = label;
    doc["parts"] = r.parts;
    doc["clusters"] = r.clusters;
    doc["codim"] = r.codim;
    doc["stratum"] = {{"orth_isotropy_dim", r.stratum.orth_isotropy_dim},
                      {"flag_dim", r.stratum.flag_dim},
                      {"relative_dim", r.stratum.relative_dim},
                      {"codim", r.stratum.codim},
                      {"family_dim", r.stratum.family_dim}};
    doc["simplex_point"] = r.simplex_point;
    doc["cell"] = r.cell;
    doc["cell_dim"] = static_cast<int>(r.cell.size()) - 2;
    doc["axis_cell"] = r.axis_cell ? json(*r.axis_cell) : json(nullptr);
    const BigCount order(r.normalizer_order);
    if (order <= std::numeric_limits<std::uint64_t>::max()) {
        doc["normalizer_order"] = static_cast<std::uint64_t>(order);
    } else {
        doc["normalizer_order"] = r.normalizer_order;
    }
    if (r.frame) doc["frame"] = *r.frame;
    doc["warnings"] = r.warnings;
    return doc;
}

AnalysisReport report_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "report must be a JSON object");
    if (require<int>(doc, "schema") != kSchemaVersion) {
        throw Error(ErrorCode::ParseError, "unsupported report schema version");
    }
    AnalysisReport r;
    const auto input = require<json>(doc, "input");
    r.path = require<std::string>(input, "path");
    r.format = require<std::string>(input, "format");
    r.order = require<std::size_t>(input, "order");
    r.names = require<std::vector<std::string>>(input, "names");
    r.tolerance = require<double>(doc, "tolerance");
    r.digest = require<std::string>(doc, "digest");
    r.eigenvalues = require<std::vector<double>>(doc, "eigenvalues");
    r.normalized_eigenvalues = require<std::vector<double>>(doc, "normalized_eigenvalues");
    r.parts = require<std::vector<int>>(doc, "parts");
    r.clusters = require<std::vector<int>>(doc, "clusters");
    r.codim = require<std::int64_t>(doc, "codim");
    const auto stratum = require<json>(doc, "stratum");
    r.stratum = {require<std::int64_t>(stratum, "orth_isotropy_dim"), require<std::int64_t>(stratum, "flag_dim"),
                 require<std::int64_t>(stratum, "relative_dim"), require<std::int64_t>(stratum, "codim"),
                 require<std::int64_t>(stratum, "family_dim")};
    r.simplex_point = require<std::vector<double>>(doc, "simplex_point");
    r.cell = require<std::vector<std::vector<int>>>(doc, "cell");
    const auto axis = require<json>(doc, "axis_cell");
    if (!axis.is_null()) r.axis_cell = require<std::vector<std::vector<int>>>(doc, "axis_cell");
    const auto order = require<json>(doc, "normalizer_order");
    if (order.is_number_unsigned()) {
        r.normalizer_order = std::to_string(order.get<std::uint64_t>());
    } else if (order.is_string()) {
        r.normalizer_order = order.get<std::string>();
    } else {
        throw Error(ErrorCode::ParseError, "report field \"normalizer_order\" has the wrong type");
    }
    if (doc.contains("frame")) r.frame = require<std::vector<std::vector<double>>>(doc, "frame");
    r.warnings = require<std::vector<std::string>>(doc, "warnings");
    return r;
}

namespace {

std::string join_numbers(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + short_number(xs[k]);
    return out + "]";
}

std::string join_blocks(const std::vector<std::vector<int>>& blocks) {
    std::string out;
    for (const auto& block : blocks) {
        out += '{';
        for (std::size_t k = 0; k < block.size(); ++k) out += (k ? "," : "") + std::to_string(block[k]);
        out += '}';
    }
    return out;
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto row = [&](const std::string& key, const std::string& value) {
        out << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << value << '\n';
    };
    std::string label;
    for (std::size_t k = 0; k < r.parts.size(); ++k) label += (k ? "+" : "") + std::to_string(r.parts[k]);
    row("input", r.path + " (" + r.format + ", n=" + std::to_string(r.order) + ")");
    if (!r.names.empty()) {
        std::string names;
        for (std::size_t k = 0; k < r.names.size(); ++k) names += (k ? " " : "") + r.names[k];
        row("names", names);
    }
    row("tolerance", short_number(r.tolerance));
    row("digest", r.digest);
    row("eigenvalues", join_numbers(r.eigenvalues));
    row("normalized", join_numbers(r.normalized_eigenvalues));
    row("partition", label);
    row("codim", std::to_string(r.codim));
    row("isotropy dim", std::to_string(r.stratum.orth_isotropy_dim));
    row("flag dim", std::to_string(r.stratum.flag_dim));
    row("relative dim", std::to_string(r.stratum.relative_dim));
    row("family dim", std::to_string(r.stratum.family_dim));
    row("simplex point", join_numbers(r.simplex_point));
    row("cell", join_blocks(r.cell) + " (dim " + std::to_string(static_cast<int>(r.cell.size()) - 2) + ")");
    if (r.axis_cell) row("axis cell", join_blocks(*r.axis_cell));
    row("normalizer order", r.normalizer_order);
    if (r.frame) {
        for (std::size_t i = 0; i < r.frame->size(); ++i) {
            row(i == 0 ? "frame" : "", join_numbers((*r.frame)[i]));
        }
    }
    for (const auto& w : r.warnings) row("warning", w);
    return out.str();
}

json error_record(const std::string& path, const Error& error) {
    return {{"schema", kSchemaVersion},
            {"path", path},
            {"error", {{"code", std::string(code_name(error.code()))}, {"message", error.what()}}}};
}

int exit_code_for(const Error& error) { return error.code() == ErrorCode::DegenerateForm ? 2 : 1; }

}  // namespace eigenstrata::cli
