#pragma once

// Matrix ingestion: CSV (no header), JSON (array of rows, or an object with
// "matrix" and optional "names"), and square PHYLIP distance matrices.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eigenstrata/matrix.hpp"

namespace eigenstrata::cli {

enum class MatrixFormat { Auto, Csv, Json, Phylip };

MatrixFormat parse_format(std::string_view name);
std::string_view format_name(MatrixFormat format) noexcept;

struct MatrixInput {
    SymmetricMatrix matrix;
    std::vector<std::string> names;  // empty unless the input carries names
    MatrixFormat format;             // the format actually parsed
};

/// Guess from the extension, then from the content.
MatrixFormat detect_format(std::string_view text, const std::filesystem::path& path = {});

/// Throws ParseError (with line/column), NotSquare or NotSymmetric.
MatrixInput parse_matrix_text(std::string_view text, MatrixFormat format,
                              const std::filesystem::path& path = {});

/// Reads the file (IoError if unreadable) and parses it.
MatrixInput parse_matrix(const std::filesystem::path& path, MatrixFormat format = MatrixFormat::Auto);

}  // namespace eigenstrata::cli
