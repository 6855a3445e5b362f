#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eigenstrata/cli/io.hpp"
#include "eigenstrata/clustering.hpp"

namespace eigenstrata::cli {

struct BatchOptions {
    double rel_tol = kDefaultRelTol;
    bool json = true;
    bool frame = false;
    unsigned parallel = 1;
    MatrixFormat format = MatrixFormat::Auto;
};

struct BatchResult {
    std::string output;  // per-input records in input order, then a summary
    int exit_code = 0;   // 0 all ok, 1 any non-degenerate failure, else 2
    std::size_t reports = 0;
    std::size_t errors = 0;
};

/// Directories expand to their regular files (non-recursive, sorted by
/// name); files are kept as given. Throws InvalidArgument ("no inputs")
/// when nothing remains, IoError for a missing path.
std::vector<std::filesystem::path> collect_inputs(const std::vector<std::string>& args);

BatchResult run_batch(const std::vector<std::filesystem::path>& inputs, const BatchOptions& options);

}  // namespace eigenstrata::cli
