#include "eigenstrata/cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "eigenstrata/cli/report.hpp"

namespace eigenstrata::cli {

std::vector<std::filesystem::path> collect_inputs(const std::vector<std::string>& args) {
    namespace fs = std::filesystem;
    std::vector<fs::path> out;
    for (const auto& arg : args) {
        const fs::path path(arg);
        std::error_code ec;
        if (fs::is_directory(path, ec)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(path)) {
                if (entry.is_regular_file()) files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            out.insert(out.end(), files.begin(), files.end());
        } else if (fs::exists(path, ec)) {
            out.push_back(path);
        } else {
            throw Error(ErrorCode::IoError, "no such file or directory: " + arg);
        }
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no inputs");
    return out;
}

namespace {

struct Outcome {
    std::string text;
    int status = 0;
};

Outcome process_failure(const std::string& name, const Error& e, const BatchOptions& options) {
    if (options.json) return {error_record(name, e).dump() + "\n", exit_code_for(e)};
    return {"error: " + name + ": " + std::string(code_name(e.code())) + ": " + e.what() + "\n\n", exit_code_for(e)};
}

Outcome process(const std::filesystem::path& path, const BatchOptions& options) {
    const std::string name = path.string();
    try {
        const MatrixInput input = parse_matrix(path, options.format);
        const AnalysisReport report = analyze(input, name, options.rel_tol, options.frame);
        return {options.json ? to_json(report).dump() + "\n" : render_text(report) + "\n", 0};
    } catch (const Error& e) {
        return process_failure(name, e, options);
    } catch (const std::exception& e) {
        return process_failure(name, Error(ErrorCode::IoError, e.what()), options);
    }
}

}  // namespace

BatchResult run_batch(const std::vector<std::filesystem::path>& inputs, const BatchOptions& options) {
    std::vector<Outcome> outcomes(inputs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.parallel, static_cast<unsigned>(inputs.size())));
    if (workers == 1) {
        for (std::size_t k = 0; k < inputs.size(); ++k) outcomes[k] = process(inputs[k], options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < inputs.size(); k = next++) {
                    outcomes[k] = process(inputs[k], options);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    BatchResult result;
    bool hard_failure = false;
    for (const Outcome& o : outcomes) {
        result.output += o.text;
        if (o.status == 0) {
            ++result.reports;
        } else {
            ++result.errors;
            hard_failure = hard_failure || o.status == 1;
        }
    }
    if (options.json) {
        nlohmann::json summary = {{"schema", kSchemaVersion},
                                  {"summary", {{"inputs", inputs.size()}, {"reports", result.reports}, {"errors", result.errors}}}};
        result.output += summary.dump() + "\n";
    } else {
        result.output += "summary: " + std::to_string(inputs.size()) + " inputs, " + std::to_string(result.reports) +
                         " reports, " + std::to_string(result.errors) + " errors\n";
    }
    result.exit_code = result.errors == 0 ? 0 : (hard_failure ? 1 : 2);
    return result;
}

}  // namespace eigenstrata::cli
