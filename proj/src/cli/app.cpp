#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eigenstrata/cli/batch.hpp"
#include "eigenstrata/cli/commands.hpp"
#include "eigenstrata/cli/report.hpp"

namespace eigenstrata::cli {

namespace {

std::vector<double> parse_spectrum(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size() || !std::isfinite(out.back())) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad spectrum entry '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalue-multiplicity strata, Coxeter and associahedral cells of symmetric matrices"};
    app.require_subcommand(1);

    double tol = kDefaultRelTol;
    bool json_out = false;
    bool text_out = false;
    bool frame = false;
    std::string format = "auto";

    auto add_common = [&](CLI::App* sub, bool matrix_flags) {
        auto* j = sub->add_flag("--json", json_out, "JSON output");
        auto* t = sub->add_flag("--text", text_out, "text output (default)");
        j->excludes(t);
        if (matrix_flags) {
            sub->add_option("--tol", tol, "relative clustering threshold")->check(CLI::NonNegativeNumber);
            sub->add_flag("--frame", frame, "include the orthogonal frame");
            sub->add_option("--format", format, "input format")
                ->check(CLI::IsMember({"auto", "csv", "json", "phylip"}));
        }
    };

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "classify one symmetric matrix");
    analyze_cmd->add_option("path", path, "matrix file (CSV, JSON or PHYLIP)")->required();
    add_common(analyze_cmd, true);

    std::string kind;
    int n = 0;
    int dim = -1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "partitions, Coxeter or associahedron faces, tilings");
    enumerate_cmd->add_option("kind", kind)->required()->check(
        CLI::IsMember({"partitions", "coxeter", "associahedron", "tiling"}));
    enumerate_cmd->add_option("n", n)->required();
    auto* dim_opt = enumerate_cmd->add_option("dim", dim, "list the faces of this dimension");
    add_common(enumerate_cmd, false);

    std::vector<std::string> inputs;
    unsigned parallel = 1;
    std::string out_path;
    auto* batch_cmd = app.add_subcommand("batch", "analyze many files; output follows input order");
    batch_cmd->add_option("inputs", inputs, "files or directories");
    batch_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
    batch_cmd->add_option("--out", out_path, "write output here instead of stdout");
    add_common(batch_cmd, true);

    std::string scenario;
    int demo_n = 3;
    std::string spectrum = "0,0,1";
    auto* demo_cmd = app.add_subcommand("groupoid-demo", "finite groupoid scenarios");
    demo_cmd->add_option("scenario", scenario)->required()->check(
        CLI::IsMember({"action", "chambers", "loop", "labelled"}));
    demo_cmd->add_option("--n", demo_n, "group degree");
    demo_cmd->add_option("--spectrum", spectrum, "comma-separated eigenvalues for 'labelled'");
    add_common(demo_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const bool as_json = json_out;
    if (*analyze_cmd) {
        try {
            const MatrixInput input = parse_matrix(path, parse_format(format));
            const AnalysisReport report = analyze(input, path, tol, frame);
            out << (as_json ? to_json(report).dump(2) + "\n" : render_text(report));
            return 0;
        } catch (const Error& e) {
            if (as_json) {
                out << error_record(path, e).dump(2) << '\n';
            } else {
                err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
            }
            return exit_code_for(e);
        }
    }

    try {
        if (*enumerate_cmd) {
            const auto table = enumerate(kind, n, dim_opt->count() ? std::optional<int>(dim) : std::nullopt);
            out << (as_json ? table.dump(2) + "\n" : render_enumeration_text(table));
            return 0;
        }
        if (*demo_cmd) {
            const auto demo = groupoid_demo(scenario, demo_n, parse_spectrum(spectrum));
            out << (as_json ? demo.dump(2) + "\n" : render_demo_text(demo));
            return 0;
        }
        if (*batch_cmd) {
            BatchOptions options;
            options.rel_tol = tol;
            options.json = as_json;
            options.frame = frame;
            options.parallel = parallel;
            options.format = parse_format(format);
            const BatchResult result = run_batch(collect_inputs(inputs), options);
            if (out_path.empty()) {
                out << result.output;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw Error(ErrorCode::IoError, "cannot write " + out_path);
                file << result.output;
            }
            return result.exit_code;
        }
    } catch (const Error& e) {
        if (as_json) {
            out << nlohmann::json{{"schema", kSchemaVersion},
                                  {"error", {{"code", std::string(code_name(e.code()))}, {"message", e.what()}}}}
                       .dump(2)
                << '\n';
        } else {
            err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
        }
        return 1;
    }
    return 1;
}

}  // namespace eigenstrata::cli
