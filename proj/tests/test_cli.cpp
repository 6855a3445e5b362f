#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "eigenstrata/cli/batch.hpp"
#include "eigenstrata/cli/commands.hpp"
#include "eigenstrata/cli/io.hpp"
#include "eigenstrata/cli/report.hpp"
#include "support.hpp"

using namespace eigenstrata;
using namespace eigenstrata::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("eigenstrata_test_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name, std::ios::binary) << text;
        return path / name;
    }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "eigenstrata");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("csv parsing") {
    const auto in = parse_matrix_text("1, 2\n2, 5\n", MatrixFormat::Csv);
    CHECK(in.matrix.order() == 2);
    CHECK(in.matrix(0, 1) == 2.0);
    CHECK(in.names.empty());
    CHECK_THROWS_CODE(parse_matrix_text("1,2\n3,x\n", MatrixFormat::Csv), ParseError);
    CHECK_THROWS_CODE(parse_matrix_text("1,2\n3\n", MatrixFormat::Csv), NotSquare);
    CHECK_THROWS_CODE(parse_matrix_text("1,2\n3,4\n", MatrixFormat::Csv), NotSymmetric);
    CHECK_THROWS_CODE(parse_matrix_text("", MatrixFormat::Csv), ParseError);
    try {
        parse_matrix_text("1,2\n2,oops\n", MatrixFormat::Csv);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("json parsing") {
    const auto rows = parse_matrix_text("[[0,1],[1,0]]", MatrixFormat::Json);
    CHECK(rows.matrix(1, 0) == 1.0);
    const auto named = parse_matrix_text(R"({"matrix": [[1,0],[0,2]], "names": ["a","b"]})", MatrixFormat::Json);
    CHECK(named.names == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_CODE(parse_matrix_text(R"({"matrix": [[1,0],[0,2]], "names": ["a"]})", MatrixFormat::Json),
                      ParseError);
    CHECK_THROWS_CODE(parse_matrix_text("[[1,0],\n [0,", MatrixFormat::Json), ParseError);
    CHECK_THROWS_CODE(parse_matrix_text(R"([[1,"a"],[0,1]])", MatrixFormat::Json), ParseError);
}

TEST_CASE("phylip parsing") {
    const std::string square = "3\nA 0 1 2\nB 1 0\n 3\nC 2 3 0\n";
    const auto in = parse_matrix_text(square, MatrixFormat::Phylip);
    CHECK(in.names == std::vector<std::string>{"A", "B", "C"});
    CHECK(in.matrix(1, 2) == 3.0);
    CHECK_THROWS_CODE(parse_matrix_text("3\nA\nB 1\nC 2 3\n", MatrixFormat::Phylip), ParseError);
    CHECK_THROWS_CODE(parse_matrix_text("2\nA 0 1\n", MatrixFormat::Phylip), ParseError);
    CHECK_THROWS_CODE(parse_matrix_text("2\nA 0 1\nB 1 0\nextra\n", MatrixFormat::Phylip), ParseError);
    CHECK_THROWS_CODE(parse_matrix_text("x\n", MatrixFormat::Phylip), ParseError);
}

TEST_CASE("format detection") {
    CHECK(detect_format("", "m.csv") == MatrixFormat::Csv);
    CHECK(detect_format("", "m.phy") == MatrixFormat::Phylip);
    CHECK(detect_format("", "m.json") == MatrixFormat::Json);
    CHECK(detect_format("  [[1]]", "m.txt") == MatrixFormat::Json);
    CHECK(detect_format("3\nA 0 1 2\n") == MatrixFormat::Phylip);
    CHECK(detect_format("1,0\n0,1\n") == MatrixFormat::Csv);
    CHECK(parse_format("phylip") == MatrixFormat::Phylip);
    CHECK_THROWS_CODE(parse_format("xml"), InvalidArgument);
}

TEST_CASE("parser fuzzing throws only library errors") {
    const std::vector<std::string> seeds{
        "1,2,3\n2,5,6\n3,6,9\n",
        "[[1,2],[2,1]]",
        R"({"matrix": [[0,1],[1,0]], "names": ["x","y"]})",
        "3\nA 0 1 2\nB 1 0 3\nC 2 3 0\n",
    };
    const std::string alphabet = "0123456789.,-+eE[]{}\":\n \tabcnN";
    std::mt19937_64 rng(424242);
    std::size_t parsed = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        std::string text = seeds[static_cast<std::size_t>(trial) % seeds.size()];
        std::uniform_int_distribution<int> edits(1, 6);
        for (int e = edits(rng); e > 0; --e) {
            std::uniform_int_distribution<std::size_t> pos(0, text.size());
            const std::size_t at = pos(rng);
            const char c = alphabet[rng() % alphabet.size()];
            switch (rng() % 3) {
                case 0: text.insert(at, 1, c); break;
                case 1: if (at < text.size()) text.erase(at, 1); break;
                default: if (at < text.size()) text[at] = c; break;
            }
        }
        if (trial % 7 == 0) {
            text.clear();
            for (int k = 0; k < 40; ++k) text.push_back(static_cast<char>(rng() % 256));
        }
        for (auto format : {MatrixFormat::Auto, MatrixFormat::Csv, MatrixFormat::Json, MatrixFormat::Phylip}) {
            try {
                const auto in = parse_matrix_text(text, format);
                ++parsed;
                const auto report = analyze(in, "fuzz", kDefaultRelTol, true);
                CHECK(report_from_json(to_json(report)) == report);
            } catch (const Error&) {
            } catch (const std::exception& e) {
                FAIL("unexpected exception: " << e.what() << " on input " << text);
            }
        }
    }
    CHECK(parsed > 0);
}

TEST_CASE("report round trip and content") {
    const auto in = parse_matrix_text("[[0,0,0],[0,0,0],[0,0,1]]", MatrixFormat::Json);
    const auto report = analyze(in, "diag.json", kDefaultRelTol, true);
    CHECK(report.parts == std::vector<int>{2, 1});
    CHECK(report.codim == 2);
    CHECK(report.simplex_point == std::vector<double>{0.0, 1.0});
    CHECK(report.normalizer_order == "16");
    REQUIRE(report.axis_cell.has_value());
    const auto doc = to_json(report);
    CHECK(doc["schema"] == kSchemaVersion);
    CHECK(report_from_json(doc) == report);
    CHECK(report_from_json(nlohmann::json::parse(doc.dump())) == report);
    auto broken = doc;
    broken.erase("codim");
    CHECK_THROWS_CODE(report_from_json(broken), ParseError);
    CHECK(render_text(report).find("2+1") != std::string::npos);
}

TEST_CASE("error records and exit codes") {
    const Error degenerate(ErrorCode::DegenerateForm, "flat");
    CHECK(exit_code_for(degenerate) == 2);
    CHECK(exit_code_for(Error(ErrorCode::ParseError, "x")) == 1);
    const auto rec = error_record("a.csv", degenerate);
    CHECK(rec["error"]["code"] == "DegenerateForm");
    CHECK(rec["path"] == "a.csv");
}

TEST_CASE("batch output is independent of parallelism") {
    TempDir dir;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 24; ++k) {
        const int n = 2 + k % 5;
        std::ostringstream csv;
        csv.precision(17);
        std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = u(rng);
        for (const auto& row : m) {
            for (std::size_t j = 0; j < row.size(); ++j) csv << (j ? "," : "") << row[j];
            csv << "\n";
        }
        dir.write("m" + std::to_string(100 + k) + ".csv", csv.str());
    }
    dir.write("zz_identity.csv", "1,0\n0,1\n");
    const auto inputs = collect_inputs({dir.path.string()});
    CHECK(inputs.size() == 25);
    for (bool json : {true, false}) {
        BatchOptions serial;
        serial.json = json;
        serial.frame = true;
        BatchOptions parallel = serial;
        parallel.parallel = 4;
        const auto a = run_batch(inputs, serial);
        const auto b = run_batch(inputs, parallel);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == 2);
        CHECK(a.reports == 24);
        CHECK(a.errors == 1);
    }
    dir.write("zzz_bad.csv", "1,2\n3\n");
    const auto with_bad = run_batch(collect_inputs({dir.path.string()}), BatchOptions{});
    CHECK(with_bad.exit_code == 1);
    CHECK_THROWS_CODE(collect_inputs({(dir.path / "missing").string()}), IoError);
    CHECK_THROWS_CODE(collect_inputs({}), InvalidArgument);
}

TEST_CASE("enumerate and demos") {
    const auto parts = enumerate("partitions", 4, std::nullopt);
    CHECK(parts["rows"].size() == 5);
    CHECK(enumerate("coxeter", 4, std::nullopt)["fvector"] == nlohmann::json::array({14, 36, 24}));
    CHECK(enumerate("associahedron", 4, std::nullopt)["fvector"] == nlohmann::json::array({5, 5, 1}));
    CHECK(enumerate("coxeter", 3, 0)["faces"]["list"].size() == 6);
    CHECK_THROWS_CODE(enumerate("coxeter", 99, std::nullopt), OutOfRange);
    const auto loop = groupoid_demo("loop", 3, {});
    CHECK(loop["objects"] == 6);
    CHECK(loop["morphisms"] == 6);
    const auto labelled = groupoid_demo("labelled", 3, {0, 0, 1});
    CHECK(labelled["isotropy_of_ascending"] == 16);
    CHECK(labelled["normalizer_order"] == 16);
    CHECK(labelled["census_count"] == 16);
}

TEST_CASE("command line") {
    TempDir dir;
    const auto good = dir.write("q.csv", "2,1\n1,2\n");
    const auto flat = dir.write("i.csv", "1,0\n0,1\n");
    const auto bad = dir.write("b.csv", "1,2\n");

    auto r = run({"analyze", good.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["parts"] == nlohmann::json::array({1, 1}));
    r = run({"analyze", flat.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("DegenerateForm") != std::string::npos);
    r = run({"analyze", bad.string(), "--json"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["error"]["code"] == "NotSquare");
    CHECK(run({"analyze", (dir.path / "nope.csv").string()}).code == 1);
    CHECK(run({"analyze", good.string(), "--json", "--text"}).code == 1);
    CHECK(run({"enumerate", "tiling", "4", "--json"}).code == 0);
    CHECK(run({"enumerate", "polygon", "4"}).code == 1);
    CHECK(run({"groupoid-demo", "action", "--n", "3"}).code == 0);
    CHECK(run({"groupoid-demo", "labelled", "--spectrum", "0,zero"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 1);

    r = run({"analyze", good.string(), "--json"});
    CHECK(nlohmann::json::parse(r.out)["normalized_eigenvalues"] == nlohmann::json::array({0.0, 1.0}));
    const auto phy = dir.write("d.phy", "3\nA 0 1 2\nB 1 0 1\nC 2 1 0\n");
    r = run({"analyze", phy.string(), "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["input"]["names"] == nlohmann::json::array({"A", "B", "C"}));

    TempDir empty;
    r = run({"batch", empty.path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("no inputs") != std::string::npos);

    r = run({"batch", good.string(), flat.string(), "--json"});
    CHECK(r.code == 2);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t reports = 0, errors = 0;
    while (std::getline(lines, line)) {
        const auto doc = nlohmann::json::parse(line);
        if (doc.contains("error")) ++errors;
        if (doc.contains("parts")) ++reports;
    }
    CHECK(reports == 1);
    CHECK(errors == 1);

    const auto out_file = dir.path / "batch.jsonl";
    r = run({"batch", good.string(), flat.string(), "--json", "--out", out_file.string(), "--parallel", "2"});
    CHECK(r.code == 2);
    CHECK(fs::file_size(out_file) > 0);
}

TEST_CASE("installed binary exit codes") {
    TempDir dir;
    const auto good = dir.write("q.csv", "2,1\n1,2\n");
    const auto flat = dir.write("i.csv", "1,0\n0,1\n");
    const std::string exe = EIGENSTRATA_CLI_PATH;
    auto run = [&](const std::string& args) {
        const int status = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    CHECK(run("analyze " + good.string()) == 0);
    CHECK(run("analyze " + flat.string()) == 2);
    CHECK(run("analyze") == 1);
}
