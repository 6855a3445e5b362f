#include "eigenstrata/cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eigenstrata/error.hpp"

namespace eigenstrata::cli {

namespace {

// Bound on PHYLIP's declared order, so a corrupt header cannot demand
// gigabytes before the rows run out.
constexpr long kMaxDeclaredOrder = 100'000;

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::optional<double> to_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || token.empty()) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool blank_line(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return is_blank(c); });
}

MatrixInput parse_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    const auto lines = split_lines(text);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const std::string_view line = lines[l];
        if (blank_line(line)) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
            std::size_t a = start, b = stop;
            while (a < b && is_blank(line[a])) ++a;
            while (b > a && is_blank(line[b - 1])) --b;
            const auto value = to_number(line.substr(a, b - a));
            if (!value) {
                parse_error(l + 1, a + 1,
                            a == b ? "empty field" : "not a finite number: '" + std::string(line.substr(a, b - a)) + "'");
            }
            row.push_back(*value);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_error(1, 1, "empty input");
    return {SymmetricMatrix(rows), {}, MatrixFormat::Csv};
}

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    const auto lines = split_lines(text);
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const std::string_view line = lines[l];
        std::size_t k = 0;
        while (k < line.size()) {
            while (k < line.size() && is_blank(line[k])) ++k;
            const std::size_t begin = k;
            while (k < line.size() && !is_blank(line[k])) ++k;
            if (k > begin) tokens.push_back({line.substr(begin, k - begin), l + 1, begin + 1});
        }
    }
    return tokens;
}

MatrixInput parse_phylip(std::string_view text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) parse_error(1, 1, "empty input");
    const Token& header = tokens.front();
    long declared = 0;
    const auto [end, ec] = std::from_chars(header.text.data(), header.text.data() + header.text.size(), declared);
    if (ec != std::errc() || end != header.text.data() + header.text.size() || declared < 1 ||
        declared > kMaxDeclaredOrder) {
        parse_error(header.line, header.column, "expected the taxon count as a positive integer");
    }
    const auto n = static_cast<std::size_t>(declared);
    if (tokens.size() > 1 && tokens[1].line == header.line) {
        parse_error(tokens[1].line, tokens[1].column, "unexpected token after the taxon count");
    }

    std::vector<std::vector<double>> rows(n);
    std::vector<std::string> names;
    std::size_t pos = 1;
    for (std::size_t r = 0; r < n; ++r) {
        if (pos >= tokens.size()) {
            const Token& last = tokens.back();
            parse_error(last.line, last.column + last.text.size(),
                        "unexpected end of input: expected row " + std::to_string(r + 1) + " of " + std::to_string(n));
        }
        const Token& name = tokens[pos++];
        names.emplace_back(name.text);
        while (rows[r].size() < n) {
            if (pos >= tokens.size()) {
                const Token& last = tokens.back();
                parse_error(last.line, last.column + last.text.size(),
                            "unexpected end of input in row " + std::to_string(r + 1));
            }
            const Token& tok = tokens[pos];
            const auto value = to_number(tok.text);
            if (!value) {
                if (rows[r].size() == r && tok.line != name.line) {
                    parse_error(tok.line, tok.column,
                                "row " + std::to_string(r + 1) + " has " + std::to_string(r) +
                                    " values: lower-triangular PHYLIP matrices are not supported, use the square form");
                }
                parse_error(tok.line, tok.column,
                            "expected a distance, got '" + std::string(tok.text) + "' (row " + std::to_string(r + 1) +
                                " needs " + std::to_string(n) + " values)");
            }
            rows[r].push_back(*value);
            ++pos;
        }
    }
    if (pos < tokens.size()) {
        parse_error(tokens[pos].line, tokens[pos].column, "trailing data after " + std::to_string(n) + " rows");
    }
    return {SymmetricMatrix(rows), std::move(names), MatrixFormat::Phylip};
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

MatrixInput parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        parse_error(line, column, "malformed JSON");
    }
    const nlohmann::json* matrix = &doc;
    std::vector<std::string> names;
    if (doc.is_object()) {
        if (!doc.contains("matrix")) parse_error(1, 1, "JSON object has no \"matrix\" member");
        matrix = &doc["matrix"];
        if (doc.contains("names")) {
            const auto& jnames = doc["names"];
            if (!jnames.is_array()) parse_error(1, 1, "\"names\" must be an array of strings");
            for (const auto& name : jnames) {
                if (!name.is_string()) parse_error(1, 1, "\"names\" must be an array of strings");
                names.push_back(name.get<std::string>());
            }
        }
    }
    if (!matrix->is_array() || matrix->empty()) parse_error(1, 1, "matrix must be a nonempty array of rows");
    std::vector<std::vector<double>> rows;
    for (std::size_t r = 0; r < matrix->size(); ++r) {
        const auto& jrow = (*matrix)[r];
        if (!jrow.is_array()) parse_error(1, 1, "row " + std::to_string(r + 1) + " is not an array");
        std::vector<double> row;
        for (const auto& v : jrow) {
            if (!v.is_number()) parse_error(1, 1, "row " + std::to_string(r + 1) + " has a non-numeric entry");
            const double x = v.get<double>();
            if (!std::isfinite(x)) parse_error(1, 1, "row " + std::to_string(r + 1) + " has a non-finite entry");
            row.push_back(x);
        }
        rows.push_back(std::move(row));
    }
    if (!names.empty() && names.size() != rows.size()) {
        parse_error(1, 1, "\"names\" has " + std::to_string(names.size()) + " entries for " +
                              std::to_string(rows.size()) + " rows");
    }
    return {SymmetricMatrix(rows), std::move(names), MatrixFormat::Json};
}

}  // namespace

MatrixFormat parse_format(std::string_view name) {
    if (name == "auto") return MatrixFormat::Auto;
    if (name == "csv") return MatrixFormat::Csv;
    if (name == "json") return MatrixFormat::Json;
    if (name == "phylip") return MatrixFormat::Phylip;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string_view format_name(MatrixFormat format) noexcept {
    switch (format) {
        case MatrixFormat::Auto: return "auto";
        case MatrixFormat::Csv: return "csv";
        case MatrixFormat::Json: return "json";
        case MatrixFormat::Phylip: return "phylip";
    }
    return "auto";
}

MatrixFormat detect_format(std::string_view text, const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".csv") return MatrixFormat::Csv;
    if (ext == ".json") return MatrixFormat::Json;
    if (ext == ".phy" || ext == ".phylip" || ext == ".dist") return MatrixFormat::Phylip;

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return MatrixFormat::Csv;
    if (text[first] == '[' || text[first] == '{') return MatrixFormat::Json;
    const auto eol = text.find('\n', first);
    std::string_view head = text.substr(first, eol == std::string_view::npos ? std::string_view::npos : eol - first);
    while (!head.empty() && is_blank(head.back())) head.remove_suffix(1);
    if (!head.empty() && std::all_of(head.begin(), head.end(), [](unsigned char c) { return std::isdigit(c); }) &&
        eol != std::string_view::npos) {
        return MatrixFormat::Phylip;
    }
    return MatrixFormat::Csv;
}

MatrixInput parse_matrix_text(std::string_view text, MatrixFormat format, const std::filesystem::path& path) {
    if (format == MatrixFormat::Auto) format = detect_format(text, path);
    switch (format) {
        case MatrixFormat::Csv: return parse_csv(text);
        case MatrixFormat::Json: return parse_json(text);
        case MatrixFormat::Phylip: return parse_phylip(text);
        case MatrixFormat::Auto: break;
    }
    throw Error(ErrorCode::InvalidArgument, "unresolved input format");
}

MatrixInput parse_matrix(const std::filesystem::path& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str(), format, path);
}

}  // namespace eigenstrata::cli
