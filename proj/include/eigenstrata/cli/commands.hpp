#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace eigenstrata::cli {

/// kind: partitions | coxeter | associahedron | tiling. For coxeter and
/// associahedron a dimension lists the faces of that dimension.
nlohmann::json enumerate(const std::string& kind, int n, std::optional<int> dim);
std::string render_enumeration_text(const nlohmann::json& table);

/// scenario: action | chambers | loop | labelled. `n` sizes the first
/// three; `spectrum` drives "labelled".
nlohmann::json groupoid_demo(const std::string& scenario, int n, const std::vector<double>& spectrum);
std::string render_demo_text(const nlohmann::json& demo);

/// Whole command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigenstrata::cli
