#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qtp/linearization_space.hpp"
#include "qtp/pencil.hpp"
#include "qtp/qep.hpp"
#include "qtp/quad_poly.hpp"

namespace qtp::io {

using Json = nlohmann::json;

/// Parses JSON text keeping every non-integer number as its exact source
/// lexeme (stored as a string), so decimals survive as exact rationals.
/// Syntax errors raise ParseError with line/column information.
Json parse_json(std::string_view text);

/// Scalar grammar: integer, decimal, "p/q", "a+bi", or {"re": ..., "im": ...}.
/// `where` names the field for diagnostics.
GaussianRational parse_scalar(const Json& j, const std::string& where);
Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// Problem file: {"n": int, "coefficients": {"A20": ..., ..., "A00": ...}}.
QuadPoly2P problem_from_json(const Json& j, const std::string& where = "");
/// System file: {"Q1": problem, "Q2": problem}.
QuadSystem2P system_from_json(const Json& j);
/// Pencil file: {"m": int, "A1hat": ..., "A2hat": ..., "A3hat": ...}.
Pencil2P pencil_from_json(const Json& j);
/// Blocks file: {"n": int, "Y1": 3n x n, "Z1": 3n x n, "Z2": 3n x n}.
FreeBlocks blocks_from_json(const Json& j);

/// Canonical serializations: fixed key order, two-space indent, one matrix
/// row per line, real scalars as lowest-terms "p/q" strings and complex
/// scalars as {"re": "p/q", "im": "p/q"}. Output ends with a newline.
std::string write_problem(const QuadPoly2P& q);
std::string write_system(const QuadSystem2P& sys);
std::string write_pencil(const Pencil2P& l);
std::string write_blocks(const FreeBlocks& b);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

QuadPoly2P read_problem(const std::filesystem::path& path);
QuadSystem2P read_system(const std::filesystem::path& path);
Pencil2P read_pencil(const std::filesystem::path& path);
FreeBlocks read_blocks(const std::filesystem::path& path);

/// Comma-separated scalars, e.g. "1,1/2,-3+i".
std::vector<GaussianRational> parse_scalar_list(std::string_view text);

/// Canonical scalar text used in files and reports.
std::string scalar_text(const GaussianRational& z);

}  // namespace qtp::io
