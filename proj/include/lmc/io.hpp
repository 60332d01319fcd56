#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "lmc/bin_matrix.hpp"

namespace lmc {

// Matrix text: first line n, then n lines of n characters from {0,1}.
// Synthesis text: first line n, then one "control target" pair per line.
// Both use 1-based labels; lines starting with '#' and blank lines are
// skipped. Errors throw ParseError carrying the offending line number.

/// Does not require invertibility; callers decide.
BinMatrix parse_matrix(std::istream& in);
BinMatrix parse_matrix(const std::string& text);
BinMatrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const BinMatrix& m);

Synthesis parse_synthesis(std::istream& in);
Synthesis parse_synthesis(const std::string& text);
Synthesis read_synthesis_file(const std::filesystem::path& path);
std::string format_synthesis(const Synthesis& s);

}  // namespace lmc
