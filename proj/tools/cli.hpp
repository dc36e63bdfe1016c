#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error (parse, range, cap, validation), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows for every parameter of `family` from its smallest valid value up to
/// `max_param`: group, rank, h, center generator, λ(c_G).
std::string render_table(Family family, int max_param);

/// First line n, then n rows of n entries, each a positive integer or `inf`.
/// Throws ParseError for malformed files and Error when the file is unreadable.
CoxeterMatrix read_matrix_file(const std::string& path);
CoxeterMatrix parse_matrix(const std::string& text);

}  // namespace artin::cli
