#pragma once

#include <cstddef>
#include <string>

#include "ksolve/interval_linalg.hpp"

namespace ksolve {

struct ProblemFile {
  std::size_t n = 0;
  IntervalMatrix A;
  IntervalVector b;
  bool dualize_matrix = false;
  bool dualize_rhs = false;
};

// Text format: an `n <dim>` line, a `matrix` section with n x n interval
// tokens in row-major order, and an `rhs` section with n tokens. Tokens look
// like [lo,hi] with optional whitespace after the comma; `#` starts a comment
// that runs to the end of the line.
ProblemFile parse_problem(const std::string& text);

// Whitespace-separated interval tokens, one vector of the given length;
// `#` comments allowed.
IntervalVector parse_solution(const std::string& text, std::size_t n);

std::string format_problem(const ProblemFile& p);

}  // namespace ksolve
