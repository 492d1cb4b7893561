#pragma once

#include <stdexcept>
#include <string>

namespace ksolve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct ZeroDivisionError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

struct SplittingError : Error {
  using Error::Error;
};

struct NoValidDiagonalError : Error {
  using Error::Error;
};

struct BoundUnavailableError : Error {
  using Error::Error;
};

struct StartFailureError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;

  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace ksolve
