#include "ksolve/problem_io.hpp"

#include <cctype>
#include <charconv>

namespace ksolve {

namespace {

constexpr std::size_t kMaxDimension = 10000;

class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip();
    return pos_ >= s_.size();
  }

  int line() const { return line_; }
  int column() const { return col_; }

  std::string keyword() {
    skip();
    const int l = line_, c = col_;
    std::string w;
    while (pos_ < s_.size() &&
           std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      w += s_[pos_];
      advance();
    }
    if (w.empty()) {
      throw ParseError("expected a section keyword", l, c);
    }
    return w;
  }

  std::size_t dimension() {
    skip();
    const int l = line_, c = col_;
    std::size_t end = pos_;
    while (end < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[end]))) {
      ++end;
    }
    std::size_t value = 0;
    const auto r = std::from_chars(s_.data() + pos_, s_.data() + end, value);
    if (end == pos_ || r.ec != std::errc() || r.ptr != s_.data() + end) {
      throw ParseError("expected a positive integer dimension", l, c);
    }
    while (pos_ < end) advance();
    if (value == 0) throw ParseError("dimension must be at least 1", l, c);
    if (value > kMaxDimension) throw ParseError("dimension too large", l, c);
    return value;
  }

  KInterval interval() {
    skip();
    const int l = line_, c = col_;
    expect('[', "expected '[' to open an interval token");
    const double lo = number();
    expect(',', "expected ',' between interval endpoints");
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) advance();
    const double hi = number();
    expect(']', "expected ']' to close the interval token");
    try {
      return {lo, hi};
    } catch (const OverflowError&) {
      throw ParseError("interval endpoint is not finite", l, c);
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void expect(char ch, const char* msg) {
    if (pos_ >= s_.size() || s_[pos_] != ch) {
      throw ParseError(msg, line_, col_);
    }
    advance();
  }

  double number() {
    const int l = line_, c = col_;
    double value = 0.0;
    const auto r =
        std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (r.ec == std::errc::result_out_of_range) {
      throw ParseError("number out of range", l, c);
    }
    if (r.ec != std::errc() || r.ptr == s_.data() + pos_) {
      throw ParseError("expected a number", l, c);
    }
    const std::size_t end = r.ptr - s_.data();
    while (pos_ < end) advance();
    return value;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void expect_keyword(Scanner& sc, const char* want) {
  sc.skip();
  const int l = sc.line(), c = sc.column();
  const std::string got = sc.keyword();
  if (got != want) {
    throw ParseError("expected section '" + std::string(want) + "', got '" +
                         got + "'",
                     l, c);
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  Scanner sc(text);
  ProblemFile p;

  expect_keyword(sc, "n");
  p.n = sc.dimension();

  expect_keyword(sc, "matrix");
  p.A = IntervalMatrix(p.n, p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      p.A.set(i, j, sc.interval());
    }
  }

  expect_keyword(sc, "rhs");
  p.b = IntervalVector(p.n);
  for (std::size_t i = 0; i < p.n; ++i) p.b.set(i, sc.interval());

  if (!sc.eof()) {
    const int l = sc.line(), c = sc.column();
    Scanner probe = sc;
    std::string w;
    try {
      w = probe.keyword();
    } catch (const ParseError&) {
      throw ParseError("unexpected trailing content", l, c);
    }
    if (w == "n" || w == "matrix" || w == "rhs") {
      throw ParseError("duplicate section '" + w + "'", l, c);
    }
    throw ParseError("unexpected trailing content", l, c);
  }
  return p;
}

IntervalVector parse_solution(const std::string& text, std::size_t n) {
  Scanner sc(text);
  IntervalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sc.eof()) {
      throw ParseError("expected " + std::to_string(n) +
                           " interval tokens, found " + std::to_string(i),
                       sc.line(), sc.column());
    }
    x.set(i, sc.interval());
  }
  if (!sc.eof()) {
    throw ParseError("expected " + std::to_string(n) +
                         " interval tokens, found more",
                     sc.line(), sc.column());
  }
  return x;
}

std::string format_problem(const ProblemFile& p) {
  std::string out = "n " + std::to_string(p.n) + "\n";
  out += "matrix\n";
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (j > 0) out += ' ';
      out += format_interval(p.A.at(i, j));
    }
    out += '\n';
  }
  out += "rhs\n";
  for (std::size_t i = 0; i < p.n; ++i) {
    if (i > 0) out += ' ';
    out += format_interval(p.b[i]);
  }
  out += '\n';
  return out;
}

}  // namespace ksolve
