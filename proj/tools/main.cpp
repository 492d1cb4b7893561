#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "ksolve/immersion.hpp"
#include "ksolve/interval_linalg.hpp"
#include "ksolve/newton.hpp"
#include "ksolve/problem_io.hpp"
#include "ksolve/report.hpp"
#include "ksolve/splitting.hpp"

namespace {

using namespace ksolve;

struct CommonArgs {
  std::string input;
  std::string report_format = "text";
  bool dualize_matrix = false;
  bool dualize_rhs = false;
};

struct SolveArgs : CommonArgs {
  std::string method = "armsplit";
  double tol = -1.0;
  long long max_iter = -1;
  double tau = 1.0;
};

struct CheckArgs : CommonArgs {
  std::string criterion = "abs-regular";
};

struct VerifyArgs : CommonArgs {
  std::string solution;
  double tol = 1e-10;
};

std::string fmt_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load_problem(const CommonArgs& args) {
  ProblemFile pf = parse_problem(read_file(args.input));
  pf.dualize_matrix = args.dualize_matrix;
  pf.dualize_rhs = args.dualize_rhs;
  if (pf.dualize_matrix) pf.A = mat_dual(pf.A);
  if (pf.dualize_rhs) pf.b = vec_dual(pf.b);
  return pf;
}

constexpr const char* kWarning =
    "iteration did not converge; the printed solution is not a verified "
    "formal solution";

void emit_solve_report(const SolveArgs& args, const SolveReport& rep) {
  const bool ok = rep.status == SolveStatus::Converged;
  if (args.report_format == "json") {
    nlohmann::json j;
    j["method"] = args.method;
    j["status"] = to_string(rep.status);
    j["iterations"] = rep.iterations;
    j["residual"] = rep.residual;
    if (rep.rho_estimate) {
      j["rho"] = *rep.rho_estimate;
    } else {
      j["rho"] = nullptr;
    }
    if (!ok) j["warning"] = kWarning;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "method: " << args.method << "\n";
    std::cerr << "status: " << to_string(rep.status) << "\n";
    std::cerr << "iterations: " << rep.iterations << "\n";
    std::cerr << "residual: " << fmt_double(rep.residual) << "\n";
    if (rep.rho_estimate) {
      std::cerr << "rho: " << fmt_double(*rep.rho_estimate) << "\n";
    }
    if (!ok) std::cerr << "WARNING: " << kWarning << "\n";
  }
}

int cmd_solve(const SolveArgs& args) {
  const ProblemFile pf = load_problem(args);
  const double tol = args.tol >= 0.0
                         ? args.tol
                         : (args.method == "newton" ? 1e-12 : 1e-10);
  const std::size_t max_iter =
      args.max_iter > 0 ? static_cast<std::size_t>(args.max_iter)
                        : (args.method == "newton" ? 100 : 500);

  IntervalVector x;
  SolveReport rep;
  if (args.method == "newton") {
    NewtonOptions opts;
    opts.tau = args.tau;
    opts.tol = tol;
    opts.max_iter = max_iter;
    std::tie(x, rep) = newton_solve(pf.A, pf.b, opts);
  } else if (args.method == "trnsplit") {
    std::tie(x, rep) =
        trn_iterate(pf.A, pf.b, trn_split(pf.A), std::nullopt, tol, max_iter);
  } else if (args.method == "armsplit-simple") {
    std::tie(x, rep) = arm_iterate(pf.A, pf.b, arm_split_simple(pf.A),
                                   std::nullopt, tol, max_iter);
  } else {
    std::tie(x, rep) = arm_iterate(pf.A, pf.b, arm_split_markov(pf.A),
                                   std::nullopt, tol, max_iter);
  }

  for (std::size_t i = 0; i < x.size(); ++i) {
    std::cout << format_interval(x[i]) << "\n";
  }
  emit_solve_report(args, rep);
  return rep.status == SolveStatus::Converged ? 0 : 2;
}

int cmd_check(const CheckArgs& args) {
  const ProblemFile pf = load_problem(args);
  const bool json = args.report_format == "json";
  nlohmann::json j;
  bool satisfied = false;

  if (args.criterion == "abs-regular") {
    const AbsoluteRegularity r = is_absolutely_regular(mid_matrix(pf.A));
    satisfied = r.regular;
    if (json) {
      j["criterion"] = "abs-regular";
      j["matrix_nonsingular"] = r.matrix_nonsingular;
      j["magnitude_nonsingular"] = r.magnitude_nonsingular;
    } else {
      std::cout << "criterion: abs-regular\n";
      std::cout << "matrix nonsingular: " << (r.matrix_nonsingular ? "yes" : "no")
                << "\n";
      std::cout << "magnitude matrix nonsingular: "
                << (r.magnitude_nonsingular ? "yes" : "no") << "\n";
    }
  } else if (args.criterion == "arm") {
    const ArmCriterion c = arm_convergence_criterion(arm_split_markov(pf.A));
    satisfied = c.satisfied;
    if (json) {
      j["criterion"] = "arm";
      j["rho"] = c.rho;
      j["threshold"] = 1.0;
    } else {
      std::cout << "criterion: arm\n";
      std::cout << "rho: " << fmt_double(c.rho) << "\n";
      std::cout << "threshold: 1 (strict)\n";
    }
  } else {
    const TriangularSplitting split = trn_split(pf.A);
    const TrnCriterion c =
        trn_convergence_criterion(permute_rows(pf.A, split.perm));
    satisfied = c.satisfied;
    double s_max = 0.0;
    for (double s : c.s) s_max = std::max(s_max, s);
    if (json) {
      j["criterion"] = "trn";
      j["rho"] = c.rho_Q;
      j["threshold"] = 1.0;
      j["s_max"] = s_max;
      j["diag_dominant"] = c.diag_dominant;
    } else {
      std::cout << "criterion: trn\n";
      std::cout << "rho: " << fmt_double(c.rho_Q) << "\n";
      std::cout << "threshold: 1 (strict)\n";
      std::cout << "max s: " << fmt_double(s_max) << "\n";
      std::cout << "diagonally dominant: " << (c.diag_dominant ? "yes" : "no")
                << "\n";
    }
  }

  if (json) {
    j["satisfied"] = satisfied;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "verdict: " << (satisfied ? "satisfied" : "not satisfied")
              << "\n";
  }
  return satisfied ? 0 : 2;
}

int cmd_verify(const VerifyArgs& args) {
  const ProblemFile pf = load_problem(args);
  const IntervalVector x = parse_solution(read_file(args.solution), pf.n);
  const double r = residual(pf.A, x, pf.b);
  const bool ok = r <= args.tol;
  if (args.report_format == "json") {
    nlohmann::json j;
    j["residual"] = r;
    j["tol"] = args.tol;
    j["verified"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "residual: " << fmt_double(r) << "\n";
    std::cout << "verdict: " << (ok ? "verified" : "not verified") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal solutions of interval linear systems"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CheckArgs check_args;
  VerifyArgs verify_args;

  CLI::App* solve = app.add_subcommand("solve", "solve a system iteratively");
  solve->add_option("-i,--input", solve_args.input, "problem file")->required();
  solve->add_option("-m,--method", solve_args.method, "solver")
      ->check(CLI::IsMember({"armsplit", "armsplit-simple", "trnsplit", "newton"}));
  solve->add_option("--tol", solve_args.tol, "stopping tolerance");
  solve->add_option("--max-iter", solve_args.max_iter, "iteration cap");
  solve->add_option("--tau", solve_args.tau, "damping factor (newton)");
  solve->add_flag("--dualize-matrix", solve_args.dualize_matrix,
                  "dualize every matrix entry");
  solve->add_flag("--dualize-rhs", solve_args.dualize_rhs,
                  "dualize every right-hand side entry");
  solve->add_option("--report", solve_args.report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* check = app.add_subcommand("check", "evaluate a convergence criterion");
  check->add_option("-i,--input", check_args.input, "problem file")->required();
  check->add_option("--criterion", check_args.criterion, "criterion to check")
      ->check(CLI::IsMember({"abs-regular", "arm", "trn"}));
  check->add_flag("--dualize-matrix", check_args.dualize_matrix,
                  "dualize every matrix entry");
  check->add_flag("--dualize-rhs", check_args.dualize_rhs,
                  "dualize every right-hand side entry");
  check->add_option("--report", check_args.report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "verify a candidate solution");
  verify->add_option("-i,--input", verify_args.input, "problem file")->required();
  verify->add_option("--solution", verify_args.solution, "candidate solution file")
      ->required();
  verify->add_option("--tol", verify_args.tol, "residual threshold");
  verify->add_flag("--dualize-matrix", verify_args.dualize_matrix,
                   "dualize every matrix entry");
  verify->add_flag("--dualize-rhs", verify_args.dualize_rhs,
                   "dualize every right-hand side entry");
  verify->add_option("--report", verify_args.report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (check->parsed()) return cmd_check(check_args);
    return cmd_verify(verify_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
