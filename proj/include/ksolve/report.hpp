#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ksolve {

enum class SolveStatus {
  Converged,
  MaxIterations,
  Diverged,
  SingularStep,
  CriterionNotMet,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::Diverged: return "Diverged";
    case SolveStatus::SingularStep: return "SingularStep";
    default: return "CriterionNotMet";
  }
}

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::optional<double> rho_estimate;
  std::vector<double> history;
};

}  // namespace ksolve
