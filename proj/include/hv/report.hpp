#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hv {

enum class Status { holds, violated, indeterminate, unsupported };

std::string status_name(Status s);

/// One certified inequality: lhs is always the side proven larger, so
/// abs_slack = lhs - rhs >= 0 when the inequality holds.
struct InequalityReport {
  std::string name;
  int n = 0;
  int m = 0;
  double p = 0.0;
  double q = 0.0;
  std::string function;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_slack = 0.0;
  double rel_slack = 0.0;
  Status status = Status::holds;
  double tol = 1e-9;
};

/// Fill in slack and status from lhs/rhs (holds iff rel_slack >= -tol;
/// both sides infinite -> indeterminate).
InequalityReport make_report(std::string name, int n, int m, double p,
                             double q, std::string function, double lhs,
                             double rhs, double tol);

InequalityReport unsupported_report(std::string name, int n, int m, double p,
                                    double q, std::string function,
                                    std::string reason);

/// Deterministic CSV: 17 significant digits, '\n' line endings, leading
/// '#' comment lines for the run configuration.
void write_csv(std::ostream& os, const std::vector<InequalityReport>& rows,
               const std::vector<std::string>& comments = {});

void write_json(std::ostream& os, const std::vector<InequalityReport>& rows);

/// Fixed 17-significant-digit rendering used everywhere numbers reach an
/// output stream.
std::string format_sig17(double x);

/// Every in-scope inequality name, each reachable through exactly one
/// check_* operation.
const std::vector<std::string>& inequality_registry();

}  // namespace hv
