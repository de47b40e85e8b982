#include "hv/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "json.hpp"

namespace hv {

std::string status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::indeterminate: return "indeterminate";
    case Status::unsupported: return "unsupported";
  }
  return "unknown";
}

std::string format_sig17(double x) {
  char buf[48];
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

InequalityReport make_report(std::string name, int n, int m, double p,
                             double q, std::string function, double lhs,
                             double rhs, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.n = n;
  r.m = m;
  r.p = p;
  r.q = q;
  r.function = std::move(function);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  if ((std::isinf(lhs) && std::isinf(rhs)) || std::isnan(lhs) ||
      std::isnan(rhs)) {
    r.abs_slack = r.rel_slack = 0.0;
    r.status = Status::indeterminate;
    return r;
  }
  if (std::isinf(lhs) || std::isinf(rhs)) {
    // exactly one side infinite: the comparison is unambiguous
    const double inf = std::numeric_limits<double>::infinity();
    r.abs_slack = r.rel_slack = std::isinf(lhs) ? inf : -inf;
    r.status = std::isinf(lhs) ? Status::holds : Status::violated;
    return r;
  }
  r.abs_slack = lhs - rhs;
  const double scale =
      std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  r.rel_slack = r.abs_slack / scale;
  r.status = (r.rel_slack >= -tol) ? Status::holds : Status::violated;
  return r;
}

InequalityReport unsupported_report(std::string name, int n, int m, double p,
                                    double q, std::string function,
                                    std::string reason) {
  InequalityReport r;
  r.name = std::move(name);
  r.n = n;
  r.m = m;
  r.p = p;
  r.q = q;
  r.function = std::move(function);
  if (!reason.empty())
    r.function += (r.function.empty() ? "[" : " [") + reason + "]";
  r.status = Status::unsupported;
  return r;
}

void write_csv(std::ostream& os, const std::vector<InequalityReport>& rows,
               const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "name,n,m,p,q,function,lhs,rhs,abs_slack,rel_slack,status,tol\n";
  for (const InequalityReport& r : rows) {
    os << r.name << ',' << r.n << ',' << r.m << ',' << format_sig17(r.p)
       << ',' << format_sig17(r.q) << ',' << r.function << ','
       << format_sig17(r.lhs) << ',' << format_sig17(r.rhs) << ','
       << format_sig17(r.abs_slack) << ',' << format_sig17(r.rel_slack) << ','
       << status_name(r.status) << ',' << format_sig17(r.tol) << "\n";
  }
}

void write_json(std::ostream& os, const std::vector<InequalityReport>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const InequalityReport& r : rows) {
    arr.push_back({{"name", r.name},
                   {"n", r.n},
                   {"m", r.m},
                   {"p", r.p},
                   {"q", r.q},
                   {"function", r.function},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_slack", r.abs_slack},
                   {"rel_slack", r.rel_slack},
                   {"status", status_name(r.status)},
                   {"tol", r.tol}});
  }
  os << arr.dump(2) << "\n";
}

const std::vector<std::string>& inequality_registry() {
  static const std::vector<std::string> names = {
      "keyest",       "keyyeu",     "phi-monotone", "hardy-maximal",
      "1d-hardy",     "major",      "order2I1",     "order2I2",
      "order2II2",    "order2II3",  "LSorder2*",    "LSorder2",
      "improvedLS2",  "improvedLS2a", "poincare",   "poincare-sobolev",
      "Tnorm"};
  return names;
}

}  // namespace hv
