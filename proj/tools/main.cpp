#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hv/acceptance.hpp"
#include "hv/constants.hpp"
#include "hv/profile.hpp"
#include "hv/report.hpp"
#include "hv/sharpness.hpp"
#include "hv/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::vector<double> parse_double_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<double> out;
  double x;
  while (is >> x) out.push_back(x);
  if (out.empty()) throw CLI::ValidationError("empty numeric list: " + text);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double x : parse_double_list(text)) out.push_back(static_cast<int>(x));
  return out;
}

// "lo:hi:count" -> count log-spaced points 10^lo .. 10^hi
std::vector<double> parse_t_log(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ':', ' ');
  std::istringstream is(s);
  double lo, hi;
  int count;
  if (!(is >> lo >> hi >> count) || count < 2 || !(hi > lo))
    throw CLI::ValidationError("expected lo:hi:count log spec, got " + text);
  std::vector<double> out(count);
  for (int j = 0; j < count; ++j)
    out[j] = std::pow(10.0, lo + (hi - lo) * j / (count - 1.0));
  return out;
}

hv::Profile load_profile_arg(const std::string& fn) {
  if (fn.rfind("file:", 0) != 0)
    throw CLI::ValidationError(
        "this inequality takes a profile: use --function file:<path>");
  const std::string path = fn.substr(5);
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("cannot open " + path);
  return hv::Profile::load(is);
}

struct OutputSink {
  std::string path;
  std::string format = "csv";
  void emit(const std::vector<hv::InequalityReport>& rows,
            const std::vector<std::string>& comments) const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      os = &file;
    }
    if (format == "json")
      hv::write_json(*os, rows);
    else
      hv::write_csv(*os, rows, comments);
  }
};

int status_exit(const std::vector<hv::InequalityReport>& rows) {
  for (const auto& r : rows)
    if (r.status == hv::Status::violated) return kExitViolated;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification of sharp Poincare and Poincare-Sobolev "
      "inequalities in higher-order Lorentz-Sobolev spaces on hyperbolic "
      "space"};
  app.require_subcommand(1);
  app.set_config("--config")->envname("HYPERVERIFY_CONFIG");
  app.failure_message(CLI::FailureMessage::help);

  std::string n_list = "3", m_list = "1", p_list = "2", q_list = "2";
  std::string t_log = "-9:9:100";
  std::vector<std::string> functions;
  std::string ineq;
  double tol = 1e-9, eps = 0.01;
  std::string r_list = "1e2,1e4,1e6";
  int jobs = 1;
  OutputSink sink;

  auto add_common = [&](CLI::App* cmd, bool with_fn) {
    cmd->add_option("--n", n_list, "dimension(s), comma list");
    cmd->add_option("--m", m_list, "derivative order(s), comma list");
    cmd->add_option("--p", p_list, "Lorentz exponent(s) p, comma list");
    cmd->add_option("--q", q_list, "Lorentz exponent(s) q, comma list");
    cmd->add_option("--t-log", t_log, "t grid as lo:hi:count (log spec)");
    cmd->add_option("--tol", tol, "violation tolerance (relative)");
    cmd->add_option("--jobs", jobs, "worker threads (output order fixed)");
    cmd->add_option("--format", sink.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", sink.path, "output path (default stdout)");
    if (with_fn)
      cmd->add_option("--function", functions,
                      "bump(rho0,k) | plateau(r1,r2) | file:<path>");
  };

  CLI::App* constants = app.add_subcommand(
      "constants", "print C(n,m,p) and S(n,m,p) for a parameter grid");
  add_common(constants, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "check one inequality on given parameters");
  verify->add_option("inequality", ineq, "registry name")->required();
  add_common(verify, true);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Cartesian-product verification over parameter ranges");
  sweep_cmd->add_option("inequality", ineq, "registry name")->required();
  add_common(sweep_cmd, true);

  CLI::App* sharp = app.add_subcommand(
      "sharpness", "extremal-family ratio experiments for C(n,m,p)");
  add_common(sharp, false);
  sharp->add_option("--eps", eps, "cutoff-rule epsilon");
  sharp->add_option("--R", r_list, "outer scales, comma list");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full acceptance suite");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (constants->parsed()) {
      std::ostringstream body;
      body << "n,m,p,C,S\n";
      for (int n : parse_int_list(n_list))
        for (int m : parse_int_list(m_list))
          for (double p : parse_double_list(p_list)) {
            body << n << ',' << m << ',' << hv::format_sig17(p) << ','
                 << hv::format_sig17(hv::poincare_constant(n, m, p)) << ',';
            if (p * m < n)
              body << hv::format_sig17(hv::sobolev_constant(n, m, p));
            else
              body << "n/a (p >= n/m)";
            body << '\n';
          }
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!sink.path.empty()) {
        file.open(sink.path);
        os = &file;
      }
      *os << body.str();
      return kExitOk;
    }

    if (verify->parsed() || sweep_cmd->parsed()) {
      std::vector<hv::InequalityReport> rows;
      if (ineq == "hardy-maximal" || ineq == "Tnorm") {
        if (functions.empty())
          throw CLI::ValidationError("--function file:<path> required");
        for (const std::string& fn : functions) {
          const hv::Profile v = load_profile_arg(fn);
          for (int n : parse_int_list(n_list))
            for (double p : parse_double_list(p_list))
              for (double q : parse_double_list(q_list)) {
                if (ineq == "hardy-maximal")
                  rows.push_back(hv::check_hardy_maximal(v, p, q, tol));
                else
                  rows.push_back(hv::check_tnorm(v, fn, n, p, q, tol));
              }
          if (ineq == "hardy-maximal") break;  // n plays no role
        }
      } else if (ineq == "1d-hardy") {
        if (functions.empty())
          throw CLI::ValidationError(
              "--function file:<path> with 't y' knot lines required");
        for (const std::string& fn : functions) {
          if (fn.rfind("file:", 0) != 0)
            throw CLI::ValidationError("1d-hardy takes --function file:<path>");
          std::ifstream is(fn.substr(5));
          if (!is) throw CLI::ValidationError("cannot open " + fn.substr(5));
          std::vector<double> ts, ys;
          double t, y;
          while (is >> t >> y) {
            ts.push_back(t);
            ys.push_back(y);
          }
          for (double p : parse_double_list(p_list))
            for (double q : parse_double_list(q_list))
              rows.push_back(hv::check_1d_hardy(ts, ys, p, q, tol));
        }
      } else {
        hv::SweepSpec spec;
        spec.inequality = ineq;
        spec.ns = parse_int_list(n_list);
        spec.ms = parse_int_list(m_list);
        spec.ps = parse_double_list(p_list);
        spec.qs = parse_double_list(q_list);
        spec.t_grid = parse_t_log(t_log);
        spec.functions = functions;
        spec.tol = tol;
        spec.jobs = jobs;
        rows = hv::sweep(spec);
      }
      const std::vector<std::string> comments = {
          "inequality " + ineq, "n " + n_list, "m " + m_list, "p " + p_list,
          "q " + q_list,        "t-log " + t_log,
          "tol " + hv::format_sig17(tol)};
      sink.emit(rows, comments);
      return status_exit(rows);
    }

    if (sharp->parsed()) {
      std::ostringstream body;
      body << "# eps " << hv::format_sig17(eps) << "\n";
      body << "n,m,p,q,epsilon,a,R,ratio,C_pow_q,ratio_over_target\n";
      bool violated = false;
      for (int n : parse_int_list(n_list))
        for (int m : parse_int_list(m_list))
          for (double p : parse_double_list(p_list))
            for (double q : parse_double_list(q_list))
              for (double R : parse_double_list(r_list)) {
                const hv::SharpnessResult r =
                    hv::sharpness_experiment(n, m, p, q, eps, R);
                body << n << ',' << m << ',' << hv::format_sig17(p) << ','
                     << hv::format_sig17(q) << ',' << hv::format_sig17(eps)
                     << ',' << hv::format_sig17(r.a) << ','
                     << hv::format_sig17(R) << ','
                     << hv::format_sig17(r.ratio) << ','
                     << hv::format_sig17(r.C_pow_q) << ','
                     << hv::format_sig17(r.ratio / r.C_pow_q) << '\n';
                if (r.ratio < r.C_pow_q * (1.0 - 1e-8)) violated = true;
              }
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!sink.path.empty()) {
        file.open(sink.path);
        os = &file;
      }
      *os << body.str();
      return violated ? kExitViolated : kExitOk;
    }

    // selftest
    const auto results = hv::run_acceptance(&std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "selftest: all criteria pass"
                      : "selftest: FAILURES present")
              << std::endl;
    return all ? kExitOk : kExitViolated;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
