#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbent/bec.hpp"
#include "mbent/entanglement.hpp"
#include "mbent/errors.hpp"
#include "mbent/qstate.hpp"
#include "mbent/report.hpp"
#include "mbent/selftest.hpp"

namespace mbent::cli {

namespace {

struct ScanFlags {
  int L = 0;
  int n_min = 0;
  int n_max = 0;
  double g = 1.0;
  double omega = 1.0;
  std::string base_mode = "reachable";
  std::string out;
  unsigned threads = 1;
};

void add_scan_flags(CLI::App* cmd, ScanFlags& f) {
  cmd->add_option("--L", f.L, "Total angular momentum")->required();
  cmd->add_option("--n-min", f.n_min, "Smallest boson number")->required();
  cmd->add_option("--n-max", f.n_max, "Largest boson number")->required();
  cmd->add_option("--g", f.g, "Contact coupling");
  cmd->add_option("--omega", f.omega, "Trap frequency");
  cmd->add_option("--base-mode", f.base_mode, "Logarithm base per mode: reachable|cap")
      ->check(CLI::IsMember({"reachable", "cap"}));
  cmd->add_option("--out", f.out, "Output CSV path, '-' for stdout")->required();
  cmd->add_option("--threads", f.threads, "Worker threads for the scan")
      ->check(CLI::PositiveNumber);
}

bec::ModelParams model_params(double g, double omega) {
  if (omega < 0.0) throw DomainError("--omega must be non-negative");
  return {omega, g};
}

std::vector<bec::YrastPoint> run_scan(const ScanFlags& f) {
  bec::ScanOptions options;
  options.base_mode = bec::parse_base_mode(f.base_mode);
  options.threads = f.threads;
  return bec::yrast_scan(f.L, f.n_min, f.n_max, model_params(f.g, f.omega), options);
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  file << data;
  if (!file) throw DomainError("failed writing " + path);
}

int cmd_measure(const std::string& path, std::ostream& out, std::ostream& err) {
  const LoadedState loaded = load_qstate(path);
  if (loaded.renormalized) err << "warning: amplitudes were not normalized; rescaled to unit norm\n";
  out << render_measure(eta_measure(loaded.state), loaded.state.system());
  return kOk;
}

int cmd_w_max(int M, std::ostream& out, std::ostream& err) {
  if (M < 2) throw DomainError("--M must be at least 2");
  const double analytic = w_measure_max(M);
  const std::vector<Complex> equal(static_cast<std::size_t>(M), Complex{1.0, 0.0});
  const double numeric = eta_measure(w_state(M, equal)).eta;
  out << "M=" << M << '\n'
      << "analytic=" << format_fixed(analytic) << '\n'
      << "numeric=" << format_fixed(numeric) << '\n';
  if (std::abs(analytic - numeric) > 1e-10) {
    err << "error: analytic and numeric maxima disagree beyond 1e-10\n";
    return kNumericalFailure;
  }
  return kOk;
}

int cmd_spectrum(int n, int L, double g, double omega, std::ostream& out) {
  const auto levels = bec::block_spectrum(n, L, model_params(g, omega));
  out << "basis_size=" << levels.size() << '\n';
  for (std::size_t k = 0; k < levels.size(); ++k) out << "E_" << k << '=' << format_csv(levels[k]) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"M-body pure-state entanglement and 2D trap yrast analysis", "mbent"};
  app.require_subcommand(1);

  std::string state_path;
  auto* measure = app.add_subcommand("measure", "Entanglement measure of a QSTATE v1 file");
  measure->add_option("--in", state_path, "QSTATE v1 file")->required();

  int w_kinds = 0;
  auto* w_max = app.add_subcommand("w-max", "Maximal measure of M-body one-particle states");
  w_max->add_option("--M", w_kinds, "Number of kinds")->required();

  ScanFlags yrast_flags, occupation_flags;
  auto* yrast = app.add_subcommand("yrast-scan", "Measure along the yrast line as CSV");
  add_scan_flags(yrast, yrast_flags);
  auto* occupation = app.add_subcommand("occupation-scan", "Occupation probabilities as CSV");
  add_scan_flags(occupation, occupation_flags);

  int spec_n = 0, spec_L = 0;
  double spec_g = 1.0, spec_omega = 1.0;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of one (n, L) block");
  spectrum->add_option("--n", spec_n, "Boson number")->required();
  spectrum->add_option("--L", spec_L, "Total angular momentum")->required();
  spectrum->add_option("--g", spec_g, "Contact coupling");
  spectrum->add_option("--omega", spec_omega, "Trap frequency");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*measure) return cmd_measure(state_path, out, err);
    if (*w_max) return cmd_w_max(w_kinds, out, err);
    if (*yrast) {
      std::ostringstream csv;
      write_yrast_csv(csv, run_scan(yrast_flags));
      emit(yrast_flags.out, csv.str(), out);
      return kOk;
    }
    if (*occupation) {
      std::ostringstream csv;
      write_occupation_csv(csv, run_scan(occupation_flags));
      emit(occupation_flags.out, csv.str(), out);
      return kOk;
    }
    if (*spectrum) return cmd_spectrum(spec_n, spec_L, spec_g, spec_omega, out);
    if (*selftest) {
      const SelfTestSummary summary = run_selftest(out);
      if (summary.ok()) return kOk;
      err << "selftest failed: " << summary.first_failure << '\n';
      return kSelfTestFailure;
    }
  } catch (const NotHermitian& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const InvalidDistribution& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mbent::cli
