#include "cvbell/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cvbell/bell.hpp"
#include "cvbell/bell_json.hpp"
#include "cvbell/errors.hpp"
#include "cvbell/figures.hpp"
#include "cvbell/optimizer.hpp"
#include "cvbell/verify.hpp"

namespace cvbell {

namespace {

struct Flags {
  int n = 0;
  bool full = false;
  double r = 0.0;
  double j = 0.0;
  double a = 0.0;
  double hi = 0.0;
  bool asymptotic = false;
  std::vector<double> phases;
  int which = 0;
  std::string out_path;
  bool fast = false;
};

int cmd_expand(const Flags& f, std::ostream& out) {
  nlohmann::ordered_json doc = classes_to_json(class_coefficients(f.n));
  if (f.full) doc["terms"] = terms_to_json(f.n, mk_expand(f.n))["terms"];
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_eval(const Flags& f, const CLI::App& sub, std::ostream& out) {
  if (f.asymptotic) {
    const auto v = bell_asymptotic(f.n, f.a);
    out << "n,a,value,cancellation_estimate\n"
        << f.n << ',' << format_real(f.a) << ',' << format_real(v.value) << ','
        << format_real(v.cancellation_error) << '\n';
    return kExitOk;
  }
  if (sub.count("--r") == 0 || sub.count("--j") == 0) {
    throw InvalidArgument("eval: --r and --j are required unless --asymptotic is given");
  }
  BellValue v;
  if (sub.count("--phases") > 0) {
    if (static_cast<int>(f.phases.size()) != f.n) {
      throw InvalidArgument("eval: --phases needs exactly n values");
    }
    v = bell_value_general(f.n, f.r, SettingsTable::equal_magnitude(f.j, f.phases));
  } else {
    v = bell_value_equal_settings(f.n, f.r, f.j);
  }
  out << "n,r,j,value,cancellation_estimate\n"
      << f.n << ',' << format_real(f.r) << ',' << format_real(f.j) << ',' << format_real(v.value)
      << ',' << format_real(v.cancellation_error) << '\n';
  return kExitOk;
}

int cmd_max(const Flags& f, const CLI::App& sub, std::ostream& out) {
  OptimizationResult result;
  if (f.asymptotic) {
    result = maximize_asymptotic(f.n, sub.count("--hi") > 0 ? f.hi : kDefaultScaledCeiling);
  } else {
    if (sub.count("--r") == 0) throw InvalidArgument("max: give --r or --asymptotic");
    result = maximize_over_displacement(f.n, f.r, sub.count("--hi") > 0 ? f.hi : kDefaultDisplacementCeiling);
  }
  out << "n,mode,arg,value\n";
  out << f.n << ",global," << format_real(result.argmax) << ',' << format_real(result.value) << '\n';
  for (const auto& m : result.local_maxima) {
    out << f.n << ",local," << format_real(m.arg) << ',' << format_real(m.value) << '\n';
  }
  return kExitOk;
}

int cmd_figure(const Flags& f, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  write_figure(f.which, csv);
  std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "figure: cannot open " << f.out_path << " for writing\n";
    return kExitIo;
  }
  file << csv.str();
  file.flush();
  if (!file) {
    err << "figure: write to " << f.out_path << " failed\n";
    return kExitIo;
  }
  out << "wrote " << f.out_path << '\n';
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  VerifyOptions options;
  options.fast = f.fast;
  const auto checks = run_verification(options);
  print_report(checks, out);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-variable GHZ states and Mermin-Klyshko Bell violations with displaced parity"};
  app.name("cvbell");
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.\n"
      "CVBELL_THREADS caps the number of worker threads; output does not depend on it.");
  Flags f;

  auto* expand = app.add_subcommand("expand", "Mermin-Klyshko coefficients as JSON");
  expand->add_option("--n", f.n, "Number of parties (>= 2)")->required();
  expand->add_flag("--full", f.full, "Also list every selector-level term (n <= 24)");
  expand->footer(
      "Output: {\"n\": N, \"classes\": [{\"k\", \"num\", \"den_pow2\"}], \"terms\": [{\"num\", "
      "\"den_pow2\", \"selector_bits\"}]}\n"
      "Coefficient = num / 2^den_pow2; bit i of selector_bits marks party i primed; class k\n"
      "is the coefficient of every selector with k primed parties. Zero classes are omitted.");

  auto* eval = app.add_subcommand("eval", "Evaluate B_N at one setting (CSV)");
  eval->add_option("--n", f.n, "Number of parties (>= 2)")->required();
  auto* r_opt = eval->add_option("--r", f.r, "Squeezing parameter r >= 0");
  auto* j_opt = eval->add_option("--j", f.j, "Displacement parameter J >= 0");
  auto* phases_opt = eval->add_option("--phases", f.phases, "Primed-setting phases, comma separated")
                         ->delimiter(',');
  auto* asym_flag = eval->add_flag("--asymptotic", f.asymptotic, "Use the large-squeezing limit");
  auto* a_opt = eval->add_option("--a", f.a, "Scaled displacement A = J e^{2r}");
  asym_flag->excludes(r_opt)->excludes(j_opt)->excludes(phases_opt);
  a_opt->needs(asym_flag);
  asym_flag->needs(a_opt);
  eval->footer("Output: n,r,j,value,cancellation_estimate  or  n,a,value,cancellation_estimate");

  auto* max = app.add_subcommand("max", "Maximize B_N over the displacement (CSV)");
  max->add_option("--n", f.n, "Number of parties (>= 2)")->required();
  auto* max_r = max->add_option("--r", f.r, "Squeezing parameter r >= 0");
  auto* max_asym = max->add_flag("--asymptotic", f.asymptotic, "Maximize the large-squeezing limit over A");
  max_asym->excludes(max_r);
  max->add_option("--hi", f.hi, "Upper end of the search bracket (default 5 for J, 3 for A)");
  max->footer("Output: n,mode,arg,value; one global row, then every local maximum (mode=local).");

  auto* figure = app.add_subcommand("figure", "Write figure data as CSV");
  figure->add_option("--which", f.which, "Figure number")->required()->check(CLI::IsMember({1, 2, 3}));
  figure->add_option("--out", f.out_path, "Output CSV path")->required();
  figure->footer(figure_grid_description());

  auto* verify = app.add_subcommand("verify", "Run the cross-path consistency checks");
  verify->add_flag("--fast", f.fast, "Skip the photon-number-basis oracle");

  std::vector<const char*> argv{"cvbell"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(f, out);
    if (eval->parsed()) return cmd_eval(f, *eval, out);
    if (max->parsed()) return cmd_max(f, *max, out);
    if (figure->parsed()) return cmd_figure(f, out, err);
    if (verify->parsed()) return cmd_verify(f, out);
  } catch (const InvalidArgument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityExceeded& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace cvbell
