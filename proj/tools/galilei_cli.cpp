// Command-line surface: every verification as a reproducible report.
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galilei/fieldsys.hpp"
#include "galilei/report.hpp"
#include "galilei/reps.hpp"

namespace {

struct Options {
  std::string format = "text";
  bool timing = false;
};

int emit(galilei::report::Json j, const Options& opt, double ms) {
  if (opt.timing) j["timing_ms"] = int(ms);
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << galilei::report::render_text(j);
  return galilei::report::report_passes(j) ? 0 : 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Galilei-invariant massless field equations"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", opt.timing, "include timing in the report");

  // reps
  auto* reps_cmd = app.add_subcommand("reps", "representation catalogue");
  reps_cmd->require_subcommand(1);
  reps_cmd->add_subcommand("list", "list the ten indecomposable representations");
  std::string check_label = "all";
  auto* reps_check = reps_cmd->add_subcommand("check", "verify the commutation relations");
  reps_check->add_option("label", check_label, "label like 2,2,1 or 'all'");
  std::string indec_label;
  auto* reps_ind = reps_cmd->add_subcommand("indecomposable", "idempotent search");
  reps_ind->add_option("label", indec_label, "label like 2,2,1")->required();

  // contract
  std::string scheme = "v1", rep = "four-vector", scheme_file;
  auto* contract_cmd = app.add_subcommand("contract", "run an Inonu-Wigner contraction");
  contract_cmd->add_option("--scheme", scheme, "v1|v2|v3 or a name for --file");
  contract_cmd->add_option("--file", scheme_file, "matrix of eps-monomial entries");
  contract_cmd->add_option("--rep", rep, "four-vector | four-vector+scalar");

  // covariance
  std::string cov_system = "all";
  auto* cov_cmd = app.add_subcommand("covariance", "exact boost/rotation covariance");
  cov_cmd->add_option("system", cov_system, "catalogued system or 'all'");

  // reduce
  std::string red_system, zero_list, drop_list;
  auto* red_cmd = app.add_subcommand("reduce", "impose constraints or drop equations");
  red_cmd->add_option("system", red_system)->required();
  red_cmd->add_option("--zero", zero_list, "components to set to zero (comma separated)");
  red_cmd->add_option("--drop", drop_list, "equations to drop (comma separated)");

  // potentials
  std::string pot_scheme;
  auto* pot_cmd = app.add_subcommand("potentials", "potential / field-strength identities");
  pot_cmd
      ->add_option("scheme", pot_scheme,
                   "magnetic_pot | electric_pot | relativistic | extended_pot | potential_system")
      ->required();

  // limits
  std::string lim_scheme = "v3", lim_target = "extended", eps_list;
  auto* lim_cmd = app.add_subcommand("limits", "float convergence probes");
  lim_cmd->add_option("--scheme", lim_scheme, "v1|v2|v3");
  lim_cmd->add_option("--target", lim_target, "magnetic|electric|extended");
  lim_cmd->add_option("--eps", eps_list, "comma separated eps ladder");

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "system catalogue");
  std::string export_system;
  auto* cat_export = cat_cmd->add_subcommand("export", "text form of a catalogued system");
  cat_export->add_option("system", export_system)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    using namespace galilei::report;
    if (reps_cmd->parsed()) {
      if (reps_cmd->get_subcommand("list")->parsed()) return emit(reps_list(), opt, elapsed());
      if (reps_check->parsed()) return emit(galilei::report::reps_check(check_label), opt, elapsed());
      if (reps_ind->parsed()) return emit(reps_indecomposable(indec_label), opt, elapsed());
    }
    if (contract_cmd->parsed()) {
      std::optional<std::string> file_text;
      if (!scheme_file.empty()) file_text = slurp(scheme_file);
      return emit(contract_report(scheme, rep, file_text), opt, elapsed());
    }
    if (cov_cmd->parsed()) return emit(covariance_report(cov_system), opt, elapsed());
    if (red_cmd->parsed()) {
      if (zero_list.empty() == drop_list.empty()) {
        std::cerr << "reduce: exactly one of --zero / --drop is required\n";
        return 2;
      }
      return emit(reduce_report(red_system, split_list(zero_list), split_list(drop_list)), opt,
                  elapsed());
    }
    if (pot_cmd->parsed()) return emit(potentials_report(pot_scheme), opt, elapsed());
    if (lim_cmd->parsed()) {
      std::vector<double> eps;
      for (const auto& e : split_list(eps_list)) eps.push_back(std::stod(e));
      return emit(limits_report(lim_scheme, lim_target, eps), opt, elapsed());
    }
    if (cat_cmd->parsed() && cat_export->parsed())
      return emit(catalog_export_report(export_system), opt, elapsed());
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const galilei::fieldsys::UnknownSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const galilei::reps::UnknownLabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
}
