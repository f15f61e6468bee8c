// Batch verification harness and Wigner-table exporter.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhopf/cg.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/suite.hpp"

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitConfig = 2;

qhopf::Colour parse_colour(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return qhopf::Colour::plus();
  if (s == "-" || s == "-1") return qhopf::Colour::minus();
  throw qhopf::ConfigError("colour must be + or -, got '" + s + "'");
}

int run_cg(int n1, int n2, double q, const std::string& algebra, const std::string& colours,
           const std::string& format, const std::string& out) {
  if (n1 < 0 || n2 < 0) throw qhopf::ConfigError("N1 and N2 must be nonnegative");
  if (!(q > 0.0 && q < 1.0)) throw qhopf::ConfigError("q must lie in (0, 1)");
  const qhopf::QParams p(q);
  qhopf::CGTable table;
  if (algebra == "suq2") {
    table = qhopf::cg_suq2(n1, n2, p);
  } else {
    if (colours.size() != 3) throw qhopf::ConfigError("--colours needs three signs, e.g. ++-");
    table = qhopf::cg_dqa(n1, n2, parse_colour(colours.substr(0, 1)),
                          parse_colour(colours.substr(1, 1)), parse_colour(colours.substr(2, 1)), p);
  }
  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw qhopf::IoError("cannot open '" + out + "' for writing");
  }
  std::ostream& os = out.empty() ? std::cout : file;
  if (format == "csv") {
    qhopf::write_csv(os, table);
  } else {
    os << qhopf::to_json(table) << '\n';
  }
  if (!os) throw qhopf::IoError("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the two-colour Hopf structure, R-matrix and Wigner coefficients of "
               "su_q(2) and A_q^+(1) on finite-dimensional representations."};
  app.require_subcommand(0, 1);

  qhopf::SuiteConfig cfg;
  std::vector<double> qs;
  std::vector<std::string> suites;
  std::string format = "json";
  bool canonical = false;
  app.add_option("--q", qs, "Deformation parameter in (0,1); repeatable (default 0.5 0.8)");
  app.add_option("--n-max", cfg.n_max, "Largest N in every grid")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Base tolerance; most thresholds scale it by dimension")
      ->capture_default_str();
  app.add_option("--suite", suites, "scalar|algebra|hopf|rmatrix|cybe|cg; repeatable (default all)");
  app.add_option("--colours", cfg.colour_filter,
                 "Keep checks whose colour tuple starts with one of these, e.g. ++ or +-+");
  app.add_option("--out", cfg.out_path, "Report path (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--dump-matrices", cfg.dump_matrices, "Include irreps and R-matrices in the JSON");
  app.add_flag("--canonical", canonical, "Omit timings so identical configs give identical bytes");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
  app.add_option("--perturb", cfg.perturb, "Add this to J0(0,0) of every irrep (negative control)");

  auto* cg = app.add_subcommand("cg", "Export one Wigner coefficient table");
  int n1 = 1, n2 = 1;
  double cg_q = 0.5;
  std::string algebra = "dqa", cg_colours = "+++", cg_format = "csv", cg_out;
  cg->add_option("N1", n1)->required();
  cg->add_option("N2", n2)->required();
  cg->add_option("--q", cg_q)->capture_default_str();
  cg->add_option("--algebra", algebra)->check(CLI::IsMember({"dqa", "suq2"}))->capture_default_str();
  cg->add_option("--colours", cg_colours, "zeta eta delta as three signs")->capture_default_str();
  cg->add_option("--format", cg_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cg->add_option("--out", cg_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*cg) return run_cg(n1, n2, cg_q, algebra, cg_colours, cg_format, cg_out);

    if (!qs.empty()) cfg.q_values = qs;
    if (!suites.empty()) cfg.suites = suites;
    cfg.format = format == "csv" ? qhopf::ReportFormat::Csv : qhopf::ReportFormat::Json;
    const auto reports = qhopf::run_suites(cfg);
    qhopf::emit_report(reports, cfg, canonical);
    const auto s = qhopf::summarize(reports);
    std::cerr << s.passed << "/" << s.total << " checks passed, max residual " << s.max_residual
              << '\n';
    if (s.passed != s.total) {
      std::cerr << (s.total - s.passed) << " checks failed\n";
      return kExitFailures;
    }
    return 0;
  } catch (const qhopf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qhopf::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qhopf::EmptyReport& e) {
    std::cerr << "nothing to report: " << e.what() << '\n';
    return kExitConfig;
  }
}
