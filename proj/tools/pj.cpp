// pj: band structures, orthogonality measures, Gram matrices, spectral
// densities and the verification suite for orthogonal polynomials with
// period-N recurrence coefficients 2a cos(2pi j/N).
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical
// non-convergence.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pjacobi/pjacobi.hpp"

namespace {

// --N-range accepts "lo..hi".
void add_common(CLI::App* cmd, pjacobi::RunConfig& cfg, std::string& range) {
  cmd->add_option("--a", cfg.a, "coupling parameter a")->required();
  cmd->add_option("--N", cfg.N, "period N (>= 1)");
  cmd->add_option("--N-range", range, "period range lo..hi (bands only)");
  cmd->add_option("--points", cfg.points, "grid resolution per band");
  cmd->add_option("--max-deg", cfg.max_deg, "largest polynomial degree (gram)");
  cmd->add_option("--format", cfg.format, "output format: json or csv");
  cmd->add_option("--output", cfg.output, "output path (base name for csv tables)");
  cmd->add_option("--tol", cfg.tol, "suite tolerance override");
  cmd->add_option("--depth", cfg.cf_depth, "continued fraction truncation depth");
}

bool parse_range(const std::string& range, pjacobi::RunConfig& cfg) {
  if (range.empty()) return true;
  const auto pos = range.find("..");
  if (pos == std::string::npos) return false;
  try {
    cfg.n_lo = std::stoi(range.substr(0, pos));
    cfg.n_hi = std::stoi(range.substr(pos + 2));
  } catch (const std::exception&) {
    return false;
  }
  return cfg.n_hi >= cfg.n_lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal polynomials with periodic recurrence coefficients"};
  app.require_subcommand(1);

  pjacobi::RunConfig cfg;
  if (const char* env = std::getenv("PJ_TOLERANCE")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "pj: invalid PJ_TOLERANCE value\n";
      return 2;
    }
  }
  std::string range;

  auto* bands = app.add_subcommand("bands", "turning points, bands and mass points");
  auto* measure = app.add_subcommand("measure", "weight table, masses and total mass");
  auto* gram = app.add_subcommand("gram", "Gram matrix of the polynomial family");
  auto* spectral = app.add_subcommand("spectral", "densities of the doubly infinite Jacobi matrix");
  auto* phi = app.add_subcommand("phi", "closed-form vs continued-fraction Stieltjes transform");
  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  for (auto* cmd : {bands, measure, gram, spectral, phi, verify}) add_common(cmd, cfg, range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (!parse_range(range, cfg)) {
    std::cerr << "pj: --N-range expects lo..hi with hi >= lo\n";
    return 2;
  }

  try {
    using namespace pjacobi;
    if (bands->parsed()) {
      write_output(cmd_bands(cfg), cfg, std::cout);
    } else if (measure->parsed()) {
      write_output(cmd_measure(cfg), cfg, std::cout);
    } else if (gram->parsed()) {
      write_output(cmd_gram(cfg), cfg, std::cout);
    } else if (spectral->parsed()) {
      write_output(cmd_spectral(cfg), cfg, std::cout);
    } else if (phi->parsed()) {
      write_output(cmd_phi(cfg), cfg, std::cout);
    } else if (verify->parsed()) {
      const auto v = cmd_verify(cfg);
      write_output(v.output, cfg, std::cout);
      if (!v.all_pass) {
        std::cerr << "pj verify: FAILED " << v.first_failure << "\n";
        return 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "pj: " << e.what() << "\n";
    return 2;
  } catch (const pjacobi::QuadratureError& e) {
    std::cerr << "pj: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "pj: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
