#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "checks.hpp"
#include "measure.hpp"
#include "spectral.hpp"
#include "table.hpp"

namespace pjacobi {

struct RunConfig {
  double a = 0.9;
  int N = 1;
  int n_lo = 0, n_hi = -1;  // inclusive --N-range; active when n_hi >= n_lo >= 1
  int points = 200;         // grid resolution per band
  int max_deg = 10;
  std::string format = "json";  // json | csv
  std::string output;           // path base; empty writes to stdout
  double tol = 1e-9;            // suite tolerance (PJ_TOLERANCE)
  int cf_depth = 400;

  bool has_range() const { return n_hi >= n_lo && n_lo >= 1; }
  void validate() const {
    if (!has_range() && N < 1) throw std::invalid_argument("config: N must be >= 1");
    if (has_range() && n_lo < 1) throw std::invalid_argument("config: N range must start at >= 1");
    if (points < 2) throw std::invalid_argument("config: grid resolution must be >= 2");
    if (max_deg < 0 || max_deg > 24) throw std::invalid_argument("config: max-deg must be in [0, 24]");
    if (format != "json" && format != "csv") throw std::invalid_argument("config: format must be json or csv");
    if (!(tol > 0)) throw std::invalid_argument("config: tolerance must be positive");
    if (cf_depth < 1) throw std::invalid_argument("config: cf depth must be >= 1");
  }
};

struct CommandOutput {
  nlohmann::ordered_json meta;
  std::vector<Table> tables;
};

namespace detail {

inline nlohmann::ordered_json meta_for(const RunConfig& c, const std::string& command) {
  nlohmann::ordered_json m;
  m["tool"] = "pj";
  m["version"] = "1.0.0";
  m["command"] = command;
  m["a"] = c.a;
  if (c.has_range()) {
    m["N_lo"] = c.n_lo;
    m["N_hi"] = c.n_hi;
  } else {
    m["N"] = c.N;
  }
  m["points"] = c.points;
  m["max_deg"] = c.max_deg;
  m["tolerance"] = c.tol;
  return m;
}

/// Chebyshev-clustered interior nodes of (lo, hi), ascending; denser near the
/// endpoints so the inverse-square-root edges are resolved, never on them.
inline std::vector<double> clustered_nodes(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] =
        mid - half * std::cos(std::numbers::pi * (2 * i + 1) / (2.0 * n));
  return xs;
}

}  // namespace detail

/// Bands, mass points and double-root flags; rows cover a range of N when
/// configured (the Figure-1 sweep). Band rows are the merged support
/// intervals, so touching bands (double roots) appear as one interval.
inline CommandOutput cmd_bands(const RunConfig& c) {
  c.validate();
  CommandOutput out;
  out.meta = detail::meta_for(c, "bands");
  Table bands{"bands", {"N", "k", "xi_lo", "xi_hi"}, {}};
  Table mass{"masses", {"N", "k", "y", "m", "positive"}, {}};
  Table dbl{"double_roots", {"N", "k", "x"}, {}};
  const int lo = c.has_range() ? c.n_lo : c.N;
  const int hi = c.has_range() ? c.n_hi : c.N;
  for (int N = lo; N <= hi; ++N) {
    const auto spec = make_spec(c.a, N);
    const auto bs = turning_points(spec);
    const auto support = merged_support(bs);
    for (std::size_t k = 0; k < support.size(); ++k)
      bands.rows.push_back({static_cast<std::int64_t>(N), static_cast<std::int64_t>(k + 1),
                            support[k].first, support[k].second});
    for (int k : bs.double_roots)
      dbl.rows.push_back({static_cast<std::int64_t>(N), static_cast<std::int64_t>(k),
                          bs.bands[static_cast<std::size_t>(k - 1)].second});
    if (N >= 2) {
      const auto ms = masses(spec, zero_sets(spec));
      for (std::size_t k = 0; k < ms.size(); ++k)
        mass.rows.push_back({static_cast<std::int64_t>(N), static_cast<std::int64_t>(k + 1),
                             ms[k].y, ms[k].m, static_cast<std::int64_t>(ms[k].m > 0 ? 1 : 0)});
    }
  }
  out.tables = {std::move(bands), std::move(mass), std::move(dbl)};
  return out;
}

/// Weight table on clustered in-band grids plus masses and the total-mass line.
inline CommandOutput cmd_measure(const RunConfig& c) {
  c.validate();
  CommandOutput out;
  out.meta = detail::meta_for(c, "measure");
  const auto spec = make_spec(c.a, c.N);
  const OrthogonalityMeasure mu(spec);
  Table wt{"weight", {"band", "x", "w"}, {}};
  const auto& bands = mu.bands().bands;
  for (std::size_t k = 0; k < bands.size(); ++k)
    for (double x : detail::clustered_nodes(bands[k].first, bands[k].second, c.points))
      wt.rows.push_back({static_cast<std::int64_t>(k + 1), x, mu.weight(x)});
  Table mass{"masses", {"k", "y", "m", "positive"}, {}};
  double point_mass = 0;
  const auto& ms = mu.mass_points();
  for (std::size_t k = 0; k < ms.size(); ++k) {
    mass.rows.push_back({static_cast<std::int64_t>(k + 1), ms[k].y, ms[k].m,
                         static_cast<std::int64_t>(ms[k].m > 0 ? 1 : 0)});
    point_mass += ms[k].m;
  }
  const double total = mu.total_mass();
  Table totals{"totals", {"continuous_mass", "point_mass", "total_mass"}, {}};
  totals.rows.push_back({total - point_mass, point_mass, total});
  out.tables = {std::move(wt), std::move(mass), std::move(totals)};
  return out;
}

/// Gram matrix entries and the off-diagonal summary.
inline CommandOutput cmd_gram(const RunConfig& c) {
  c.validate();
  CommandOutput out;
  out.meta = detail::meta_for(c, "gram");
  const auto G = OrthogonalityMeasure(make_spec(c.a, c.N)).gram(c.max_deg);
  Table gram{"gram", {"m", "n", "value"}, {}};
  double max_off = 0, min_diag = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < G.size(); ++m)
    for (std::size_t n = 0; n < G.size(); ++n) {
      gram.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), G[m][n]});
      if (m == n)
        min_diag = std::min(min_diag, G[m][n]);
      else
        max_off = std::max(max_off, std::abs(G[m][n]));
    }
  Table summary{"summary", {"max_abs_offdiag", "min_diag"}, {}};
  summary.rows.push_back({max_off, min_diag});
  out.tables = {std::move(gram), std::move(summary)};
  return out;
}

/// Spectral-density table (x, d00, d01, d11) on clustered in-band grids.
inline CommandOutput cmd_spectral(const RunConfig& c) {
  c.validate();
  CommandOutput out;
  out.meta = detail::meta_for(c, "spectral");
  const SpectralModel sm(make_spec(c.a, c.N));
  const auto d = sm.densities();
  Table tab{"densities", {"band", "x", "d00", "d01", "d11"}, {}};
  const auto& bands = sm.bands().bands;
  for (std::size_t k = 0; k < bands.size(); ++k)
    for (double x : detail::clustered_nodes(bands[k].first, bands[k].second, c.points))
      tab.rows.push_back({static_cast<std::int64_t>(k + 1), x, d.d00(x), d.d01(x), d.d11(x)});
  out.tables = {std::move(tab)};
  return out;
}

/// Closed-form vs continued-fraction Stieltjes transform on a complex grid.
inline CommandOutput cmd_phi(const RunConfig& c) {
  c.validate();
  CommandOutput out;
  out.meta = detail::meta_for(c, "phi");
  const auto spec = make_spec(c.a, c.N);
  const SpectralModel sm(spec);
  Table tab{"phi", {"re_z", "im_z", "re_closed", "im_closed", "re_cf", "im_cf", "abs_delta"}, {}};
  const double u_max = band_bound(c.a) + 1;
  for (int i = 0; i < c.points; ++i) {
    const double u = -u_max + 2 * u_max * i / (c.points - 1);
    for (double v : {0.25, 0.5, 1.0}) {
      const CX z(u, v);
      const CX closed = sm.phi_closed(z);
      const CX cf = sm.phi_cf(z, c.cf_depth);
      tab.rows.push_back({z.real(), z.imag(), closed.real(), closed.imag(), cf.real(), cf.imag(),
                          std::abs(closed - cf)});
    }
  }
  out.tables = {std::move(tab)};
  return out;
}

struct VerifyOutput {
  CommandOutput output;
  bool all_pass = true;
  std::string first_failure;
};

/// Machine-readable pass/fail report over the full invariant suite.
inline VerifyOutput cmd_verify(const RunConfig& c) {
  c.validate();
  VerifyOutput v;
  v.output.meta = detail::meta_for(c, "verify");
  CheckOptions opts;
  opts.suite_tol = c.tol;
  opts.cf_depth = c.cf_depth;
  const auto results = run_checks(c.a, c.N, opts);
  Table tab{"checks", {"check_name", "status", "max_residual"}, {}};
  for (const auto& r : results) {
    tab.rows.push_back({r.name, std::string(r.pass ? "pass" : "fail"), r.max_residual});
    if (!r.pass) {
      v.all_pass = false;
      if (v.first_failure.empty())
        v.first_failure = r.name + (r.message.empty() ? "" : ": " + r.message);
    }
  }
  v.output.tables = {std::move(tab)};
  return v;
}

/// Single JSON document {"meta": ..., "data": {table: {columns, rows}}}.
inline std::string emit_json(const CommandOutput& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = out.meta;
  auto& data = doc["data"] = nlohmann::ordered_json::object();
  for (const auto& t : out.tables) data[t.name] = to_json(t);
  return doc.dump(2) + "\n";
}

/// Writes the result per the config: JSON as one document (file or stdout),
/// CSV as one file per logical table (<output>.<table>.csv) or stdout blocks.
inline void write_output(const CommandOutput& out, const RunConfig& c, std::ostream& os) {
  if (c.format == "json") {
    const std::string doc = emit_json(out);
    if (c.output.empty()) {
      os << doc;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file: " + c.output);
      f << doc;
    }
    return;
  }
  for (const auto& t : out.tables) {
    const std::string csv = to_csv(t);
    if (c.output.empty()) {
      os << "# table: " << t.name << "\n" << csv << "\n";
    } else {
      const std::string path = c.output + "." + t.name + ".csv";
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file: " + path);
      f << csv;
    }
  }
}

}  // namespace pjacobi
