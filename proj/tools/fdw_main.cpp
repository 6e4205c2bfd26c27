// Command-line front end: simulations, predictors, stability verdicts and
// CSV/JSON emission for external plotting.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdw/asymptotics.hpp"
#include "fdw/run_config.hpp"
#include "fdw/complex_analysis.hpp"
#include "fdw/exact.hpp"
#include "fdw/field.hpp"
#include "fdw/green.hpp"
#include "fdw/schemes.hpp"
#include "fdw/simulate.hpp"
#include "fdw/stability.hpp"
#include "fdw/util.hpp"

namespace {

using namespace fdw;
using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

using Options = fdw::RunConfig;

struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buf;

  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
      f << buf.str();
    }
  }
};



BulkScheme make_bulk(const Options& o) {
  const double c = parse_ratio(o.courant);
  if (o.bulk_kind == "leapfrog") return BulkScheme::leap_frog(c);
  if (o.bulk_kind == "dissipative") return BulkScheme::dissipative(c, o.omega);
  if (o.bulk_kind == "manufactured") return BulkScheme::manufactured(c);
  throw std::invalid_argument("unknown bulk kind '" + o.bulk_kind + "'");
}

BoundaryScheme make_boundary(const Options& o) {
  return BoundaryScheme::named_or_file(o.boundary, parse_ratio(o.courant));
}

std::vector<int> parse_snapshots(const std::string& s, int n_max) {
  if (s.empty()) return {n_max};
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void emit_field_csv(Output& out, const std::vector<ErrorField>& fields) {
  out.buf << "n,j,value\n";
  for (const auto& f : fields)
    for (std::size_t j = 0; j < f.values.size(); ++j)
      out.buf << f.time_index << ',' << j << ',' << format_double(f.values[j]) << '\n';
}

int cmd_simulate(const Options& o) {
  const auto bulk = make_bulk(o);
  auto boundary = make_boundary(o);
  SimulateOptions sim;
  sim.snapshots = parse_snapshots(o.snapshots, o.n_max);
  auto fields = simulate_error(bulk, boundary, o.n_max, o.j_max, sim);
  Output out{o.output, {}};
  emit_field_csv(out, fields);
  out.flush();
  return 0;
}

int cmd_pde_demo(const Options& o) {
  const double c = parse_ratio(o.courant);
  auto boundary = make_boundary(o);
  CornerScheme corner = o.corner == "lax-friedrichs" ? CornerScheme::lax_friedrichs(c)
                                                     : CornerScheme::load(o.corner);
  auto datum = [](double x) { return std::exp(-50.0 * (x - 0.1) * (x - 0.1)); };
  auto sol = simulate_pde(boundary, corner, datum, o.dx, c, o.t_final);
  Output out{o.output, {}};
  if (o.format == "json") {
    json j{{"dx", sol.dx},
           {"dt", sol.dt},
           {"steps", sol.steps},
           {"t_final", sol.t_final},
           {"error_l2_scaled", lp_norm(sol.e, 2.0, true)},
           {"error_sup", lp_norm(sol.e, std::numeric_limits<double>::infinity())}};
    out.buf << j.dump(2) << '\n';
  } else {
    out.buf << "n,j,value\n";
    for (std::size_t j = 0; j < sol.e.values.size(); ++j)
      out.buf << sol.steps << ',' << j << ',' << format_double(sol.e.values[j]) << '\n';
  }
  out.flush();
  return 0;
}

Prediction run_prediction(const Options& o, const BoundaryScheme& boundary,
                          const BulkScheme& bulk, int n, int j) {
  const PredictionMode mode =
      o.mode == "unstable" ? PredictionMode::Unstable : PredictionMode::Stable;
  if (o.zone == "nearwall") return predict_near_wall(boundary, bulk, n, j, mode);
  if (o.zone == "transition") return predict_transition(boundary, bulk, n, j, mode);
  if (o.zone == "front") return predict_front(boundary, bulk, n, j, mode);
  if (o.zone == "gaussian") return predict_gaussian(boundary, bulk, n, j);
  throw std::invalid_argument("unknown zone '" + o.zone + "'");
}

json prediction_json(const Prediction& p) {
  const auto& d = p.diagnostics;
  json j{{"zone", zone_name(p.zone)},
         {"n", p.n},
         {"j", p.j},
         {"value", p.value},
         {"scale_exponent", p.scale_exponent},
         {"nu", d.nu},
         {"zone_diag",
          {{"nu", d.nu},
           {"zone", zone_name(p.zone)},
           {"theta_sp", d.theta_sp},
           {"xi_sp", d.xi_sp},
           {"sigma_re", d.sigma.real()},
           {"sigma_im", d.sigma.imag()}}},
         {"offset", d.offset}};
  j["G0_plus"] = {d.g0_plus.real(), d.g0_plus.imag()};
  j["G0_minus"] = {d.g0_minus.real(), d.g0_minus.imag()};
  j["G1_plus"] = {d.g1_plus.real(), d.g1_plus.imag()};
  j["G1_minus"] = {d.g1_minus.real(), d.g1_minus.imag()};
  j["GR"] = {d.gR.real(), d.gR.imag()};
  j["GL"] = {d.gL.real(), d.gL.imag()};
  if (d.residue) j["R"] = *d.residue;
  if (d.envelope) j["envelope"] = {d.envelope->first, d.envelope->second};
  return j;
}

int cmd_predict(const Options& o) {
  const auto bulk = make_bulk(o);
  const auto boundary = make_boundary(o);
  const int n = o.n > 0 ? o.n : o.n_max;
  const int j = o.j >= 0 ? o.j : 0;
  const auto p = run_prediction(o, boundary, bulk, n, j);
  Output out{o.output, {}};
  out.buf << prediction_json(p).dump(2) << '\n';
  out.flush();
  return 0;
}

// Probe schedule: rational nu = p/q gives integral probes (n, j) = (q m, p m).
std::vector<std::pair<int, int>> probe_schedule(const Options& o, double courant) {
  std::vector<std::pair<int, int>> probes;
  if (o.zone == "nearwall") {
    const int j = o.j >= 0 ? o.j : 1;
    for (int n = std::max(16, o.n_max / 16); n <= o.n_max; n *= 2)
      probes.emplace_back(n, j);
    return probes;
  }
  long long p = 1, q = 4;
  if (!o.nu.empty() && !parse_fraction(o.nu, p, q))
    throw std::invalid_argument("probe ratio must be a fraction p/q");
  if (o.zone == "front" || o.zone == "gaussian") {
    // follow the front: j = round(|C| n) with matching parity
    for (int n = std::max(16, o.n_max / 16); n <= o.n_max; n *= 2) {
      const int j = static_cast<int>(std::llround(std::abs(courant) * n));
      probes.emplace_back(n, j);
    }
    return probes;
  }
  // transition: n on the q-progression around the requested decades
  for (int n = std::max<int>(16, o.n_max / 16); n <= o.n_max; n *= 2) {
    const int m = std::max<long long>(1, n / q);
    probes.emplace_back(static_cast<int>(m * q), static_cast<int>(m * p));
  }
  return probes;
}

int cmd_compare(const Options& o) {
  const auto bulk = make_bulk(o);
  const auto boundary = make_boundary(o);
  const double c = parse_ratio(o.courant);
  auto probes = probe_schedule(o, c);

  int n_top = 0;
  for (auto& pr : probes) n_top = std::max(n_top, pr.first);

  std::vector<double> simulated(probes.size(), 0.0);
  simulate_error_rows(bulk, boundary, n_top, default_window(boundary, n_top),
                      [&](int n, std::span<const double> row) {
                        for (std::size_t i = 0; i < probes.size(); ++i)
                          if (probes[i].first == n &&
                              probes[i].second < static_cast<int>(row.size()))
                            simulated[i] = row[static_cast<std::size_t>(probes[i].second)];
                      });

  // Observed remainder orders: one full order past the leading scale in the
  // near-wall and transition zones, a third of an order at the front.
  const double rate = o.zone == "nearwall"     ? 2.5
                      : o.zone == "transition" ? 1.5
                      : o.zone == "front"      ? 2.0 / 3.0
                                               : 0.5;
  Output out{o.output, {}};
  out.buf << "n,j,zone,simulated,predicted,abs_err,scaled_err\n";
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto [n, j] = probes[i];
    const auto p = run_prediction(o, boundary, bulk, n, j);
    const double abs_err = std::abs(simulated[i] - p.value);
    const double scale = std::pow(double(n), o.mode == "unstable" && o.zone == "front"
                                                 ? 1.0 / 3.0
                                                 : rate);
    out.buf << n << ',' << j << ',' << zone_name(p.zone) << ','
            << format_double(simulated[i]) << ',' << format_double(p.value) << ','
            << format_double(abs_err) << ',' << format_double(abs_err * scale) << '\n';
  }
  out.flush();
  return 0;
}

int cmd_stability(const Options& o) {
  Options oo = o;
  if (oo.bulk_kind.empty()) oo.bulk_kind = "leapfrog";
  const auto bulk = make_bulk(oo);
  const auto boundary = make_boundary(o);
  const auto verdict = classify(boundary, bulk, o.delta, o.grid);
  Output out{o.output, {}};
  out.buf << verdict.to_json() << '\n';
  out.flush();
  return 0;
}

int cmd_l2(const Options& o) {
  const auto bulk = make_bulk(o);
  const auto boundary = make_boundary(o);
  json j;
  j["quadrature"] = l2_asymptote(boundary, bulk);
  if (boundary.b.empty() && boundary.bt.empty())
    j["closed_form"] = dirichlet_l2_closed_form(bulk.courant);
  if (o.n > 0) {
    double l2 = 0;
    simulate_error_rows(bulk, boundary, o.n, default_window(boundary, o.n),
                        [&](int n, std::span<const double> row) {
                          if (n == o.n) {
                            double s = 0;
                            for (double v : row) s += v * v;
                            l2 = std::sqrt(s);
                          }
                        });
    j["simulated"] = l2;
    j["n"] = o.n;
  }
  Output out{o.output, {}};
  out.buf << j.dump(2) << '\n';
  out.flush();
  return 0;
}

int cmd_moments(const Options& o) {
  const auto bulk = make_bulk(o);
  const auto boundary = make_boundary(o);
  const double c = parse_ratio(o.courant);
  const int n = o.n > 0 ? o.n : o.n_max;
  auto fields = simulate_error(bulk, boundary, n, -1, {});
  json j;
  for (int order = 0; order <= 1; ++order) {
    const double measured = moments(fields[0], order, false);
    j["order" + std::to_string(order)] = {
        {"measured", measured},
        {"asymptote", moment_asymptote(boundary, c, order, false, n)}};
  }
  j["order0_alternating"] = {
      {"measured", moments(fields[0], 0, true)},
      {"asymptote", moment_asymptote(boundary, c, 0, true, n)}};
  j["n"] = n;
  Output out{o.output, {}};
  out.buf << j.dump(2) << '\n';
  out.flush();
  return 0;
}

int cmd_green(const Options& o) {
  const double c = parse_ratio(o.courant);
  const GreenKind which = o.which == "first" ? GreenKind::First : GreenKind::Second;
  auto fields = green_simulate(c, which, o.n_max, parse_snapshots(o.snapshots, o.n_max));
  Output out{o.output, {}};
  out.buf << "n,j,value\n";
  for (const auto& f : fields)
    for (int j = f.j_min; j <= f.j_max(); ++j)
      out.buf << f.time_index << ',' << j << ',' << format_double(f.at(j)) << '\n';
  out.flush();
  return 0;
}

int cmd_trace(const Options& o) {
  const double c = parse_ratio(o.courant);
  const auto td = trace_divergence(c, static_cast<int>(o.N));
  Output out{o.output, {}};
  if (o.format == "json") {
    json j{{"N", o.N},
           {"partial_sum", td.partial_sum},
           {"fitted_log_coeff", td.fitted_log_coeff},
           {"printed_constant", trace_log_coefficient_formula(c)},
           {"transition_zone_constant", trace_log_coefficient_observed(c)}};
    out.buf << j.dump(2) << '\n';
  } else {
    out.buf << "N,partial_sum\n"
            << o.N << ',' << format_double(td.partial_sum) << '\n';
    out.buf << "# fitted_log_coeff," << format_double(td.fitted_log_coeff) << '\n';
  }
  out.flush();
  return 0;
}

int cmd_lp_scan(const Options& o) {
  Output out{o.output, {}};
  out.buf << "p,exponent,dominant_zone\n";
  std::stringstream ss(o.p_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const double p = (tok == "inf" || tok == "infinity")
                         ? std::numeric_limits<double>::infinity()
                         : parse_ratio(tok);
    const auto e = lp_exponent(p);
    out.buf << tok << ',' << format_double(e.exponent) << ','
            << (e.tie ? "tie" : zone_name(e.dominant)) << '\n';
  }
  out.flush();
  return 0;
}

int cmd_oracle_check(const Options& o) {
  using exact::Rational;
  long long pp = -1, qq = 2;
  if (!parse_fraction(o.courant, pp, qq))
    throw std::invalid_argument("oracle-check needs an exact rational courant p/q");
  const Rational c(pp, qq);
  const int n_max = std::min(o.n_max, 20);

  const std::vector<Rational> b = {1 + c, -c};
  auto rows = exact::simulate_error_exact(BulkKind::LeapFrog, c, b, {}, n_max);
  long mismatches = 0;
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      if (exact::upwind_explicit(c, n, j) != rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)])
        ++mismatches;
  json j{{"courant", o.courant}, {"n_max", n_max}, {"mismatches", mismatches}};
  Output out{o.output, {}};
  out.buf << j.dump(2) << '\n';
  out.flush();
  return mismatches == 0 ? 0 : kExitNumerical;
}

int dispatch(const Options& o) {
  if (o.command == "simulate") return cmd_simulate(o);
  if (o.command == "pde-demo") return cmd_pde_demo(o);
  if (o.command == "predict") return cmd_predict(o);
  if (o.command == "compare") return cmd_compare(o);
  if (o.command == "stability") return cmd_stability(o);
  if (o.command == "l2") return cmd_l2(o);
  if (o.command == "moments") return cmd_moments(o);
  if (o.command == "green") return cmd_green(o);
  if (o.command == "trace") return cmd_trace(o);
  if (o.command == "lp-scan") return cmd_lp_scan(o);
  if (o.command == "oracle-check") return cmd_oracle_check(o);
  throw std::invalid_argument("unknown command '" + o.command + "'");
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--bulk", o.bulk_kind, "bulk scheme: leapfrog|dissipative|manufactured");
  app->add_option("--courant", o.courant, "Courant number, decimal or p/q");
  app->add_option("--omega", o.omega, "relaxation parameter of the dissipative bulk");
  app->add_option("--boundary", o.boundary,
                  "boundary scheme: builtin name or JSON file path");
  app->add_option("-o,--output", o.output, "output path (default stdout)");
  app->add_option("--format", o.format, "csv|json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"long-time structure of multistep finite-difference schemes"};
  app.require_subcommand(1);
  Options o;

  auto* sim = app.add_subcommand("simulate", "run the corner-source error recurrence");
  add_common(sim, o);
  sim->add_option("--nmax", o.n_max, "final time index");
  sim->add_option("--jmax", o.j_max, "window width (default: support-sized)");
  sim->add_option("--snapshots", o.snapshots, "comma-separated rows to emit");

  auto* pde = app.add_subcommand("pde-demo", "transport equation demo run");
  add_common(pde, o);
  pde->add_option("--dx", o.dx, "mesh size");
  pde->add_option("--tfinal", o.t_final, "final time");
  pde->add_option("--corner", o.corner, "corner scheme: lax-friedrichs or JSON file");

  auto* pre = app.add_subcommand("predict", "evaluate one asymptotic predictor");
  add_common(pre, o);
  pre->add_option("--zone", o.zone, "nearwall|transition|front|gaussian");
  pre->add_option("--mode", o.mode, "stable|unstable");
  pre->add_option("--n", o.n, "time index");
  pre->add_option("--j", o.j, "space index");

  auto* cmp = app.add_subcommand("compare", "simulated vs predicted sweep");
  add_common(cmp, o);
  cmp->add_option("--zone", o.zone, "nearwall|transition|front");
  cmp->add_option("--mode", o.mode, "stable|unstable");
  cmp->add_option("--nmax", o.n_max, "largest probe time");
  cmp->add_option("--nu", o.nu, "transition probe ratio p/q");
  cmp->add_option("--j", o.j, "near-wall probe cell");

  auto* stab = app.add_subcommand("stability", "classify a boundary scheme");
  add_common(stab, o);
  stab->add_option("--delta", o.delta, "winding circle radius offset");
  stab->add_option("--grid", o.grid, "scan grid size");

  auto* l2 = app.add_subcommand("l2", "asymptotic spatial L2 norm");
  add_common(l2, o);
  l2->add_option("--n", o.n, "also simulate to this time");

  auto* mom = app.add_subcommand("moments", "spatial moments vs their asymptotes");
  add_common(mom, o);
  mom->add_option("--n", o.n, "time index");

  auto* grn = app.add_subcommand("green", "whole-line Green functions");
  add_common(grn, o);
  grn->add_option("--which", o.which, "first|second");
  grn->add_option("--nmax", o.n_max, "final time index");
  grn->add_option("--snapshots", o.snapshots, "comma-separated rows");

  auto* trc = app.add_subcommand("trace", "squared-trace partial sums");
  add_common(trc, o);
  trc->add_option("--N", o.N, "partial-sum horizon");

  auto* lps = app.add_subcommand("lp-scan", "Lp growth exponents");
  add_common(lps, o);
  lps->add_option("--p-list", o.p_list, "comma list, e.g. 1,2,4,inf");

  auto* orc = app.add_subcommand("oracle-check", "exact formula vs exact recurrence");
  add_common(orc, o);
  orc->add_option("--nmax", o.n_max, "largest time index (<= 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitValidation;
  }

  o.command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(o);
  } catch (const numerical_error& e) {
    std::cerr << "numerical diagnostic failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
