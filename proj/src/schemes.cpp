#include "fdw/schemes.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fdw {

using nlohmann::json;

BulkScheme BulkScheme::leap_frog(double courant, bool override_range) {
  BulkScheme s{BulkKind::LeapFrog, courant, 0.0, override_range};
  s.validate();
  return s;
}

BulkScheme BulkScheme::dissipative(double courant, double omega) {
  BulkScheme s{BulkKind::Dissipative, courant, omega, false};
  s.validate();
  return s;
}

BulkScheme BulkScheme::manufactured(double courant) {
  BulkScheme s{BulkKind::ManufacturedDissipative, courant, 0.0, false};
  s.validate();
  return s;
}

void BulkScheme::validate() const {
  switch (kind) {
    case BulkKind::LeapFrog:
      if (!courant_override && !(courant > -1.0 && courant < 0.0))
        throw std::invalid_argument("leap-frog requires -1 < courant < 0");
      break;
    case BulkKind::Dissipative:
      if (!(omega > 0.0 && omega < 2.0))
        throw std::invalid_argument("dissipative scheme requires omega in (0,2)");
      if (!(courant > 0.0 && courant <= 1.0))
        throw std::invalid_argument("dissipative scheme requires 0 < courant <= 1");
      break;
    case BulkKind::ManufacturedDissipative:
      if (!(courant > 0.0 && courant < 1.0))
        throw std::invalid_argument("manufactured scheme requires 0 < courant < 1");
      break;
  }
}

void BoundaryScheme::validate() const {
  if (b.size() > kMaxSupport || bt.size() > kMaxSupport)
    throw std::invalid_argument("boundary scheme support exceeds " +
                                std::to_string(kMaxSupport));
}

std::size_t BoundaryScheme::support() const { return std::max(b.size(), bt.size()); }

double BoundaryScheme::sum_b() const {
  double s = 0;
  for (double v : b) s += v;
  return s;
}

double BoundaryScheme::sum_bt() const {
  double s = 0;
  for (double v : bt) s += v;
  return s;
}

double BoundaryScheme::sum_k_b() const {
  double s = 0;
  for (std::size_t k = 1; k < b.size(); ++k) s += double(k) * b[k];
  return s;
}

double BoundaryScheme::sum_k_bt() const {
  double s = 0;
  for (std::size_t k = 1; k < bt.size(); ++k) s += double(k) * bt[k];
  return s;
}

double BoundaryScheme::sum_k_b_minus_bt() const { return sum_k_b() - sum_k_bt(); }

double BoundaryScheme::sum_alt_b() const {
  double s = 0;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k % 2 ? -b[k] : b[k]);
  return s;
}

double BoundaryScheme::sum_alt_bt() const {
  double s = 0;
  for (std::size_t k = 0; k < bt.size(); ++k) s += (k % 2 ? -bt[k] : bt[k]);
  return s;
}

BoundaryScheme BoundaryScheme::dirichlet() { return {}; }

BoundaryScheme BoundaryScheme::upwind(double c) { return {{1.0 + c, -c}, {}}; }

BoundaryScheme BoundaryScheme::upwind_diffusive(double c, double delta) {
  return {{1.0 + c, -c}, {0.5 * delta * c, -delta * c, 0.5 * delta * c}};
}

BoundaryScheme BoundaryScheme::upwind_leapfrog(double c) {
  return {{1.0 + 2.0 * c, -(1.0 + 2.0 * c)}, {0.0, 1.0}};
}

BoundaryScheme BoundaryScheme::anti_bounce_back(double c) { return {{c, -c}, {1.0}}; }

BoundaryScheme BoundaryScheme::saddle_resonant(double c, double nu_bar) {
  if (!(std::abs(nu_bar) < 1.0))
    throw std::invalid_argument("saddle_resonant requires |nu_bar| < 1");
  return {{2.0 * std::sqrt((1.0 - c * c) / (1.0 - nu_bar * nu_bar))}, {-1.0}};
}

BoundaryScheme BoundaryScheme::named_or_file(const std::string& spec, double c) {
  if (spec == "dirichlet") return dirichlet();
  if (spec == "upwind") return upwind(c);
  if (spec == "upwind-leapfrog") return upwind_leapfrog(c);
  if (spec == "anti-bounce-back") return anti_bounce_back(c);
  if (spec.rfind("upwind-diffusive:", 0) == 0)
    return upwind_diffusive(c, std::stod(spec.substr(17)));
  if (spec.rfind("saddle-resonant:", 0) == 0)
    return saddle_resonant(c, std::stod(spec.substr(16)));
  return load(spec);
}

std::string BoundaryScheme::to_json() const {
  json j;
  j["b"] = b;
  j["bt"] = bt;
  return j.dump();
}

BoundaryScheme BoundaryScheme::from_json(const std::string& text) {
  json j = json::parse(text);
  BoundaryScheme s;
  if (j.contains("b")) s.b = j["b"].get<std::vector<double>>();
  if (j.contains("bt")) s.bt = j["bt"].get<std::vector<double>>();
  s.validate();
  return s;
}

BoundaryScheme BoundaryScheme::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void CornerScheme::validate() const {
  if (c.size() > kMaxSupport || s.size() + 1 > kMaxSupport)
    throw std::invalid_argument("corner scheme support exceeds " +
                                std::to_string(kMaxSupport));
}

CornerScheme::OrderCheck CornerScheme::order_constraints(double courant, double tol) const {
  double sc = 0, ss = s_minus1, sks = -s_minus1;
  for (double v : c) sc += v;
  for (std::size_t k = 0; k < s.size(); ++k) {
    ss += s[k];
    sks += double(k) * s[k];
  }
  return {std::abs(sc - 1.0) <= tol, std::abs(ss - 1.0) <= tol,
          std::abs(sks + courant) <= tol};
}

CornerScheme CornerScheme::lax_friedrichs(double courant) {
  CornerScheme cs;
  cs.c = {0.5 * (1.0 + courant), 0.5 * (1.0 - courant)};
  cs.s_minus1 = 0.5 * (1.0 + courant);
  cs.s = {0.0, 0.5 * (1.0 - courant)};
  return cs;
}

std::string CornerScheme::to_json() const {
  json j;
  j["c"] = c;
  j["s_minus1"] = s_minus1;
  j["s"] = s;
  return j.dump();
}

CornerScheme CornerScheme::from_json(const std::string& text) {
  json j = json::parse(text);
  CornerScheme cs;
  cs.c = j.at("c").get<std::vector<double>>();
  cs.s_minus1 = j.at("s_minus1").get<double>();
  cs.s = j.at("s").get<std::vector<double>>();
  cs.validate();
  return cs;
}

CornerScheme CornerScheme::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace fdw
