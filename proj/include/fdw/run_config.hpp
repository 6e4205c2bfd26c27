#pragma once

#include <string>

#include <json.hpp>

namespace fdw {

/// Parsed CLI state; round-trips through canonical JSON.
struct RunConfig {
  std::string command;
  std::string bulk_kind = "leapfrog";
  std::string courant = "-1/2";
  double omega = 1.5;
  std::string boundary = "dirichlet";
  std::string corner = "lax-friedrichs";
  int n_max = 100;
  int j_max = -1;
  int n = 0;
  int j = -1;
  long long N = 100000;
  std::string zone = "front";
  std::string mode = "stable";
  std::string nu;
  std::string snapshots;
  std::string format = "csv";
  std::string output;
  std::string which = "second";
  std::string p_list = "1,2,4,inf";
  double dx = 1e-3;
  double t_final = 0.5;
  double delta = 1e-3;
  int grid = 1 << 14;

  nlohmann::json to_json() const {
    return nlohmann::json{{"command", command},     {"bulk", bulk_kind},
                          {"courant", courant},     {"omega", omega},
                          {"boundary", boundary},   {"corner", corner},
                          {"n_max", n_max},         {"j_max", j_max},
                          {"n", n},                 {"j", j},
                          {"N", N},                 {"zone", zone},
                          {"mode", mode},           {"nu", nu},
                          {"snapshots", snapshots}, {"format", format},
                          {"output", output},       {"which", which},
                          {"p_list", p_list},       {"dx", dx},
                          {"t_final", t_final},     {"delta", delta},
                          {"grid", grid}};
  }

  static RunConfig from_json(const nlohmann::json& j) {
    RunConfig o;
    o.command = j.at("command");
    o.bulk_kind = j.at("bulk");
    o.courant = j.at("courant");
    o.omega = j.at("omega");
    o.boundary = j.at("boundary");
    o.corner = j.at("corner");
    o.n_max = j.at("n_max");
    o.j_max = j.at("j_max");
    o.n = j.at("n");
    o.j = j.at("j");
    o.N = j.at("N");
    o.zone = j.at("zone");
    o.mode = j.at("mode");
    o.nu = j.at("nu");
    o.snapshots = j.at("snapshots");
    o.format = j.at("format");
    o.output = j.at("output");
    o.which = j.at("which");
    o.p_list = j.at("p_list");
    o.dx = j.at("dx");
    o.t_final = j.at("t_final");
    o.delta = j.at("delta");
    o.grid = j.at("grid");
    return o;
  }
};

}  // namespace fdw
