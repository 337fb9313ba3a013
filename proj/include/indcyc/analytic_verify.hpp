#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indcyc/grid.hpp"

namespace indcyc {

struct OptProblem {
  std::string name;  // f_max | rangec | g_c | g_uw | A_cm | final_constant | mindeg_chain
  std::map<std::string, double> parameters;
  grid::Box domain;
  std::string constraint;  // empty when the domain is a plain box
  double resolution = 1e-3;
};

struct Check {
  std::string name;
  double value = 0;
  double limit = 0;
  std::string relation;  // "<=", ">=", "==" (within limit), "count==0", ...
  bool pass = false;
};

struct OptResult {
  OptProblem problem;
  double max_value = 0;  // refined
  std::vector<double> argmax;
  bool on_boundary = false;
  double resolution = 0;
  double grid_max = 0;
  std::vector<double> grid_argmax;
  double certified_upper = 0;
  std::optional<double> ceiling;
  std::vector<Check> checks;
  nlohmann::json extra = nlohmann::json::object();

  bool pass() const;
};

nlohmann::json to_json(const OptResult& r);

struct VerifyOptions {
  double resolution = 0;  // 0 selects the problem default
  int threads = 1;
};

OptResult f_properties(const VerifyOptions& options = {});
OptResult verify_rangec(const VerifyOptions& options = {});
/// g_c(x, c_w) = (c - x)(c_w - x) e^{-(c_w - x)} on [0,c] x [c,4], 2 <= c <= 4.
OptResult maximize_g_c(double c, const VerifyOptions& options = {});
/// Requires 1 <= c < 2 and c >= x_u, x_w >= z_uw >= 0.
OptResult maximize_g_uw(double c, double x_u, double x_w, double z_uw,
                        const VerifyOptions& options = {});
/// max sum z_i^2 y_i e^{-z_i - y_i} subject to 1 <= y_i, z_i <= c and
/// sum z_i^2 = sum y_i z_i; y_m is eliminated. 1 <= c <= 2, 1 <= m <= 3.
OptResult solve_A(double c, unsigned m, const VerifyOptions& options = {});
OptResult final_constant(const VerifyOptions& options = {});
/// 2 <= c <= 20.
OptResult verify_mindeg_chain(double c, const VerifyOptions& options = {});

/// Closed-form value m z^3 e^{-2z} with z = min(c, 3/2).
double A_closed_form(double c, unsigned m);

/// The fixed list of instances run by the analytic suite.
std::vector<OptResult> analytic_suite(int threads = 1);

}  // namespace indcyc
