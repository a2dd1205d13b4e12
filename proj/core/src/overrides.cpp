#include "riskfield/overrides.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <utility>

namespace riskfield {

namespace {

double parse_double(const std::string& value, const std::string& key) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("override " + key + ": '" + value + "' is not a number");
  }
  if (used != value.size()) {
    throw std::invalid_argument("override " + key + ": '" + value + "' is not a number");
  }
  return out;
}

int parse_int(const std::string& value, const std::string& key) {
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("override " + key + ": '" + value + "' is not an integer");
  }
  if (used != value.size()) {
    throw std::invalid_argument("override " + key + ": '" + value + "' is not an integer");
  }
  return out;
}

struct Entry {
  const char* key;
  std::function<void(Scenario&, const std::string&, const std::string&)> apply;
};

const std::vector<Entry>& table() {
  auto dbl = [](double Scenario::* /*unused*/) {};  // silence unused-warning helper pattern
  (void)dbl;
  static const std::vector<Entry> entries = {
      {"riskmap.alpha_vlm",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.alpha_vlm = parse_double(v, k);
       }},
      {"riskmap.alpha_area",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.alpha_area = parse_double(v, k);
       }},
      {"riskmap.alpha_conf",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.alpha_conf = parse_double(v, k);
       }},
      {"riskmap.alpha_depth",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.alpha_depth = parse_double(v, k);
       }},
      {"riskmap.kappa_a",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.kappa_a = parse_double(v, k);
       }},
      {"riskmap.eta_a",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.eta_a = parse_double(v, k);
       }},
      {"riskmap.d_ref",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.d_ref = parse_double(v, k);
       }},
      {"riskmap.c_max",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.risk_params.c_max = parse_double(v, k);
       }},
      {"planner.a_min",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.a_min = parse_double(v, k);
       }},
      {"planner.a_max",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.a_max = parse_double(v, k);
       }},
      {"planner.ddelta_min",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.ddelta_min = parse_double(v, k);
       }},
      {"planner.ddelta_max",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.ddelta_max = parse_double(v, k);
       }},
      {"planner.n_accel",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.n_accel = parse_int(v, k);
       }},
      {"planner.n_steer",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.n_steer = parse_int(v, k);
       }},
      {"planner.dt",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.dt = parse_double(v, k);
       }},
      {"planner.horizon_t",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.horizon_t = parse_double(v, k);
       }},
      {"planner.wheelbase_l",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.wheelbase_l = parse_double(v, k);
       }},
      {"planner.v_max",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.v_max = parse_double(v, k);
       }},
      {"planner.delta_max",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.delta_max = parse_double(v, k);
       }},
      {"planner.beta_goal",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.beta_goal = parse_double(v, k);
       }},
      {"planner.beta_speed",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.beta_speed = parse_double(v, k);
       }},
      {"planner.beta_risk",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.beta_risk = parse_double(v, k);
       }},
      {"planner.ground_offset",
       [](Scenario& s, const std::string& k, const std::string& v) {
         s.planner_params.ground_offset = parse_double(v, k);
       }},
      {"planner.offimage",
       [](Scenario& s, const std::string&, const std::string& v) {
         s.planner_params.offimage = parse_offimage_policy(v);
       }},
  };
  return entries;
}

}  // namespace

void apply_override(Scenario& scenario, const std::string& key, const std::string& value) {
  for (const Entry& e : table()) {
    if (key == e.key) {
      e.apply(scenario, key, value);
      return;
    }
  }
  throw std::invalid_argument("unknown override parameter '" + key + "'");
}

void apply_overrides(Scenario& scenario, const std::vector<std::string>& assignments) {
  for (const std::string& a : assignments) {
    const std::size_t eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("override '" + a + "' is not of the form key=value");
    }
    apply_override(scenario, a.substr(0, eq), a.substr(eq + 1));
  }
}

std::vector<std::string> override_keys() {
  std::vector<std::string> keys;
  for (const Entry& e : table()) {
    keys.emplace_back(e.key);
  }
  return keys;
}

}  // namespace riskfield
