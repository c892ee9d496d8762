#include "qreg/config.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qreg {

const Config& Config::defaults() {
  static const Config cfg{};
  return cfg;
}

namespace {

ConfigField real_field(const char* name, double Config::*member) {
  return {name, ConfigField::Kind::real,
          [member](const Config& c) { return c.*member; },
          [member](Config& c, double v) { c.*member = v; }};
}

ConfigField int_field(const char* name, int Config::*member) {
  return {name, ConfigField::Kind::integer,
          [member](const Config& c) { return static_cast<double>(c.*member); },
          [member](Config& c, double v) { c.*member = static_cast<int>(v); }};
}

} // namespace

const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = {
      real_field("eps_eq", &Config::eps_eq),
      real_field("eps_strict", &Config::eps_strict),
      real_field("eps_inv", &Config::eps_inv),
      real_field("zero_residual_rel", &Config::zero_residual_rel),
      real_field("root_residual_rel", &Config::root_residual_rel),
      real_field("root_dedup", &Config::root_dedup),
      real_field("sphere_membership_tol", &Config::sphere_membership_tol),
      real_field("degenerate_tol", &Config::degenerate_tol),
      real_field("guard_band_rel", &Config::guard_band_rel),
      real_field("min_modulus_rel", &Config::min_modulus_rel),
      real_field("gradient_tol_rel", &Config::gradient_tol_rel),
      real_field("solve_residual_rel", &Config::solve_residual_rel),
      real_field("coverage_fail_factor", &Config::coverage_fail_factor),
      real_field("fd_step_rel", &Config::fd_step_rel),
      real_field("identity_tol", &Config::identity_tol),
      real_field("sample_radius", &Config::sample_radius),
      {"seed", ConfigField::Kind::seed,
       [](const Config& c) { return static_cast<double>(c.seed); },
       [](Config& c, double v) { c.seed = static_cast<std::uint64_t>(v); }},
      int_field("samples", &Config::samples),
      int_field("probes", &Config::probes),
      real_field("epsilon", &Config::epsilon),
      int_field("reciprocal_order", &Config::reciprocal_order),
      real_field("search_radius", &Config::search_radius),
  };
  return fields;
}

Config Config::from_env() {
  Config cfg = defaults();
  for (const auto& field : config_fields()) {
    std::string var = "QREG_";
    for (const char* p = field.name; *p; ++p)
      var += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    if (const char* value = std::getenv(var.c_str())) {
      char* end = nullptr;
      const double parsed = std::strtod(value, &end);
      if (end == value || *end != '\0')
        throw std::runtime_error("invalid value for " + var + ": '" + value + "'");
      field.set(cfg, parsed);
    }
  }
  return cfg;
}

} // namespace qreg
