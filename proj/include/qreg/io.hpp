#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qreg/analysis.hpp"
#include "qreg/config.hpp"
#include "qreg/quaternion.hpp"
#include "qreg/series.hpp"
#include "qreg/spheres.hpp"
#include "qreg/zeros.hpp"

namespace qreg::io {

/// Minimal ordered JSON value.  Output is fully deterministic (fixed key
/// order, numbers emitted with 17 significant digits) so that files round
/// trip exactly and identical runs produce byte-identical reports.
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : v_(nullptr) {}
  Json(std::nullptr_t) : v_(nullptr) {}
  Json(bool b) : v_(b) {}
  Json(int n) : v_(static_cast<std::int64_t>(n)) {}
  Json(std::int64_t n) : v_(n) {}
  Json(std::uint64_t n) : v_(static_cast<std::int64_t>(n)) {}
  Json(double d) : v_(d) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(Array a) : v_(std::move(a)) {}
  Json(Object o) : v_(std::move(o)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  Json& add(const std::string& key, Json value); // object append
  Json& push(Json value);                        // array append

  std::string dump(int indent = 2) const;

 private:
  void write(std::string& out, int indent, int depth) const;
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;
};

/// printf %.17g — reparses to the exact same double.
std::string format_double(double d);

// Quaternions serialize as the 4-array [w, x, y, z] everywhere.
Json quaternion_json(const Quaternion& q);
Json sphere_json(const Sphere2& s);

/// Function file document { format_version, coeffs, flavor, order?,
/// trust_radius? }.
std::string series_to_json(const RegularSeries& f);

/// Parses a function file; malformed input is rejected with a
/// line/field diagnostic (std::runtime_error).
RegularSeries series_from_json(const std::string& text, const std::string& origin = "<string>");

RegularSeries load_series(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// Report documents.
std::string quaternion_result_json(const Quaternion& q);
std::string zero_set_json(const ZeroSet& zs);
std::string split_json(const SphericalValue& v, const Json& degenerate);
std::string degenerate_scan_json(const DegenerateScan& scan);
std::string degenerate_scan_csv(const DegenerateScan& scan); // header x,y,abs_c
std::string modulus_scan_csv(const ModulusScan& scan);       // header x,y,abs_f
std::string max_modulus_json(const MaxModulusReport& r);
std::string min_modulus_json(const MinModulusReport& r);
std::string coverage_json(const CoverageReport& r);
std::string witness_json(const WitnessReport& r);
std::string identity_suite_json(const IdentitySuiteReport& r);
std::string config_json(const Config& cfg);

} // namespace qreg::io
