#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zf/errors.hpp"
#include "zf/invariants.hpp"
#include "zf/scenario.hpp"

namespace zf {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kReportSchema = "zfcheck-report/1";
inline constexpr const char* kCertificateSchema = "zfcheck-certificate/1";

/// Lazily built models and conics for one scenario.
class Workspace {
 public:
  explicit Workspace(Scenario s);

  const Scenario& scenario() const { return s_; }
  const QuarticModel& quartic();
  const SurfaceModel& surface();
  const MWBasis& basis();
  std::vector<LineSpec> lines() const;
  MWVector word_vector(const MWWord& w) const;

  /// All declared conics in model coordinates, in declaration order.
  const std::vector<ConicCurve>& conics();
  const ConicCurve& conic(const std::string& name);
  ConicCurve recipe_conic(const std::string& name, const UniPoly& r, const MWWord& w);
  /// Family member at parameter value a.
  ConicCurve family_member(const FamilyDecl& f, const Rational& a);
  std::vector<Arrangement> arrangements();
  /// Conic form moved back to the source coordinates of the scenario.
  MPoly source_form(const ConicCurve& c);

 private:
  Scenario s_;
  std::unique_ptr<QuarticModel> q_;
  std::unique_ptr<SurfaceModel> surface_;
  std::unique_ptr<MWBasis> basis_;
  std::optional<std::vector<ConicCurve>> conics_;
};

struct RunOptions {
  int jobs = 1;
  std::optional<std::string> param_grid;
  /// Certificate document for verify-certificate.
  std::optional<nlohmann::json> certificate;
  long scan_radius = 3000;
};

struct CheckResult {
  std::string check;
  std::string status;  ///< "pass", "fail" or "downgraded"
  int exit_code = 0;
  nlohmann::json data;
  std::string text;
};

/// Runs one subcommand. Module errors propagate as exceptions.
CheckResult run_check(Workspace& w, const std::string& check, const RunOptions& opt);

/// "a=0:3", "a=-2:2:1/2" or "a=0,1,1/2"; the "a=" prefix is optional.
std::vector<Rational> parse_param_grid(const std::string& spec);

/// Report document for a list of results; no timestamp (callers add one).
nlohmann::json report_document(const Scenario& s, const std::vector<CheckResult>& results);

std::string hash_hex(std::uint64_t h);

}  // namespace zf
