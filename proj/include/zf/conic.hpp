#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/mpoly.hpp"
#include "zf/surface.hpp"

namespace zf {

struct ConicProvenance {
  RatFunc r;
  FFPoint P;
  MWVector coords;  ///< coordinates of P in the scenario basis, when known
  std::string word;
};

struct ConicCurve {
  std::string name;
  MPoly form{3};  ///< primitive integer homogeneous quadratic in T, X, Z
  std::optional<ConicProvenance> provenance;
  /// Quadric G with F = lift_scale * G^2 on the conic (model coordinates).
  std::optional<MPoly> lift;
  Rational lift_scale = 1;

  BiPoly affine() const { return dehomogenize(form); }
};

RatMatrix conic_matrix(const MPoly& form);
bool is_smooth_conic(const MPoly& form);

/// Integer-primitive form of a homogeneous polynomial, first term positive
/// in the X^2-leading order used throughout (X^2 coefficient positive when present).
MPoly primitive_form(const MPoly& form);

/// g with F - l^2 = (x - x_P) g for l = r (x - x_P) + y_P; monic in x.
RatXPoly bisection_quotient(const FFPoint& P, const RatFunc& r, const SurfaceModel& s);

/// C(r, P): the conic through the residual intersection of y = l(t, x).
ConicCurve bisect_conic(const FFPoint& P, const RatFunc& r, const SurfaceModel& s, std::string name = {});

/// The family g for r = r0 + a * r1, as a polynomial in (a, t, x); monic in x.
MPoly bisect_family(const FFPoint& P, const UniPoly& r0, const UniPoly& r1, const SurfaceModel& s);
inline const std::vector<std::string> kFamilyNames{"a", "t", "x"};

/// Deterministic sequence of invertible integer coordinate changes; identity first.
const std::vector<RatMatrix>& shear_sequence();

struct ContactCertificate {
  UniPoly resultant;
  Rational c;
  UniPoly h;
  unsigned tangency_count = 0;
  bool infinity_handled = false;  ///< a non-identity shear was needed
  std::size_t shear_index = 0;
  std::vector<unsigned> multiplicities;  ///< intersection multiplicity per point
  bool valid = false;
  std::string diagnosis;
};

ContactCertificate contact_verify(const ConicCurve& c, const QuarticModel& q);
bool transversal(const ConicCurve& a, const ConicCurve& b);
/// Whether the plane curves have a common point (projectively).
bool have_common_point(const std::vector<MPoly>& forms);
/// True when the three conics have no common point.
bool triple_free(const ConicCurve& a, const ConicCurve& b, const ConicCurve& c);
bool no_triple_point(const std::vector<ConicCurve>& conics);
bool no_triple_point_serial(const std::vector<ConicCurve>& conics);

/// The section s(C+) of the lift y = sqrt(lift_scale) * G restricted to the conic.
FFPoint lift_section(const ConicCurve& c, const SurfaceModel& s);

}  // namespace zf
