#pragma once

#include <string>
#include <vector>

#include "zf/linalg.hpp"
#include "zf/mpoly.hpp"
#include "zf/unipoly.hpp"

namespace zf {

enum class SingularityKind { node, tacnode, nonrational };

std::string to_string(SingularityKind k);

struct SingularPoint {
  RatVector point;  ///< projective, last nonzero coordinate 1; empty when non-rational
  SingularityKind kind;
};

/// Quartic in the form X^3 Z + b2 X^2 + b3 X + b4 with z_o = [0:1:0] and
/// tangent Z = 0 there. `transform` maps model coordinates to the source
/// coordinates: F(v) = source(transform * v) exactly.
struct QuarticModel {
  MPoly F{3};
  UniPoly b2, b3, b4;
  RatMatrix transform = RatMatrix::identity(3);
  MPoly source{3};
  RatVector base_point;  ///< z_o in source coordinates
  std::vector<SingularPoint> singular_points;

  BiPoly affine() const { return dehomogenize(F); }
};

struct ClubReport {
  MPoly tangent_line{3};
  std::vector<unsigned> pattern;  ///< sorted descending
  bool satisfied = false;
};

/// Moves the smooth rational point z of the quartic G to [0:1:0] with tangent Z = 0.
QuarticModel normalize_quartic(const MPoly& G, const RatVector& z, bool classify = true);
ClubReport club_check(const QuarticModel& q);
std::vector<SingularPoint> classify_singularities(const MPoly& F);

/// Scale a projective point so its last nonzero coordinate is 1.
RatVector normalize_point(RatVector p);

}  // namespace zf
