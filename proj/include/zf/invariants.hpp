#pragma once

#include <string>
#include <vector>

#include "zf/conic.hpp"

namespace zf {

struct SplittingType {
  unsigned a = 0, b = 4;  ///< a <= b, a + b = 4
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Branch-agreement count of the two lifts at the 4 points of ci and cj.
SplittingType splitting_type(const ConicCurve& ci, const ConicCurve& cj, const QuarticModel& q);

struct Arrangement {
  std::string label;
  std::vector<ConicCurve> conics;
};

struct Phi1Vector {
  std::vector<int> bits;
  unsigned count_ones = 0;
  std::vector<MWVector> coords;  ///< lifted section coordinates per conic
};

Phi1Vector phi1(const Arrangement& a, const SurfaceModel& s, const MWBasis& basis);

/// Intersection data shared by all members of a Zariski N-plet candidate.
struct Fingerprint {
  std::size_t conic_count = 0;
  std::vector<std::vector<unsigned>> contact;  ///< per conic, sorted multiplicities
  std::vector<bool> pair_transversal;
  bool no_triple = false;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const Arrangement& a, const QuarticModel& q);

std::vector<Arrangement> sub_arrangements(const Arrangement& a, std::size_t k);

struct ArrangementInvariants {
  std::string label;
  Phi1Vector phi1;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, SplittingType>> splitting;  ///< over conic pairs
  std::vector<SplittingType> splitting_multiset() const;
};

struct InvariantReport {
  bool comparable = true;  ///< all fingerprints agree
  Fingerprint fingerprint;
  std::vector<ArrangementInvariants> rows;
  bool distinguished = false;
  /// For each pair of arrangements, which invariant separates them ("phi1",
  /// "splitting", "phi1+splitting" or "none").
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> witnesses;
};

InvariantReport distinguish(const std::vector<Arrangement>& arrangements, const SurfaceModel& s, const MWBasis& basis,
                            bool parallel = true);

/// A basis section given by a line in source coordinates and the sign of its
/// y-coordinate at the scenario base point.
struct LineSpec {
  std::string name;
  MPoly line{3};
  int sign = 1;
};

/// Sections of `lines` on the model (lines are pulled through q.transform).
std::vector<FFPoint> sections_from_lines(const std::vector<LineSpec>& lines, const SurfaceModel& s);

/// Conic given in source coordinates, pulled to model coordinates.
ConicCurve pull_conic(const ConicCurve& c, const RatMatrix& m);

struct InvarianceReport {
  RatVector z1, z2;
  ClubReport club2;
  RatMatrix gram1, gram2;
  MWVector v1, v2;
  bool agree = false;
};

/// Compares the lifted coordinates of c at two base points. `c` and `lines`
/// are in source coordinates of `source`; line signs refer to z1.
InvarianceReport base_point_invariance(const ConicCurve& c, const MPoly& source, const RatVector& z1,
                                       const RatVector& z2, const std::vector<LineSpec>& lines);
/// Same comparison for several conics sharing the two models.
std::vector<InvarianceReport> base_point_invariance(const std::vector<ConicCurve>& cs, const MPoly& source,
                                                    const RatVector& z1, const RatVector& z2,
                                                    const std::vector<LineSpec>& lines);

/// Rational points [t:x:1] satisfying the club condition, scanning t = 0, 1, -1, 2, ...
std::vector<RatVector> scan_club_points(const MPoly& source, long radius, std::size_t limit);

}  // namespace zf
