#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/linalg.hpp"
#include "zf/quartic.hpp"
#include "zf/ratfunc.hpp"

namespace zf {

/// A Q(t)-point of y^2 = x^3 + b2 x^2 + b3 x + b4, or the origin O.
struct FFPoint {
  bool infinite = true;
  RatFunc x, y;

  static FFPoint origin() { return {}; }
  static FFPoint affine(RatFunc x, RatFunc y) { return {false, std::move(x), std::move(y)}; }
  bool is_origin() const { return infinite; }
  friend bool operator==(const FFPoint& a, const FFPoint& b) {
    return a.infinite == b.infinite && (a.infinite || (a.x == b.x && a.y == b.y));
  }
  std::string str() const;
};

/// A place of P^1: a rational t0 or infinity.
struct Place {
  std::optional<Rational> t0;
  bool at_infinity() const { return !t0; }
  std::string str() const { return t0 ? t0->str() : "inf"; }
  friend bool operator==(const Place&, const Place&) = default;
};

enum class Kodaira { I, III };

struct SingularFiber {
  Place place;
  Kodaira type = Kodaira::I;
  unsigned n = 1;           ///< ord of the discriminant (the subscript of I_n)
  unsigned components = 1;  ///< m_v
  Rational x0;              ///< x of the fiber's singular point in the local chart

  std::string type_name() const { return type == Kodaira::III ? "III" : "I" + std::to_string(n); }
};

/// Contr_v(i, j) for a fiber with component indices i, j.
Rational contribution(const SingularFiber& f, unsigned i, unsigned j);

class SurfaceModel {
 public:
  explicit SurfaceModel(QuarticModel q);

  const QuarticModel& quartic() const { return q_; }
  const UniPoly& discriminant() const { return disc_; }
  /// Reducible fibers (m_v >= 2) in order: finite places ascending, then infinity.
  const std::vector<SingularFiber>& fibers() const { return fibers_; }
  /// Number of I_1 fibers, counted over the algebraic closure.
  unsigned irreducible_count() const { return i1_count_; }
  unsigned euler_sum() const;

  bool on_curve(const FFPoint& p) const;
  FFPoint neg(const FFPoint& p) const;
  FFPoint add(const FFPoint& p, const FFPoint& q) const;
  FFPoint mul(long m, const FFPoint& p) const;
  FFPoint sub(const FFPoint& p, const FFPoint& q) const { return add(p, neg(q)); }

  /// Index of the fiber component met by p.
  unsigned component_of(const FFPoint& p, const SingularFiber& f) const;
  Rational dot_origin(const FFPoint& p) const;
  Rational height(const FFPoint& p) const;
  Rational pairing(const FFPoint& p, const FFPoint& q) const;

  /// Copy with the opposite I_n branch orientation (for consistency checks).
  SurfaceModel flipped() const;

 private:
  FFPoint add_unchecked(const FFPoint& p, const FFPoint& q) const;
  std::pair<RatFunc, RatFunc> local_point(const FFPoint& p, const Place& v) const;
  std::vector<RatFunc> local_coeffs(const Place& v) const;

  QuarticModel q_;
  RatFunc b2_, b3_, b4_;
  UniPoly disc_;
  std::vector<SingularFiber> fibers_;
  unsigned i1_count_ = 0;
  bool flipped_ = false;
};

/// Discriminant of x^3 + a x^2 + b x + c.
UniPoly cubic_discriminant(const UniPoly& a, const UniPoly& b, const UniPoly& c);

/// Sections cut by a line L avoiding z_o on which F is a square: (x, +sqrt), (x, -sqrt).
std::pair<FFPoint, FFPoint> line_section(const MPoly& line, const SurfaceModel& s);

struct MWBasis {
  std::vector<std::string> names;
  std::vector<FFPoint> sections;
  RatMatrix gram;
};

MWBasis gram_matrix(const std::vector<FFPoint>& sections, const SurfaceModel& s,
                    std::vector<std::string> names = {});

using MWVector = std::vector<long>;

/// Integer coordinates of p in the basis, checked by reconstruction.
MWVector mw_coordinates(const FFPoint& p, const MWBasis& basis, const SurfaceModel& s);
FFPoint combine(const MWVector& v, const MWBasis& basis, const SurfaceModel& s);
bool two_divisible(const MWVector& v);

}  // namespace zf
