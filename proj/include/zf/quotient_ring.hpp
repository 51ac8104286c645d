#pragma once

#include <optional>
#include <vector>

#include "zf/bipoly.hpp"
#include "zf/unipoly.hpp"

namespace zf {

/// The algebra Q[t]/(m) for a squarefree m of positive degree; a product of
/// number fields. Elements are UniPoly values of degree < deg m.
class QuotientRing {
 public:
  explicit QuotientRing(const UniPoly& modulus);

  const UniPoly& modulus() const { return m_; }
  std::size_t dimension() const { return m_.deg(); }

  UniPoly reduce(const UniPoly& a) const;
  UniPoly mul(const UniPoly& a, const UniPoly& b) const;
  /// Inverse when a is a unit; nullopt when a shares a factor with m.
  std::optional<UniPoly> inverse(const UniPoly& a) const;
  /// Sum of the values of a at the roots of m.
  Rational trace(const UniPoly& a) const;

 private:
  UniPoly m_;
  std::vector<Rational> power_sums_;
};

/// One factor m_i of the modulus together with the gcd computed over Q[t]/(m_i).
struct GcdBranch {
  UniPoly modulus;
  BiPoly gcd;  ///< monic in x with coefficients reduced mod `modulus`; zero if all inputs vanish
};

/// gcd in (Q[t]/(m))[x] of the given polynomials, splitting m whenever a
/// leading coefficient is a zero divisor. The branch moduli multiply to monic(m).
std::vector<GcdBranch> split_gcd(const UniPoly& m, const std::vector<BiPoly>& polys);

BiPoly reduce_coeffs(const BiPoly& p, const UniPoly& m);

}  // namespace zf
