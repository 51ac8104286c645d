#pragma once

#include <random>
#include <string>
#include <vector>

#include "zf/report.hpp"

namespace zf::testing {

/// Determinant by cofactor expansion along the first row (small matrices only).
Rational laplace_det(const std::vector<std::vector<Rational>>& m);
/// Res(f, g) from the Sylvester matrix expanded by cofactors.
Rational laplace_resultant(const UniPoly& f, const UniPoly& g);

/// Discriminant of (x - r1)(x - r2)(x - r3) as the product of squared root differences.
UniPoly discriminant_from_roots(const UniPoly& r1, const UniPoly& r2, const UniPoly& r3);

/// F - scale * G^2 reduced modulo the conic (affine chart); zero for a genuine lift.
BiPoly lift_residue(const ConicCurve& c, const QuarticModel& q);

UniPoly random_unipoly(std::mt19937& gen, std::size_t degree, int range = 5);
BiPoly random_bipoly(std::mt19937& gen, std::size_t xdeg, std::size_t tdeg, int range = 4);
RatMatrix random_invertible(std::mt19937& gen);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  std::string detail;
};

SuiteResult group_law_axioms(std::size_t trials, unsigned seed);
SuiteResult height_bilinearity(std::size_t trials, unsigned seed);
SuiteResult resultant_multiplicativity(std::size_t trials, unsigned seed);
SuiteResult perfect_square_round_trips(std::size_t trials, unsigned seed);
SuiteResult mw_round_trips(std::size_t trials, unsigned seed);
SuiteResult shear_invariance(std::size_t trials, unsigned seed);

/// Case I workspace with the five lattice sections and no conics.
Workspace two_nodal_lattice();

}  // namespace zf::testing
