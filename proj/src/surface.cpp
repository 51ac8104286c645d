#include "zf/surface.hpp"

#include <algorithm>

#include "zf/errors.hpp"
#include "zf/series.hpp"

namespace zf {

std::string FFPoint::str() const {
  if (infinite) return "O";
  return "(" + x.str() + ", " + y.str() + ")";
}

Rational contribution(const SingularFiber& f, unsigned i, unsigned j) {
  if (i == 0 || j == 0) return 0;
  if (f.components == 2) return Rational(1, 2);
  if (i > j) std::swap(i, j);
  return Rational(Integer(i * (f.n - j)), Integer(f.n));
}

UniPoly cubic_discriminant(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
  return a * a * b * b - Rational(4) * pow(b, 3) - Rational(4) * pow(a, 3) * c + Rational(18) * a * b * c -
         Rational(27) * c * c;
}

namespace {

UniPoly linear(const Rational& root) { return UniPoly(std::vector<Rational>{-root, 1}); }

// Kodaira data from the reduction x^3 + a x^2 + b x + c of the local cubic.
SingularFiber classify_fiber(const Place& v, unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  UniPoly cubic(std::vector<Rational>{c, b, a, 1});
  UniPoly g = gcd(cubic, cubic.derivative());
  SingularFiber f;
  f.place = v;
  f.n = n;
  if (g.deg() == 1) {
    if (n > 4) throw UnsupportedError("fiber I" + std::to_string(n) + " at t = " + v.str() + " is not supported");
    f.type = Kodaira::I;
    f.components = n;
    f.x0 = -g.coeff(0);
  } else if (g.deg() == 2) {
    if (n != 3)
      throw UnsupportedError("additive fiber with ord(disc) = " + std::to_string(n) + " at t = " + v.str() +
                             " is not supported");
    f.type = Kodaira::III;
    f.components = 2;
    f.x0 = -a / Rational(3);
  } else {
    throw VerificationError("discriminant vanishes but the fiber cubic is smooth");
  }
  return f;
}

}  // namespace

SurfaceModel::SurfaceModel(QuarticModel q) : q_(std::move(q)), b2_(q_.b2), b3_(q_.b3), b4_(q_.b4) {
  if (!q_.b2.is_zero() && q_.b2.deg() > 2) throw InputError("deg b2 > 2");
  if (!q_.b3.is_zero() && q_.b3.deg() > 3) throw InputError("deg b3 > 3");
  if (!q_.b4.is_zero() && q_.b4.deg() > 4) throw InputError("deg b4 > 4");
  disc_ = cubic_discriminant(q_.b2, q_.b3, q_.b4);
  if (disc_.is_zero()) throw InputError("Weierstrass model is singular (zero discriminant)");
  if (disc_.deg() > 0) {
    for (const auto& [fac, mult] : squarefree_decompose(disc_).factors) {
      UniPoly rest = fac;
      for (const Rational& t0 : rational_roots(fac)) {
        rest = exact_div(rest, linear(t0));
        if (mult == 1) {
          ++i1_count_;
          continue;
        }
        fibers_.push_back(classify_fiber(Place{t0}, mult, q_.b2(t0), q_.b3(t0), q_.b4(t0)));
      }
      if (rest.deg() > 0) {
        if (mult > 1) throw UnsupportedError("singular fiber of multiplicity > 1 at an irrational place");
        i1_count_ += rest.deg();
      }
    }
  }
  const unsigned n_inf = 12 - static_cast<unsigned>(disc_.deg());
  if (n_inf == 1) {
    ++i1_count_;
  } else if (n_inf > 1) {
    fibers_.push_back(classify_fiber(Place{}, n_inf, q_.b2.coeff(2), q_.b3.coeff(4), q_.b4.coeff(6)));
  }
  std::stable_sort(fibers_.begin(), fibers_.end(), [](const SingularFiber& a, const SingularFiber& b) {
    if (a.place.at_infinity() != b.place.at_infinity()) return b.place.at_infinity();
    return !a.place.at_infinity() && *a.place.t0 < *b.place.t0;
  });
  if (euler_sum() != 12) throw VerificationError("Euler numbers of singular fibers do not sum to 12");
}

unsigned SurfaceModel::euler_sum() const {
  unsigned s = i1_count_;
  for (const auto& f : fibers_) s += f.type == Kodaira::III ? 3 : f.n;
  return s;
}

bool SurfaceModel::on_curve(const FFPoint& p) const {
  if (p.infinite) return true;
  return p.y * p.y == ((p.x + b2_) * p.x + b3_) * p.x + b4_;
}

FFPoint SurfaceModel::neg(const FFPoint& p) const {
  if (p.infinite) return p;
  return FFPoint::affine(p.x, -p.y);
}

FFPoint SurfaceModel::add_unchecked(const FFPoint& p, const FFPoint& q) const {
  if (p.infinite) return q;
  if (q.infinite) return p;
  RatFunc lambda;
  if (p.x == q.x) {
    if (p.y == -q.y) return FFPoint::origin();
    lambda = (RatFunc(3) * p.x * p.x + RatFunc(2) * b2_ * p.x + b3_) / (RatFunc(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  RatFunc x3 = lambda * lambda - b2_ - p.x - q.x;
  RatFunc y3 = -(p.y + lambda * (x3 - p.x));
  return FFPoint::affine(std::move(x3), std::move(y3));
}

FFPoint SurfaceModel::add(const FFPoint& p, const FFPoint& q) const {
  if (!on_curve(p) || !on_curve(q)) throw InputError("point is not on the curve");
  return add_unchecked(p, q);
}

FFPoint SurfaceModel::mul(long m, const FFPoint& p) const {
  if (!on_curve(p)) throw InputError("point is not on the curve");
  FFPoint base = m < 0 ? neg(p) : p;
  unsigned long k = m < 0 ? -static_cast<unsigned long>(m) : static_cast<unsigned long>(m);
  FFPoint acc = FFPoint::origin();
  while (k) {
    if (k & 1) acc = add_unchecked(acc, base);
    k >>= 1;
    if (k) base = add_unchecked(base, base);
  }
  return acc;
}

std::vector<RatFunc> SurfaceModel::local_coeffs(const Place& v) const {
  if (v.at_infinity()) return {b2_.at_infinity(2), b3_.at_infinity(4), b4_.at_infinity(6)};
  return {b2_.shifted(*v.t0), b3_.shifted(*v.t0), b4_.shifted(*v.t0)};
}

std::pair<RatFunc, RatFunc> SurfaceModel::local_point(const FFPoint& p, const Place& v) const {
  if (v.at_infinity()) return {p.x.at_infinity(2), p.y.at_infinity(3)};
  return {p.x.shifted(*v.t0), p.y.shifted(*v.t0)};
}

unsigned SurfaceModel::component_of(const FFPoint& p, const SingularFiber& f) const {
  if (p.infinite) return 0;
  auto [X, Y] = local_point(p, f.place);
  if (!X.is_zero() && X.valuation_at(0) < 0) return 0;
  if (X(0) != f.x0) return 0;
  if (f.components == 2) return 1;

  const unsigned n = f.n;
  const std::size_t prec = n + 3;
  auto a = local_coeffs(f.place);
  Series A2 = Series::from(a[0], prec), A4 = Series::from(a[1], prec), A6 = Series::from(a[2], prec);
  const Rational rho0 = -A2[0] - Rational(2) * f.x0;
  Series rho = hensel_root(A2, A4, A6, rho0);
  Series p1 = A2 + rho;
  Series xi = Series::constant(Rational(-1, 2), prec) * p1;
  Series Xs = Series::from(X, prec), Ys = Series::from(Y, prec);
  Series U = Xs - rho, V = Xs - xi;
  const Rational u0 = f.x0 - rho0;
  Series su = (U * Series::constant(u0.inverse(), prec)).sqrt1();
  std::optional<std::size_t> k;
  if (auto r = rational_sqrt(u0)) {
    Rational root = flipped_ ? -*r : *r;
    k = (Ys - V * su * Series::constant(root, prec)).valuation();
  } else {
    auto ky = Ys.valuation(), kv = (V * su).valuation();
    k = ky && kv ? std::min(*ky, *kv) : (ky ? ky : kv);
  }
  if (!k || *k == 0 || *k >= n)
    throw VerificationError("branch expansion at t = " + f.place.str() + " did not determine a component");
  return static_cast<unsigned>(*k);
}

Rational SurfaceModel::dot_origin(const FFPoint& p) const {
  if (p.infinite) throw std::invalid_argument("O . O is not used");
  Rational s(static_cast<long>(p.x.den().deg()), 2);
  if (!p.x.is_zero() && p.x.degree() > 2) s += Rational(p.x.degree() - 2, 2);
  return s;
}

Rational SurfaceModel::height(const FFPoint& p) const {
  if (p.infinite) return 0;
  Rational h = Rational(2) + Rational(2) * dot_origin(p);
  for (const auto& f : fibers_) {
    unsigned k = component_of(p, f);
    h -= contribution(f, k, k);
  }
  if (h.is_zero()) throw VerificationError("torsion section " + p.str() + " on a torsion-free surface");
  return h;
}

Rational SurfaceModel::pairing(const FFPoint& p, const FFPoint& q) const {
  if (p.infinite || q.infinite) return 0;
  FFPoint s = add(p, q);
  return (height(s) - height(p) - height(q)) / Rational(2);
}

SurfaceModel SurfaceModel::flipped() const {
  SurfaceModel c = *this;
  c.flipped_ = !c.flipped_;
  return c;
}

std::pair<FFPoint, FFPoint> line_section(const MPoly& line, const SurfaceModel& s) {
  if (line.nvars() != 3 || line.is_zero() || !line.is_homogeneous() || line.degree() != 1)
    throw InputError("expected a line aT + bX + cZ");
  const Rational a = line.coeff({1, 0, 0}), b = line.coeff({0, 1, 0}), c = line.coeff({0, 0, 1});
  if (b.is_zero()) throw InputError("line passes through z_o");
  UniPoly x(std::vector<Rational>{-c / b, -a / b});
  UniPoly restricted = s.quartic().affine()(x);
  if (restricted.is_zero()) throw InputError("line is a component of the quartic");
  auto sq = perfect_square(restricted);
  if (!sq) throw InputError("F restricted to the line is not a square (line is not dp-free)");
  auto root = rational_sqrt(sq->first);
  if (!root) throw UnsupportedError("leading coefficient on the line is not a rational square");
  UniPoly y = *root * sq->second;
  return {FFPoint::affine(x, y), FFPoint::affine(x, -y)};
}

MWBasis gram_matrix(const std::vector<FFPoint>& sections, const SurfaceModel& s, std::vector<std::string> names) {
  MWBasis b;
  b.sections = sections;
  if (names.empty())
    for (std::size_t i = 0; i < sections.size(); ++i) names.push_back("s" + std::to_string(i));
  b.names = std::move(names);
  const std::size_t n = sections.size();
  b.gram = RatMatrix(n, n);
  std::vector<Rational> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = s.height(sections[i]);
  for (std::size_t i = 0; i < n; ++i) {
    b.gram(i, i) = h[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      FFPoint sum = s.add(sections[i], sections[j]);
      b.gram(i, j) = b.gram(j, i) = (s.height(sum) - h[i] - h[j]) / Rational(2);
    }
  }
  return b;
}

FFPoint combine(const MWVector& v, const MWBasis& basis, const SurfaceModel& s) {
  if (v.size() != basis.sections.size()) throw std::invalid_argument("coordinate length mismatch");
  FFPoint acc = FFPoint::origin();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) acc = s.add(acc, s.mul(v[i], basis.sections[i]));
  return acc;
}

MWVector mw_coordinates(const FFPoint& p, const MWBasis& basis, const SurfaceModel& s) {
  const std::size_t n = basis.sections.size();
  RatVector rhs(n);
  if (!p.infinite) {
    const Rational hp = s.height(p);
    for (std::size_t i = 0; i < n; ++i) {
      FFPoint sum = s.add(p, basis.sections[i]);
      rhs[i] = (s.height(sum) - hp - basis.gram(i, i)) / Rational(2);
    }
  }
  auto sol = solve(basis.gram, rhs);
  if (!sol) throw VerificationError("Gram matrix is singular");
  MWVector v;
  for (const auto& a : *sol) {
    if (!a.is_integer()) throw VerificationError("section is not in the lattice spanned by the basis");
    if (!a.num().fits_slong_p()) throw VerificationError("coordinate out of range");
    v.push_back(a.num().get_si());
  }
  if (!(combine(v, basis, s) == p)) throw VerificationError("coordinate reconstruction mismatch");
  return v;
}

bool two_divisible(const MWVector& v) {
  return std::all_of(v.begin(), v.end(), [](long a) { return a % 2 == 0; });
}

}  // namespace zf
