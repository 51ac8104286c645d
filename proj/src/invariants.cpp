#include "zf/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "zf/errors.hpp"
#include "zf/quotient_ring.hpp"

namespace zf {

namespace {

UniPoly eval_at_x(const BiPoly& p, const UniPoly& x, const QuotientRing& ring) {
  UniPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = ring.reduce(acc * x + *it);
  return acc;
}

}  // namespace

SplittingType splitting_type(const ConicCurve& ci, const ConicCurve& cj, const QuarticModel& q) {
  if (!ci.lift || !cj.lift) throw UnsupportedError("splitting type needs lift quadrics for both conics");
  if (proportional(ci.form, cj.form)) throw InputError("splitting type of a conic with itself");
  for (const auto& m : shear_sequence()) {
    MPoly fi = transform(ci.form, m), fj = transform(cj.form, m);
    if (fi({0, 1, 0}).is_zero() || fj({0, 1, 0}).is_zero()) continue;
    BiPoly pi = dehomogenize(fi), pj = dehomogenize(fj);
    UniPoly res = resultant_x(pi, pj);
    if (res.is_zero()) throw VerificationError("conics share a component");
    if (res.deg() != 4) continue;
    if (!is_squarefree(res)) throw VerificationError("conics " + ci.name + ", " + cj.name + " are not transversal");
    auto branches = split_gcd(res, {pi, pj});
    if (std::any_of(branches.begin(), branches.end(), [](const GcdBranch& b) { return b.gcd.is_zero() || b.gcd.deg() != 1; }))
      continue;
    BiPoly gi = dehomogenize(transform(*ci.lift, m)), gj = dehomogenize(transform(*cj.lift, m));
    BiPoly f = dehomogenize(transform(q.F, m));
    Rational tau;
    for (const auto& br : branches) {
      QuotientRing ring(br.modulus);
      UniPoly x = ring.reduce(-br.gcd.coeff(0));
      UniPoly num = ring.mul(eval_at_x(gi, x, ring), eval_at_x(gj, x, ring));
      auto inv = ring.inverse(eval_at_x(f, x, ring));
      if (!inv) throw VerificationError("conics " + ci.name + ", " + cj.name + " meet on the quartic");
      tau += ring.trace(ring.mul(num, *inv));
    }
    // Each point contributes +-1/sqrt(c_i c_j), so tau^2 c_i c_j = (2a - 4)^2.
    Rational sq = tau * tau * ci.lift_scale * cj.lift_scale;
    auto root = rational_sqrt(sq);
    if (!root || !root->is_integer() || *root > Rational(4))
      throw VerificationError("branch comparison gave " + tau.str() + ", not a sum of four signs");
    long d = root->num().get_si();
    if (d % 2) throw VerificationError("branch comparison gave an odd sign sum");
    unsigned a = static_cast<unsigned>((4 - d) / 2);
    return {a, 4 - a};
  }
  throw VerificationError("no admissible shear found for the splitting-type check");
}

Phi1Vector phi1(const Arrangement& a, const SurfaceModel& s, const MWBasis& basis) {
  Phi1Vector out;
  for (const auto& c : a.conics) {
    MWVector v = mw_coordinates(lift_section(c, s), basis, s);
    if (c.provenance && !c.provenance->coords.empty()) {
      MWVector neg = c.provenance->coords;
      for (auto& x : neg) x = -x;
      if (v != neg) throw VerificationError("lift of " + c.name + " is not -P");
    }
    int bit = two_divisible(v) ? 1 : 0;
    out.bits.push_back(bit);
    out.count_ones += bit;
    out.coords.push_back(std::move(v));
  }
  return out;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << conic_count << " conics; contact";
  for (const auto& c : contact) {
    os << " [";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
  }
  os << "; pairs";
  for (bool b : pair_transversal) os << (b ? " T" : " N");
  os << "; " << (no_triple ? "no triple point" : "triple point");
  return os.str();
}

Fingerprint fingerprint(const Arrangement& a, const QuarticModel& q) {
  Fingerprint fp;
  fp.conic_count = a.conics.size();
  for (const auto& c : a.conics) {
    auto cert = contact_verify(c, q);
    fp.contact.push_back(cert.valid ? cert.multiplicities : std::vector<unsigned>{});
  }
  bool triple = false;
  for (std::size_t i = 0; i < a.conics.size(); ++i)
    for (std::size_t j = i + 1; j < a.conics.size(); ++j) {
      fp.pair_transversal.push_back(transversal(a.conics[i], a.conics[j]));
      triple = triple || have_common_point({q.F, a.conics[i].form, a.conics[j].form});
    }
  fp.no_triple = !triple && (a.conics.size() < 3 || no_triple_point(a.conics));
  return fp;
}

std::vector<Arrangement> sub_arrangements(const Arrangement& a, std::size_t k) {
  const std::size_t n = a.conics.size();
  if (k < 1 || k > n) throw InputError("sub-arrangement size out of range");
  std::vector<Arrangement> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Arrangement s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) {
        s.conics.push_back(a.conics[i]);
        s.label += (s.label.empty() ? "" : "+") + a.conics[i].name;
      }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<SplittingType> ArrangementInvariants::splitting_multiset() const {
  std::vector<SplittingType> v;
  for (const auto& [ij, st] : splitting) v.push_back(st);
  std::sort(v.begin(), v.end());
  return v;
}

InvariantReport distinguish(const std::vector<Arrangement>& arrangements, const SurfaceModel& s, const MWBasis& basis,
                            bool parallel) {
  InvariantReport rep;
  const QuarticModel& q = s.quartic();
  for (std::size_t i = 0; i < arrangements.size(); ++i) {
    Fingerprint fp = fingerprint(arrangements[i], q);
    if (i == 0)
      rep.fingerprint = fp;
    else if (!(fp == rep.fingerprint))
      rep.comparable = false;
  }

  struct Job {
    std::size_t arr, i, j;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < arrangements.size(); ++k) {
    const auto& cs = arrangements[k].conics;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) jobs.push_back({k, i, j});
  }
  std::vector<SplittingType> types(jobs.size());
  std::vector<std::string> errors(jobs.size());
  auto run = [&](std::size_t n) {
    try {
      const auto& cs = arrangements[jobs[n].arr].conics;
      types[n] = splitting_type(cs[jobs[n].i], cs[jobs[n].j], q);
    } catch (const std::exception& e) {
      errors[n] = e.what();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t n = 0; n < jobs.size(); ++n) run(n);
  } else {
    for (std::size_t n = 0; n < jobs.size(); ++n) run(n);
  }
  for (const auto& e : errors)
    if (!e.empty()) throw VerificationError(e);

  for (std::size_t k = 0; k < arrangements.size(); ++k) {
    ArrangementInvariants row;
    row.label = arrangements[k].label;
    row.phi1 = phi1(arrangements[k], s, basis);
    for (std::size_t n = 0; n < jobs.size(); ++n)
      if (jobs[n].arr == k) row.splitting.push_back({{jobs[n].i, jobs[n].j}, types[n]});
    rep.rows.push_back(std::move(row));
  }

  rep.distinguished = rep.comparable && arrangements.size() > 1;
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
      bool by_phi = rep.rows[i].phi1.count_ones != rep.rows[j].phi1.count_ones;
      bool by_split = rep.rows[i].splitting_multiset() != rep.rows[j].splitting_multiset();
      std::string w = by_phi && by_split ? "phi1+splitting" : by_phi ? "phi1" : by_split ? "splitting" : "none";
      if (w == "none") rep.distinguished = false;
      rep.witnesses.push_back({{i, j}, w});
    }
  return rep;
}

std::vector<FFPoint> sections_from_lines(const std::vector<LineSpec>& lines, const SurfaceModel& s) {
  std::vector<FFPoint> out;
  for (const auto& l : lines) {
    auto [plus, minus] = line_section(transform(l.line, s.quartic().transform), s);
    out.push_back(l.sign >= 0 ? plus : minus);
  }
  return out;
}

ConicCurve pull_conic(const ConicCurve& c, const RatMatrix& m) {
  ConicCurve out = c;
  out.form = primitive_form(transform(c.form, m));
  if (c.lift) out.lift = transform(*c.lift, m);
  out.provenance.reset();
  return out;
}

namespace {

// Section at the second model whose double-cover branch agrees with `p1`
// (a section on the first model) along the line.
FFPoint transport_sign(const FFPoint& p1, const RatMatrix& m1_inv, const std::pair<FFPoint, FFPoint>& cand,
                       const RatMatrix& m2) {
  for (long t = 1; t < 64; ++t) {
    const Rational tt(t);
    Rational x2 = cand.first.x(tt), y2 = cand.first.y(tt);
    if (y2.is_zero()) continue;
    RatVector v1 = m1_inv * (m2 * RatVector{tt, x2, 1});
    if (v1[2].is_zero()) continue;
    const Rational t1 = v1[0] / v1[2];
    if (!p1.y.den()(t1).is_zero()) {
      Rational w = v1[2] * v1[2] * p1.y(t1);
      if (w == y2) return cand.first;
      if (w == -y2) return cand.second;
      throw VerificationError("branch transport mismatch");
    }
  }
  throw VerificationError("no test point for branch transport");
}

}  // namespace

std::vector<InvarianceReport> base_point_invariance(const std::vector<ConicCurve>& cs, const MPoly& source,
                                                    const RatVector& z1, const RatVector& z2,
                                                    const std::vector<LineSpec>& lines) {
  InvarianceReport common;
  QuarticModel q1 = normalize_quartic(source, z1), q2 = normalize_quartic(source, z2);
  common.z1 = q1.base_point;
  common.z2 = q2.base_point;
  if (!club_check(q1).satisfied) throw InputError("first base point fails the club condition");
  common.club2 = club_check(q2);
  if (!common.club2.satisfied) throw InputError("second base point fails the club condition");
  for (const auto& c : cs)
    if (c.form(common.z1).is_zero() || c.form(common.z2).is_zero())
      throw InputError("base point lies on conic " + c.name);
  SurfaceModel s1(q1), s2(q2);

  std::vector<FFPoint> b1 = sections_from_lines(lines, s1), b2;
  const RatMatrix m1_inv = *inverse(q1.transform);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto cand = line_section(transform(lines[i].line, q2.transform), s2);
    b2.push_back(transport_sign(b1[i], m1_inv, cand, q2.transform));
  }
  std::vector<std::string> names;
  for (const auto& l : lines) names.push_back(l.name);
  MWBasis basis1 = gram_matrix(b1, s1, names), basis2 = gram_matrix(b2, s2, names);
  common.gram1 = basis1.gram;
  common.gram2 = basis2.gram;

  std::vector<InvarianceReport> out;
  for (const auto& c : cs) {
    InvarianceReport rep = common;
    rep.v1 = mw_coordinates(lift_section(pull_conic(c, q1.transform), s1), basis1, s1);
    rep.v2 = mw_coordinates(lift_section(pull_conic(c, q2.transform), s2), basis2, s2);
    MWVector neg = rep.v2;
    for (auto& x : neg) x = -x;
    rep.agree = rep.v1 == rep.v2 || rep.v1 == neg;
    out.push_back(std::move(rep));
  }
  return out;
}

InvarianceReport base_point_invariance(const ConicCurve& c, const MPoly& source, const RatVector& z1,
                                       const RatVector& z2, const std::vector<LineSpec>& lines) {
  return base_point_invariance(std::vector<ConicCurve>{c}, source, z1, z2, lines).front();
}

std::vector<RatVector> scan_club_points(const MPoly& source, long radius, std::size_t limit) {
  std::vector<RatVector> out;
  BiPoly f = dehomogenize(source);
  for (long k = 0; k <= 2 * radius && out.size() < limit; ++k) {
    const long t = k % 2 ? (k + 1) / 2 : -(k / 2);
    UniPoly fx = eval_t(f, Rational(t));
    if (fx.is_zero() || fx.deg() == 0) continue;
    for (const Rational& x : rational_roots(fx)) {
      RatVector z{Rational(t), x, 1};
      if (gradient_at(source, z) == RatVector{0, 0, 0}) continue;
      try {
        QuarticModel q = normalize_quartic(source, z, false);
        if (club_check(q).satisfied) out.push_back(z);
      } catch (const UnsupportedError&) {
      }
      if (out.size() >= limit) break;
    }
  }
  return out;
}

}  // namespace zf
