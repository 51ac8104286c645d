#include "zf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "zf/expr.hpp"

namespace zf {

using nlohmann::json;

namespace {

json js(const Rational& r) { return r.str(); }

json js(const RatVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

json js(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

std::string vec_str(const MWVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string matrix_table(const RatMatrix& m, const std::vector<std::string>& names) {
  std::size_t w = 1;
  for (const auto& n : names) w = std::max(w, n.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, m(i, j).str().size());
  std::ostringstream os;
  os << std::setw(static_cast<int>(w)) << "";
  for (const auto& n : names) os << "  " << std::setw(static_cast<int>(w)) << n;
  os << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << std::setw(static_cast<int>(w)) << names[i];
    for (std::size_t j = 0; j < m.cols(); ++j) os << "  " << std::setw(static_cast<int>(w)) << m(i, j).str();
    os << "\n";
  }
  return os.str();
}

std::string pattern_str(const std::vector<unsigned>& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "}";
}

CheckResult make(const std::string& check, bool pass) {
  CheckResult r;
  r.check = check;
  r.status = pass ? "pass" : "fail";
  r.exit_code = pass ? 0 : 1;
  return r;
}

void finish(CheckResult& r, bool pass, std::ostringstream& text) {
  r.status = pass ? "pass" : "fail";
  r.exit_code = pass ? 0 : 1;
  text << (pass ? "PASS" : "FAIL") << "\n";
  r.text = text.str();
}

json contact_json(const ContactCertificate& c) {
  return {{"valid", c.valid},
          {"tangencies", c.tangency_count},
          {"multiplicities", c.multiplicities},
          {"shear_index", c.shear_index},
          {"infinity_handled", c.infinity_handled},
          {"diagnosis", c.diagnosis}};
}

bool has_lift(const ConicCurve& c) { return c.lift.has_value(); }

CheckResult verify_gram(Workspace& w) {
  CheckResult r = make("verify-gram", false);
  const QuarticModel& q = w.quartic();
  const SurfaceModel& s = w.surface();
  const MWBasis& b = w.basis();
  const ClubReport club = club_check(q);
  const Rational d = det(b.gram);
  std::ostringstream os;

  json sing = json::array();
  for (const auto& p : q.singular_points) sing.push_back({{"point", js(p.point)}, {"kind", to_string(p.kind)}});
  json fibers = json::array();
  for (const auto& f : s.fibers())
    fibers.push_back({{"place", f.place.str()}, {"type", f.type_name()}, {"components", f.components}});
  json sections = json::array();
  for (std::size_t i = 0; i < b.sections.size(); ++i)
    sections.push_back({{"name", b.names[i]},
                        {"x", b.sections[i].x.str()},
                        {"y", b.sections[i].y.str()},
                        {"height", js(b.gram(i, i))}});

  bool pass = club.satisfied && !d.is_zero();
  json expect = json::object();
  if (w.scenario().expect_det) {
    bool ok = d == *w.scenario().expect_det;
    expect["det"] = {{"expected", js(*w.scenario().expect_det)}, {"match", ok}};
    pass = pass && ok;
  }
  if (w.scenario().expect_gram) {
    bool ok = b.gram == *w.scenario().expect_gram;
    expect["gram"] = {{"expected", js(*w.scenario().expect_gram)}, {"match", ok}};
    pass = pass && ok;
  }
  r.data = {{"base_point", js(q.base_point)},
            {"transform", js(q.transform)},
            {"model", q.F.str(kProjNames)},
            {"singular_points", sing},
            {"club", {{"pattern", club.pattern}, {"satisfied", club.satisfied}}},
            {"reducible_fibers", fibers},
            {"irreducible_fibers", s.irreducible_count()},
            {"euler_sum", s.euler_sum()},
            {"sections", sections},
            {"gram", js(b.gram)},
            {"det", js(d)},
            {"expect", expect}};

  os << "model: " << q.F.str(kProjNames) << "\n";
  for (const auto& p : q.singular_points)
    os << "singular point " << (p.point.empty() ? "(non-rational)" : normalize_point(p.point)[0].str() + ":" +
                                                                          normalize_point(p.point)[1].str() + ":" +
                                                                          normalize_point(p.point)[2].str())
       << "  " << to_string(p.kind) << "\n";
  os << "club pattern " << pattern_str(club.pattern) << (club.satisfied ? "  satisfied" : "  violated") << "\n";
  os << "reducible fibers:";
  for (const auto& f : s.fibers()) os << " " << f.type_name() << "@" << f.place.str();
  os << "  (+" << s.irreducible_count() << " I1, euler " << s.euler_sum() << ")\n";
  os << matrix_table(b.gram, b.names);
  os << "det = " << d.str();
  if (w.scenario().expect_det) os << (expect["det"]["match"].get<bool>() ? "  (expected)" : "  (expected " + w.scenario().expect_det->str() + ")");
  os << "\n";
  if (w.scenario().expect_gram) os << "gram " << (expect["gram"]["match"].get<bool>() ? "matches" : "differs from") << " expectation\n";
  finish(r, pass, os);
  return r;
}

CheckResult construct_conics(Workspace& w) {
  CheckResult r = make("construct-conics", false);
  std::ostringstream os;
  bool pass = true;
  json rows = json::array();
  for (const auto& c : w.conics()) {
    json row = {{"name", c.name}, {"equation", w.source_form(c).str(kProjNames)}};
    os << c.name << ": " << w.source_form(c).str(kProjNames) << " = 0\n";
    if (c.provenance) {
      const MWVector lift = mw_coordinates(lift_section(c, w.surface()), w.basis(), w.surface());
      MWVector neg = c.provenance->coords;
      for (auto& x : neg) x = -x;
      const bool consistent = lift == neg;
      pass = pass && consistent;
      row["recipe"] = {{"r", c.provenance->r.str()}, {"word", c.provenance->word}};
      row["word_coords"] = c.provenance->coords;
      row["lift_coords"] = lift;
      row["two_divisible"] = two_divisible(lift);
      row["lift_is_negated_word"] = consistent;
      os << "    r = " << c.provenance->r.str() << ", P = " << c.provenance->word << ", lift " << vec_str(lift)
         << (two_divisible(lift) ? " (2-divisible)" : "") << (consistent ? "" : "  INCONSISTENT") << "\n";
    }
    rows.push_back(row);
  }
  r.data = {{"conics", rows}};
  finish(r, pass, os);
  return r;
}

CheckResult verify_contact(Workspace& w, const RunOptions& opt) {
  CheckResult r = make("verify-contact", false);
  const auto& cs = w.conics();
  const QuarticModel& q = w.quartic();
  std::ostringstream os;
  bool pass = true;
  json certs = json::array();
  for (const auto& c : cs) {
    ContactCertificate cert = contact_verify(c, q);
    pass = pass && cert.valid;
    json row = contact_json(cert);
    row["name"] = c.name;
    certs.push_back(row);
    os << std::left << std::setw(8) << c.name << std::right << (cert.valid ? "contact, " : "NOT contact, ")
       << cert.multiplicities.size() << (cert.valid ? " tangencies " : " points ") << pattern_str(cert.multiplicities);
    if (!cert.valid) os << "  " << cert.diagnosis;
    os << "\n";
  }
  json pairs = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      bool tr = transversal(cs[i], cs[j]);
      bool q_free = !have_common_point({q.F, cs[i].form, cs[j].form});
      pass = pass && tr && q_free;
      pairs.push_back({{"pair", {cs[i].name, cs[j].name}}, {"transversal", tr}, {"no_common_point_with_quartic", q_free}});
      if (!tr || !q_free)
        os << cs[i].name << "," << cs[j].name << ": " << (tr ? "" : "not transversal ") << (q_free ? "" : "meet on the quartic")
           << "\n";
    }
  bool conic_triples = cs.size() < 3 || (opt.jobs > 1 ? no_triple_point(cs) : no_triple_point_serial(cs));
  pass = pass && conic_triples;
  os << "pairs checked: " << pairs.size() << "; " << (conic_triples ? "no" : "a") << " common point among conic triples\n";
  r.data = {{"conics", certs}, {"pairs", pairs}, {"no_conic_triple_point", conic_triples}};
  finish(r, pass, os);
  return r;
}

CheckResult classify_splitting(Workspace& w) {
  CheckResult r = make("classify-splitting", false);
  std::vector<const ConicCurve*> cs;
  for (const auto& c : w.conics())
    if (has_lift(c)) cs.push_back(&c);
  std::ostringstream os;
  json pairs = json::array();
  std::vector<std::string> names;
  for (auto* c : cs) names.push_back(c->name);
  std::vector<std::vector<std::string>> cell(cs.size(), std::vector<std::string>(cs.size(), "-"));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      SplittingType st = splitting_type(*cs[i], *cs[j], w.quartic());
      pairs.push_back({{"pair", {cs[i]->name, cs[j]->name}}, {"type", {st.a, st.b}}});
      cell[i][j] = cell[j][i] = st.str();
    }
  std::size_t width = 5;
  for (const auto& n : names) width = std::max(width, n.size());
  os << std::setw(static_cast<int>(width)) << "";
  for (const auto& n : names) os << "  " << std::setw(static_cast<int>(width)) << n;
  os << "\n";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    os << std::setw(static_cast<int>(width)) << names[i];
    for (std::size_t j = 0; j < cs.size(); ++j) os << "  " << std::setw(static_cast<int>(width)) << cell[i][j];
    os << "\n";
  }
  r.data = {{"pairs", pairs}};
  finish(r, true, os);
  return r;
}

std::string multiset_str(const std::vector<SplittingType>& v) {
  std::string s;
  for (const auto& t : v) s += (s.empty() ? "" : " ") + t.str();
  return s.empty() ? "-" : s;
}

CheckResult nplet_report(Workspace& w, const RunOptions& opt) {
  CheckResult r = make("nplet-report", false);
  auto arrs = w.arrangements();
  if (arrs.size() < 2) throw InputError("nplet-report needs at least two arrangements");
  InvariantReport rep = distinguish(arrs, w.surface(), w.basis(), opt.jobs > 1);
  std::ostringstream os;
  os << "fingerprint: " << rep.fingerprint.str() << (rep.comparable ? "" : "  (NOT shared by all arrangements)") << "\n";

  json rows = json::array();
  std::map<std::string, std::map<unsigned, std::vector<std::string>>> table;
  unsigned max_phi = 0;
  for (const auto& row : rep.rows) {
    json split = json::array();
    for (const auto& [ij, st] : row.splitting) split.push_back({{"pair", {ij.first, ij.second}}, {"type", {st.a, st.b}}});
    json coords = json::array();
    for (const auto& v : row.phi1.coords) coords.push_back(v);
    rows.push_back({{"label", row.label},
                    {"phi1_bits", row.phi1.bits},
                    {"phi1_count", row.phi1.count_ones},
                    {"lift_coords", coords},
                    {"splitting", split}});
    table[multiset_str(row.splitting_multiset())][row.phi1.count_ones].push_back(row.label);
    max_phi = std::max(max_phi, row.phi1.count_ones);
  }
  std::size_t width = 9;
  for (const auto& [k, m] : table) {
    width = std::max(width, k.size());
    for (const auto& [c, labels] : m) {
      std::string cellv;
      for (const auto& l : labels) cellv += (cellv.empty() ? "" : ", ") + l;
      width = std::max(width, cellv.size());
    }
  }
  os << std::left << std::setw(static_cast<int>(width)) << "splitting";
  for (unsigned c = 0; c <= max_phi; ++c) os << "  " << std::setw(static_cast<int>(width)) << ("phi1=" + std::to_string(c));
  os << "\n";
  for (const auto& [k, m] : table) {
    os << std::setw(static_cast<int>(width)) << k;
    for (unsigned c = 0; c <= max_phi; ++c) {
      std::string cellv;
      if (auto it = m.find(c); it != m.end())
        for (const auto& l : it->second) cellv += (cellv.empty() ? "" : ", ") + l;
      os << "  " << std::setw(static_cast<int>(width)) << (cellv.empty() ? "-" : cellv);
    }
    os << "\n";
  }
  os << std::right;
  json witnesses = json::array();
  for (const auto& [ij, wit] : rep.witnesses)
    witnesses.push_back({{"pair", {rep.rows[ij.first].label, rep.rows[ij.second].label}}, {"witness", wit}});
  r.data = {{"fingerprint", rep.fingerprint.str()},
            {"comparable", rep.comparable},
            {"rows", rows},
            {"witnesses", witnesses},
            {"distinguished", rep.distinguished}};
  os << (rep.distinguished ? "all arrangements distinguished" : "some arrangements not distinguished") << "\n";
  finish(r, rep.comparable && rep.distinguished, os);
  return r;
}

CheckResult invariance(Workspace& w, const RunOptions& opt) {
  CheckResult r = make("invariance", false);
  const Scenario& sc = w.scenario();
  const QuarticModel& q = w.quartic();
  std::ostringstream os;
  std::vector<RatVector> candidates;
  if (sc.second_base) {
    candidates.push_back(*sc.second_base);
  } else {
    const RatVector z1 = normalize_point(sc.base);
    for (auto& z : scan_club_points(sc.quartic, opt.scan_radius, z1[2].is_zero() ? 1 : 2))
      if (normalize_point(z) != z1) candidates.push_back(z);
  }
  std::vector<const ConicCurve*> cs;
  for (const auto& c : w.conics())
    if (has_lift(c)) cs.push_back(&c);
  if (candidates.empty() || cs.empty()) {
    r.status = "downgraded";
    r.exit_code = 0;
    r.data = {{"downgraded", true},
              {"reason", candidates.empty() ? "no second rational club point found" : "no conic with a lift"}};
    r.text = "no comparison possible (" + r.data["reason"].get<std::string>() +
             "); base-point invariance rests on the property suites\nDOWNGRADED\n";
    return r;
  }
  const RatMatrix to_source = *inverse(q.transform);
  bool pass = true;
  std::size_t compared = 0;
  json rows = json::array();
  const RatVector z2 = candidates.front();
  os << "second base point " << z2[0].str() << " : " << z2[1].str() << " : " << z2[2].str() << "\n";
  std::vector<ConicCurve> usable;
  for (const ConicCurve* c : cs) {
    ConicCurve src = pull_conic(*c, to_source);
    if (src.form(sc.base).is_zero() || src.form(z2).is_zero()) {
      rows.push_back({{"name", c->name}, {"skipped", "conic passes through a base point"}});
      os << c->name << ": skipped (conic passes through a base point)\n";
    } else {
      usable.push_back(std::move(src));
    }
  }
  bool gram_equal = true;
  if (!usable.empty()) {
    auto reps = base_point_invariance(usable, sc.quartic, sc.base, z2, w.lines());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& rep = reps[i];
      ++compared;
      pass = pass && rep.agree;
      gram_equal = gram_equal && rep.gram1 == rep.gram2;
      rows.push_back({{"name", usable[i].name}, {"v1", rep.v1}, {"v2", rep.v2}, {"agree", rep.agree}});
      os << usable[i].name << ": " << vec_str(rep.v1) << " vs " << vec_str(rep.v2)
         << (rep.agree ? "  agree" : "  DISAGREE") << "\n";
    }
  }
  pass = pass && compared > 0;
  r.data = {{"second_base", js(z2)}, {"gram_equal", gram_equal}, {"conics", rows}, {"downgraded", false}};
  os << "Gram matrix at the second base point " << (gram_equal ? "equals" : "differs from") << " the first\n";
  finish(r, pass, os);
  return r;
}

struct SweepItem {
  std::size_t family = 0;
  Rational a;
  std::optional<ConicCurve> conic;
  ContactCertificate cert;
  MWVector lift;
  std::string error;
};

std::string member_name(const FamilyDecl& f, const Rational& a) { return f.name + "[a=" + a.str() + "]"; }

CheckResult sweep(Workspace& w, const RunOptions& opt) {
  CheckResult r = make("sweep", true);
  const Scenario& sc = w.scenario();
  if (sc.families.empty()) throw InputError("scenario declares no family to sweep");
  const std::vector<Rational> grid = parse_param_grid(opt.param_grid.value_or("a=0:3"));
  const QuarticModel& q = w.quartic();
  const SurfaceModel& s = w.surface();
  const MWBasis& basis = w.basis();

  std::vector<SweepItem> items;
  for (std::size_t f = 0; f < sc.families.size(); ++f)
    for (const auto& a : grid) items.push_back({f, a, std::nullopt, {}, {}, {}});

  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opt.jobs))
  for (long k = 0; k < n; ++k) {
    SweepItem& it = items[static_cast<std::size_t>(k)];
    try {
      ConicCurve c = w.family_member(sc.families[it.family], it.a);
      it.cert = contact_verify(c, q);
      if (it.cert.valid) it.lift = mw_coordinates(lift_section(c, s), basis, s);
      it.conic = std::move(c);
    } catch (const std::exception& e) {
      it.error = e.what();
    }
  }

  std::ostringstream os;
  std::vector<const SweepItem*> accepted;
  json certs = json::array(), rejected = json::array();
  for (const auto& it : items) {
    const FamilyDecl& f = sc.families[it.family];
    const std::string name = member_name(f, it.a);
    std::string reason = it.error;
    if (reason.empty() && !it.cert.valid) reason = it.cert.diagnosis;
    for (std::size_t i = 0; reason.empty() && i < accepted.size(); ++i) {
      const ConicCurve& o = *accepted[i]->conic;
      if (!transversal(*it.conic, o))
        reason = "not transversal to " + o.name;
      else if (have_common_point({q.F, it.conic->form, o.form}))
        reason = "meets " + o.name + " on the quartic";
      for (std::size_t j = i + 1; reason.empty() && j < accepted.size(); ++j)
        if (!triple_free(*it.conic, o, *accepted[j]->conic))
          reason = "common point with " + o.name + " and " + accepted[j]->conic->name;
    }
    if (!reason.empty()) {
      rejected.push_back({{"name", name}, {"family", f.name}, {"a", js(it.a)}, {"reason", reason}});
      os << std::left << std::setw(16) << name << std::right << "rejected: " << reason << "\n";
      continue;
    }
    json split = json::array();
    for (const auto* o : accepted) {
      SplittingType st = splitting_type(*o->conic, *it.conic, q);
      split.push_back({{"with", member_name(sc.families[o->family], o->a)}, {"type", {st.a, st.b}}});
    }
    certs.push_back({{"name", name},
                     {"family", f.name},
                     {"a", js(it.a)},
                     {"equation", w.source_form(*it.conic).str(kProjNames)},
                     {"contact", contact_json(it.cert)},
                     {"lift_coords", it.lift},
                     {"phi1_bit", two_divisible(it.lift) ? 1 : 0},
                     {"splitting", split}});
    os << std::left << std::setw(16) << name << std::right << "accepted: " << w.source_form(*it.conic).str(kProjNames)
       << "  lift " << vec_str(it.lift) << "\n";
    accepted.push_back(&it);
  }
  r.data = {{"certificate_schema", kCertificateSchema},
            {"tool_version", kToolVersion},
            {"scenario_hash", hash_hex(scenario_hash(sc))},
            {"scenario_text", print_scenario(sc)},
            {"grid", js(grid)},
            {"certificates", certs},
            {"rejected", rejected}};
  os << accepted.size() << " of " << items.size() << " accepted\n";
  finish(r, true, os);
  return r;
}

const json* find_sweep(const json& doc) {
  if (doc.contains("certificates")) return &doc;
  if (doc.contains("checks"))
    for (const auto& c : doc["checks"])
      if (c.value("check", "") == "sweep" && c.contains("data")) return &c["data"];
  return nullptr;
}

CheckResult verify_certificate(const RunOptions& opt) {
  CheckResult r = make("verify-certificate", false);
  if (!opt.certificate) throw InputError("verify-certificate needs a certificate document");
  const json* doc = find_sweep(*opt.certificate);
  if (!doc || doc->value("certificate_schema", "") != kCertificateSchema)
    throw InputError("document holds no certificate of schema " + std::string(kCertificateSchema));
  Workspace w(parse_scenario((*doc)["scenario_text"].get<std::string>()));
  const Scenario& sc = w.scenario();
  std::ostringstream os;
  bool pass = hash_hex(scenario_hash(sc)) == (*doc)["scenario_hash"].get<std::string>();
  if (!pass) os << "scenario hash mismatch\n";
  std::map<std::string, ConicCurve> rebuilt;
  json rows = json::array();
  for (const auto& cert : (*doc)["certificates"]) {
    const std::string fname = cert["family"].get<std::string>();
    auto f = std::find_if(sc.families.begin(), sc.families.end(), [&](const FamilyDecl& d) { return d.name == fname; });
    if (f == sc.families.end()) throw InputError("certificate refers to unknown family '" + fname + "'");
    const Rational a = Rational::parse(cert["a"].get<std::string>());
    ConicCurve c = w.family_member(*f, a);
    ContactCertificate cc = contact_verify(c, w.quartic());
    MWVector lift = cc.valid ? mw_coordinates(lift_section(c, w.surface()), w.basis(), w.surface()) : MWVector{};
    json split = json::array();
    for (const auto& prev : cert["splitting"]) {
      auto it = rebuilt.find(prev["with"].get<std::string>());
      if (it == rebuilt.end()) throw InputError("certificate order broken at " + cert["name"].get<std::string>());
      SplittingType st = splitting_type(it->second, c, w.quartic());
      split.push_back({{"with", prev["with"]}, {"type", {st.a, st.b}}});
    }
    const bool same = w.source_form(c).str(kProjNames) == cert["equation"].get<std::string>() &&
                      contact_json(cc) == cert["contact"] && json(lift) == cert["lift_coords"] &&
                      split == cert["splitting"];
    pass = pass && same;
    rows.push_back({{"name", cert["name"]}, {"reproduced", same}});
    os << std::left << std::setw(16) << cert["name"].get<std::string>() << std::right
       << (same ? "reproduced" : "DIFFERS") << "\n";
    rebuilt.emplace(cert["name"].get<std::string>(), std::move(c));
  }
  r.data = {{"certificates", rows}};
  finish(r, pass, os);
  return r;
}

}  // namespace

Workspace::Workspace(Scenario s) : s_(std::move(s)) {}

const QuarticModel& Workspace::quartic() {
  if (!q_) q_ = std::make_unique<QuarticModel>(normalize_quartic(s_.quartic, s_.base));
  return *q_;
}

const SurfaceModel& Workspace::surface() {
  if (!surface_) surface_ = std::make_unique<SurfaceModel>(quartic());
  return *surface_;
}

const MWBasis& Workspace::basis() {
  if (!basis_) {
    if (s_.sections.empty()) throw InputError("scenario declares no basis sections");
    std::vector<std::string> names;
    for (const auto& d : s_.sections) names.push_back(d.name);
    basis_ = std::make_unique<MWBasis>(gram_matrix(sections_from_lines(lines(), surface()), surface(), names));
  }
  return *basis_;
}

std::vector<LineSpec> Workspace::lines() const {
  std::vector<LineSpec> out;
  for (const auto& d : s_.sections) out.push_back({d.name, d.line, d.sign});
  return out;
}

MWVector Workspace::word_vector(const MWWord& w) const {
  MWVector v(s_.sections.size(), 0);
  for (const auto& [c, sym] : w.terms) {
    auto it = std::find_if(s_.sections.begin(), s_.sections.end(), [&](const SectionDecl& d) { return d.name == sym; });
    if (it == s_.sections.end()) throw InputError("unknown basis symbol '" + sym + "'");
    v[static_cast<std::size_t>(it - s_.sections.begin())] += c;
  }
  return v;
}

ConicCurve Workspace::recipe_conic(const std::string& name, const UniPoly& r, const MWWord& w) {
  const MWVector v = word_vector(w);
  ConicCurve c = bisect_conic(combine(v, basis(), surface()), RatFunc(r), surface(), name);
  c.provenance->coords = v;
  c.provenance->word = w.str();
  return c;
}

ConicCurve Workspace::family_member(const FamilyDecl& f, const Rational& a) {
  MPoly r = f.r.compose({MPoly::constant(a, 1), MPoly::var(0, 1)});
  return recipe_conic(f.name + "[a=" + a.str() + "]", to_unipoly(r), f.word);
}

const std::vector<ConicCurve>& Workspace::conics() {
  if (!conics_) {
    std::vector<ConicCurve> out;
    for (const auto& d : s_.conics) {
      if (d.equation) {
        ConicCurve c;
        c.name = d.name;
        c.form = primitive_form(*d.equation);
        out.push_back(pull_conic(c, quartic().transform));
      } else {
        out.push_back(recipe_conic(d.name, to_unipoly(d.r), d.word));
      }
    }
    conics_ = std::move(out);
  }
  return *conics_;
}

const ConicCurve& Workspace::conic(const std::string& name) {
  for (const auto& c : conics())
    if (c.name == name) return c;
  throw InputError("unknown conic '" + name + "'");
}

std::vector<Arrangement> Workspace::arrangements() {
  std::vector<Arrangement> out;
  for (const auto& d : s_.arrangements) {
    Arrangement a{d.name, {}};
    for (const auto& m : d.members) a.conics.push_back(conic(m));
    out.push_back(std::move(a));
  }
  return out;
}

MPoly Workspace::source_form(const ConicCurve& c) {
  return primitive_form(transform(c.form, *inverse(quartic().transform)));
}

CheckResult run_check(Workspace& w, const std::string& check, const RunOptions& opt) {
  if (check == "verify-gram") return verify_gram(w);
  if (check == "construct-conics") return construct_conics(w);
  if (check == "verify-contact") return verify_contact(w, opt);
  if (check == "classify-splitting") return classify_splitting(w);
  if (check == "nplet-report") return nplet_report(w, opt);
  if (check == "invariance") return invariance(w, opt);
  if (check == "sweep") return sweep(w, opt);
  if (check == "verify-certificate") return verify_certificate(opt);
  throw InputError("unknown check '" + check + "'");
}

std::vector<Rational> parse_param_grid(const std::string& spec) {
  std::string body = spec;
  if (auto eq = body.find('='); eq != std::string::npos) {
    std::string name = body.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    if (name != "a") throw InputError("grid parameter must be 'a', got '" + name + "'");
    body = body.substr(eq + 1);
  }
  auto constant = [&](const std::string& s) {
    MPoly p = parse_poly(s, {}, 1, 1);
    return p.is_zero() ? Rational(0) : p.terms().begin()->second;
  };
  std::vector<Rational> out;
  if (body.find_first_not_of(" \t") == std::string::npos) return out;
  if (body.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(body);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw InputError("grid range must be lo:hi or lo:hi:step");
    const Rational lo = constant(parts[0]), hi = constant(parts[1]);
    const Rational step = parts.size() == 3 ? constant(parts[2]) : Rational(1);
    if (step.sign() <= 0) throw InputError("grid step must be positive");
    for (Rational a = lo; a <= hi; a += step) out.push_back(a);
    return out;
  }
  std::stringstream ss(body);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(constant(p));
  return out;
}

json report_document(const Scenario& s, const std::vector<CheckResult>& results) {
  json checks = json::array();
  for (const auto& r : results)
    checks.push_back({{"check", r.check}, {"status", r.status}, {"exit_code", r.exit_code}, {"data", r.data}});
  return {{"schema", kReportSchema},
          {"tool_version", kToolVersion},
          {"scenario", s.name},
          {"scenario_hash", hash_hex(scenario_hash(s))},
          {"checks", checks}};
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace zf
