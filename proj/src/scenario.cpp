#include "zf/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "zf/expr.hpp"

namespace zf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// A slice of one scenario line that remembers where it starts.
struct Span {
  std::string_view text;
  std::size_t line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg, std::size_t at = 0) const { throw ParseError(msg, line, col + at); }

  Span sub(std::size_t pos, std::size_t n = std::string_view::npos) const {
    return {text.substr(pos, n), line, col + pos};
  }
  Span trimmed() const {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return sub(b, e - b);
  }
  bool empty() const { return text.empty(); }
};

// Leading identifier and the remainder.
std::pair<Span, Span> take_ident(Span s, const char* what) {
  s = s.trimmed();
  if (s.empty() || !is_ident_start(s.text[0])) s.fail("expected " + std::string(what));
  std::size_t i = 1;
  while (i < s.text.size() && is_ident_char(s.text[i])) ++i;
  return {s.sub(0, i), s.sub(i).trimmed()};
}

Span expect_char(Span s, char c) {
  s = s.trimmed();
  if (s.empty() || s.text[0] != c) s.fail(std::string("expected '") + c + "'");
  return s.sub(1).trimmed();
}

// "head(inner) rest": returns inner and rest, checking balanced parentheses.
std::pair<Span, Span> take_call(Span s, std::string_view head) {
  s = s.trimmed();
  if (s.text.substr(0, head.size()) != head) s.fail("expected " + std::string(head) + "(...)");
  Span r = s.sub(head.size()).trimmed();
  if (r.empty() || r.text[0] != '(') r.fail("expected '('");
  int depth = 0;
  for (std::size_t i = 0; i < r.text.size(); ++i) {
    if (r.text[i] == '(') ++depth;
    if (r.text[i] == ')' && --depth == 0) return {r.sub(1, i - 1), r.sub(i + 1).trimmed()};
  }
  r.fail("unbalanced parentheses");
}

// Splits at the first comma outside parentheses and brackets.
std::pair<Span, Span> split_top_comma(Span s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.text.size(); ++i) {
    char c = s.text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) return {s.sub(0, i), s.sub(i + 1)};
  }
  s.fail("expected 'r, word'");
}

Rational parse_constant(Span s) {
  s = s.trimmed();
  if (s.empty()) s.fail("expected a rational number");
  MPoly p = parse_poly(s.text, {}, s.line, s.col);
  return p.is_zero() ? Rational(0) : p.terms().begin()->second;
}

RatVector parse_point(Span s) {
  RatVector v;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i)
    if (i == s.text.size() || s.text[i] == ':') {
      v.push_back(parse_constant(s.sub(start, i - start)));
      start = i + 1;
    }
  if (v.size() != 3) s.fail("expected a point T : X : Z");
  if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); })) s.fail("point is zero");
  return v;
}

RatMatrix parse_matrix(Span s) {
  s = s.trimmed();
  if (s.empty() || s.text[0] != '[' || s.text.back() != ']') s.fail("expected [[...], ...]");
  Span body = s.sub(1, s.text.size() - 2);
  std::vector<RatVector> rows;
  std::size_t i = 0;
  while (i < body.text.size()) {
    char c = body.text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c != '[') body.fail("expected '['", i);
    std::size_t close = body.text.find(']', i);
    if (close == std::string_view::npos) body.fail("missing ']'", i);
    Span row = body.sub(i + 1, close - i - 1);
    RatVector r;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= row.text.size(); ++k)
      if (k == row.text.size() || row.text[k] == ',') {
        r.push_back(parse_constant(row.sub(start, k - start)));
        start = k + 1;
      }
    rows.push_back(std::move(r));
    i = close + 1;
  }
  if (rows.empty()) s.fail("empty matrix");
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) s.fail("matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

struct PendingSymbol {
  std::string symbol;
  std::size_t line, col;
};

MWWord parse_word(Span s, std::vector<PendingSymbol>* refs) {
  MWWord w;
  std::set<std::string> seen;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.text.size() && std::isspace(static_cast<unsigned char>(s.text[i]))) ++i;
  };
  skip();
  if (i == s.text.size()) s.fail("empty Mordell-Weil word");
  while (i < s.text.size()) {
    long sign = 1;
    if (s.text[i] == '+' || s.text[i] == '-') {
      sign = s.text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!w.terms.empty()) {
      s.fail("expected '+' or '-'", i);
    }
    long n = 1;
    if (i < s.text.size() && s.text[i] == '[') {
      std::size_t start = ++i;
      while (i < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[i]))) ++i;
      if (start == i || i == s.text.size() || s.text[i] != ']') s.fail("expected [n] with a positive integer n", start - 1);
      n = std::stol(std::string(s.text.substr(start, i - start)));
      if (n == 0) s.fail("zero multiple", start);
      ++i;
      skip();
    }
    if (i == s.text.size() || !is_ident_start(s.text[i])) s.fail("expected a basis symbol", i);
    std::size_t start = i;
    while (i < s.text.size() && (std::isalnum(static_cast<unsigned char>(s.text[i])) || s.text[i] == '_')) ++i;
    std::string sym(s.text.substr(start, i - start));
    if (!seen.insert(sym).second) s.fail("basis symbol '" + sym + "' repeated", start);
    if (refs) refs->push_back({sym, s.line, s.col + start});
    w.terms.push_back({sign * n, sym});
    skip();
  }
  return w;
}

std::string point_str(const RatVector& v) { return v[0].str() + " : " + v[1].str() + " : " + v[2].str(); }

const std::map<std::string, std::string>& quartic_table() {
  static const std::map<std::string, std::string> table{
      {"two-nodal-shioda-usui",
       "X^3*Z + Z*(271350*Z - 98*T)*X^2 + T*(T - 5825*Z)*(T - 2025*Z)*X + 36*T^2*(T - 2025*Z)^2"},
      {"tacnodal-shioda-usui", "X^3*Z + (25*T + 9*Z)*X^2*Z + (144*T^2*Z + T^3)*X + 16*T^4"},
  };
  return table;
}

const char* const kTwoNodalLattice = R"(quartic builtin two-nodal-shioda-usui
base 0 : 1 : 0
section s0 = line(X) +
section s1 = line(32*T + X) +
section s2 = line(X - 28*T) +
section s3 = line(20*T + X) +
section s4 = line(X + 35*T - 70875*Z) +
expect det 1/8
expect gram [[1/2, 0, 0, 0, 0], [0, 1, 0, 0, -1/2], [0, 0, 1, 0, -1/2], [0, 0, 0, 1, -1/2], [0, -1/2, -1/2, -1/2, 1]]
)";

const std::map<std::string, std::string>& scenario_table() {
  static const std::map<std::string, std::string> table{
      {"two-nodal-shioda-usui", std::string("scenario two-nodal-shioda-usui\n") + kTwoNodalLattice + R"(
# bisection families through [2]s0 and s1 + s3
family A = C(-1/12*t + a, [2]s0)
family B = C(-1/6*t + a, s1 + s3)
conic A0 = C(-1/12*t, [2]s0)
conic A1 = C(-1/12*t + 1, [2]s0)
arrangement pair = A0 A1
check verify-gram
check construct-conics
check verify-contact
)"},
      {"tacnodal-shioda-usui", R"(scenario tacnodal-shioda-usui
quartic builtin tacnodal-shioda-usui
base 0 : 1 : 0
section s0 = line(X) +
section s1 = line(16*T + X) -
section s2 = line(15*T + X) -
section s3 = line(7*T + X) +
expect det 1/8
expect gram [[1/2, 0, 0, 0], [0, 3/4, -1/4, -1/4], [0, -1/4, 3/4, -1/4], [0, -1/4, -1/4, 3/4]]

family A = C(-1/8*t + a, [2]s0)
family B = C(-t + a, s1 - s2)
# a splitting and a non-splitting contact conic
conic D1 = C(-1/8*t, [2]s0)
conic D2 = C(-t, s1 - s2)
arrangement split = D1
arrangement nonsplit = D2
check verify-gram
check verify-contact
check nplet-report
)"},
      {"five-plet", std::string("scenario five-plet\n") + kTwoNodalLattice + R"(
conic C1 = C(-1/12*t, [2]s0)
conic C2 = C(-1/12*t + 1, [2]s0)
conic C3 = C(1/20*t, -s1 - s2 - [2]s3 - [2]s4)
conic C4 = C(1/20*t + 1, -s1 - s2 - [2]s3 - [2]s4)
conic C5 = C(-1/24*t, s1 + [2]s2 + s3 + [2]s4)
conic C6 = C(1/6*t, s1 - s2)

arrangement A1 = C1 C2
arrangement A2 = C1 C3
arrangement A3 = C3 C4
arrangement A4 = C3 C5
arrangement A5 = C3 C6

check verify-gram
check construct-conics
check verify-contact
check classify-splitting
check nplet-report
check invariance
)"},
  };
  return table;
}

}  // namespace

std::string MWWord::str() const {
  std::string out;
  for (const auto& [c, sym] : terms) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    long a = c < 0 ? -c : c;
    if (a != 1) out += "[" + std::to_string(a) + "]";
    out += sym;
  }
  return out;
}

MWWord parse_mw_word(std::string_view text, std::size_t line, std::size_t column0) {
  return parse_word(Span{text, line, column0}, nullptr);
}

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  bool have_quartic = false;
  std::vector<PendingSymbol> word_refs, conic_refs;
  std::set<std::string> names;
  auto declare = [&](const Span& name) {
    if (!names.insert(std::string(name.text)).second) name.fail("'" + std::string(name.text) + "' declared twice");
  };

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Span ln = Span{raw, line_no, 1}.trimmed();
    if (ln.empty()) continue;

    auto [kw, rest] = take_ident(ln, "a keyword");
    const std::string key(kw.text);
    if (key == "scenario") {
      auto [name, tail] = take_ident(rest, "a scenario name");
      if (!tail.empty()) tail.fail("unexpected text");
      sc.name = name.text;
    } else if (key == "quartic") {
      if (have_quartic) kw.fail("quartic declared twice");
      have_quartic = true;
      if (rest.text.substr(0, 8) == "builtin ") {
        auto [name, tail] = take_ident(rest.sub(8), "a built-in quartic name");
        if (!tail.empty()) tail.fail("unexpected text");
        if (!quartic_table().count(std::string(name.text)))
          name.fail("unknown built-in quartic '" + std::string(name.text) + "'");
        sc.builtin_quartic = std::string(name.text);
        sc.quartic = builtin_quartic(*sc.builtin_quartic);
      } else {
        if (rest.empty()) kw.fail("expected a quartic form");
        sc.quartic = parse_poly(rest.text, kProjNames, rest.line, rest.col);
        if (sc.quartic.is_zero() || sc.quartic.degree() != 4 || !sc.quartic.is_homogeneous())
          rest.fail("quartic must be a homogeneous form of degree 4 in T, X, Z");
      }
    } else if (key == "base") {
      sc.base = parse_point(rest);
    } else if (key == "second-base") {
      sc.second_base = parse_point(rest);
    } else if (key == "section") {
      auto [name, tail] = take_ident(rest, "a section name");
      declare(name);
      auto [inner, after] = take_call(expect_char(tail, '='), "line");
      SectionDecl d{std::string(name.text), parse_poly(inner.text, kProjNames, inner.line, inner.col), 1};
      if (d.line.is_zero() || d.line.degree() != 1 || !d.line.is_homogeneous()) inner.fail("expected a linear form");
      if (after.text == "-")
        d.sign = -1;
      else if (!after.empty() && after.text != "+")
        after.fail("expected '+' or '-'");
      sc.sections.push_back(std::move(d));
    } else if (key == "expect") {
      auto [what, tail] = take_ident(rest, "'det' or 'gram'");
      if (what.text == "det")
        sc.expect_det = parse_constant(tail);
      else if (what.text == "gram")
        sc.expect_gram = parse_matrix(tail);
      else
        what.fail("expected 'det' or 'gram'");
    } else if (key == "conic" || key == "family") {
      auto [name, tail] = take_ident(rest, "a name");
      declare(name);
      Span rhs = expect_char(tail, '=');
      if (key == "conic" && rhs.text.substr(0, 8) == "equation") {
        auto [inner, after] = take_call(rhs, "equation");
        if (!after.empty()) after.fail("unexpected text");
        MPoly eq = parse_poly(inner.text, kProjNames, inner.line, inner.col);
        if (eq.is_zero() || eq.degree() != 2 || !eq.is_homogeneous()) inner.fail("expected a quadratic form");
        sc.conics.push_back({std::string(name.text), MPoly(1), {}, eq});
        continue;
      }
      auto [inner, after] = take_call(rhs, "C");
      if (!after.empty()) after.fail("unexpected text");
      auto [rs, ws] = split_top_comma(inner);
      MWWord w = parse_word(ws, &word_refs);
      if (key == "conic") {
        MPoly r = parse_poly(rs.text, {"t"}, rs.line, rs.col);
        sc.conics.push_back({std::string(name.text), r, w, std::nullopt});
      } else {
        MPoly r = parse_poly(rs.text, kFamilyParamNames, rs.line, rs.col);
        if (r.degree_in(0) != 1) rs.fail("family slope must be linear in the parameter a");
        sc.families.push_back({std::string(name.text), r, w});
      }
    } else if (key == "arrangement") {
      auto [name, tail] = take_ident(rest, "an arrangement name");
      declare(name);
      ArrangementDecl d{std::string(name.text), {}};
      Span members = expect_char(tail, '=');
      while (!members.empty()) {
        auto [m, more] = take_ident(members, "a conic name");
        conic_refs.push_back({std::string(m.text), m.line, m.col});
        d.members.emplace_back(m.text);
        members = more;
      }
      if (d.members.empty()) tail.fail("arrangement has no members");
      sc.arrangements.push_back(std::move(d));
    } else if (key == "check") {
      auto [name, tail] = take_ident(rest, "a check name");
      if (!tail.empty()) tail.fail("unexpected text");
      if (std::find(kCheckNames.begin(), kCheckNames.end(), name.text) == kCheckNames.end())
        name.fail("unknown check '" + std::string(name.text) + "'");
      sc.checks.emplace_back(name.text);
    } else {
      kw.fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_quartic) throw ParseError("missing 'quartic' line", 1, 1);

  std::set<std::string> basis, conics;
  for (const auto& s : sc.sections) basis.insert(s.name);
  for (const auto& c : sc.conics) conics.insert(c.name);
  for (const auto& r : word_refs)
    if (!basis.count(r.symbol)) throw ParseError("unknown basis symbol '" + r.symbol + "'", r.line, r.col);
  for (const auto& r : conic_refs)
    if (!conics.count(r.symbol)) throw ParseError("unknown conic '" + r.symbol + "'", r.line, r.col);
  return sc;
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream os;
  if (!s.name.empty()) os << "scenario " << s.name << "\n";
  if (s.builtin_quartic)
    os << "quartic builtin " << *s.builtin_quartic << "\n";
  else
    os << "quartic " << s.quartic.str(kProjNames) << "\n";
  os << "base " << point_str(s.base) << "\n";
  if (s.second_base) os << "second-base " << point_str(*s.second_base) << "\n";
  for (const auto& d : s.sections)
    os << "section " << d.name << " = line(" << d.line.str(kProjNames) << ") " << (d.sign < 0 ? "-" : "+") << "\n";
  if (s.expect_det) os << "expect det " << s.expect_det->str() << "\n";
  if (s.expect_gram) {
    os << "expect gram [";
    for (std::size_t i = 0; i < s.expect_gram->rows(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < s.expect_gram->cols(); ++j) os << (j ? ", " : "") << (*s.expect_gram)(i, j).str();
      os << "]";
    }
    os << "]\n";
  }
  for (const auto& f : s.families) os << "family " << f.name << " = C(" << f.r.str(kFamilyParamNames) << ", " << f.word.str() << ")\n";
  for (const auto& c : s.conics) {
    if (c.equation)
      os << "conic " << c.name << " = equation(" << c.equation->str(kProjNames) << ")\n";
    else
      os << "conic " << c.name << " = C(" << c.r.str({"t"}) << ", " << c.word.str() << ")\n";
  }
  for (const auto& a : s.arrangements) {
    os << "arrangement " << a.name << " =";
    for (const auto& m : a.members) os << " " << m;
    os << "\n";
  }
  for (const auto& c : s.checks) os << "check " << c << "\n";
  return os.str();
}

std::uint64_t scenario_hash(const Scenario& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : print_scenario(s)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

MPoly builtin_quartic(const std::string& name) {
  auto it = quartic_table().find(name);
  if (it == quartic_table().end()) throw InputError("unknown built-in quartic '" + name + "'");
  return parse_form(it->second);
}

std::vector<std::string> builtin_quartic_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : quartic_table()) out.push_back(k);
  return out;
}

std::string builtin_scenario_text(const std::string& name) {
  auto it = scenario_table().find(name);
  if (it == scenario_table().end()) throw InputError("unknown built-in scenario '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : scenario_table()) out.push_back(k);
  return out;
}

Scenario builtin_scenario(const std::string& name) { return parse_scenario(builtin_scenario_text(name)); }

}  // namespace zf
