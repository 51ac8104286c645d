#include "zf/expr.hpp"

#include <cctype>

namespace zf {

ParseError::ParseError(const std::string& msg, std::size_t l, std::size_t c)
    : InputError(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars, std::size_t line, std::size_t col0)
      : s_(s), vars_(vars), line_(line), col0_(col0) {}

  MPoly run() {
    MPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  MPoly term() {
    MPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        std::size_t at = i_;
        MPoly d = unary();
        if (d.is_zero() || d.degree() != 0) {
          i_ = at;
          fail("division only by nonzero constants");
        }
        p = d.terms().begin()->second.inverse() * p;
      } else {
        return p;
      }
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    MPoly b = primary();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an integer exponent");
      b = pow(b, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return b;
  }

  MPoly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("non-rational literal (use n/d)");
      return MPoly::constant(Rational(Integer(std::string(s_.substr(start, i_ - start)))), vars_.size());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return MPoly::var(k, vars_.size());
      i_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t line_, col0_, i_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, std::size_t line,
                 std::size_t column0) {
  return Parser(text, vars, line, column0).run();
}

UniPoly to_unipoly(const MPoly& p) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i]) throw InputError("expected a polynomial in t only");
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] += v;
  }
  return UniPoly(std::move(c));
}

UniPoly parse_unipoly(std::string_view text) { return to_unipoly(parse_poly(text, {"t"})); }

MPoly parse_form(std::string_view text) { return parse_poly(text, kProjNames); }

BiPoly parse_bipoly(std::string_view text) {
  MPoly p = parse_poly(text, {"t", "x"});
  MPoly q(3);
  for (const auto& [e, v] : p.terms()) q.add_term({e[0], e[1], 0}, v);
  return dehomogenize(q);
}

}  // namespace zf
