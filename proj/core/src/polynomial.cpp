#include "motivic/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "motivic/error.hpp"

namespace motivic {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  int max_var = 0;  // highest variable index seen (1-based)

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(Errc::ParseError, "expected integer in '" + s + "'");
    return Integer(s.substr(start, i - start));
  }

  // expr := term (('+'|'-') term)*
  IntPolynomial expr() {
    IntPolynomial p = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i;
        p = add(p, term());
      } else if (c == '-') {
        ++i;
        p = add(p, negate(term()));
      } else {
        return p;
      }
    }
  }

  // term := factor ('*' factor)*
  IntPolynomial term() {
    IntPolynomial p = factor();
    while (consume('*')) p = multiply(p, factor());
    return p;
  }

  // factor := atom ('^' nonneg)?
  IntPolynomial factor() {
    IntPolynomial p = atom();
    if (consume('^')) {
      Integer e = integer();
      if (e < 0) throw Error(Errc::ParseError, "negative exponent");
      IntPolynomial r = constant(1);
      for (Integer k = 0; k < e; ++k) r = multiply(r, p);
      return r;
    }
    return p;
  }

  IntPolynomial atom() {
    char c = peek();
    if (c == '(') {
      ++i;
      IntPolynomial p = expr();
      if (!consume(')')) throw Error(Errc::ParseError, "expected ')' in '" + s + "'");
      return p;
    }
    if (c == '-') {
      ++i;
      return negate(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(integer());
    int var = 0;
    if (c == 'x' || c == 'y' || c == 'z') {
      ++i;
      if (c == 'x' && i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        var = static_cast<int>(integer());
        if (var < 1) throw Error(Errc::ParseError, "variables are x1, x2, ...");
      } else {
        var = (c == 'x') ? 1 : (c == 'y') ? 2 : 3;
      }
      max_var = std::max(max_var, var);
      IntPolynomial p;
      p.terms.push_back({Integer(1), std::vector<int>(static_cast<size_t>(var), 0)});
      p.terms[0].exps[var - 1] = 1;
      p.n_vars = var;
      return p;
    }
    throw Error(Errc::ParseError, "unexpected character '" + std::string(1, c) + "' in '" + s + "'");
  }

  static IntPolynomial constant(const Integer& c) {
    IntPolynomial p;
    if (c != 0) p.terms.push_back({c, {}});
    return p;
  }

  static void widen(IntPolynomial& p, int n) {
    p.n_vars = std::max(p.n_vars, n);
    for (auto& t : p.terms) t.exps.resize(static_cast<size_t>(p.n_vars), 0);
  }

  static IntPolynomial add(IntPolynomial a, IntPolynomial b) {
    widen(a, b.n_vars);
    widen(b, a.n_vars);
    for (auto& t : b.terms) a.terms.push_back(std::move(t));
    return canonical(std::move(a));
  }

  static IntPolynomial negate(IntPolynomial a) {
    for (auto& t : a.terms) t.coeff = -t.coeff;
    return a;
  }

  static IntPolynomial multiply(IntPolynomial a, IntPolynomial b) {
    widen(a, b.n_vars);
    widen(b, a.n_vars);
    IntPolynomial out;
    out.n_vars = a.n_vars;
    for (const auto& ta : a.terms)
      for (const auto& tb : b.terms) {
        IntPolynomial::Term t;
        t.coeff = ta.coeff * tb.coeff;
        t.exps.resize(static_cast<size_t>(out.n_vars), 0);
        for (int v = 0; v < out.n_vars; ++v) t.exps[v] = ta.exps[v] + tb.exps[v];
        out.terms.push_back(std::move(t));
      }
    return canonical(std::move(out));
  }

  static IntPolynomial canonical(IntPolynomial p) {
    std::map<std::vector<int>, Integer> acc;
    for (auto& t : p.terms) acc[t.exps] += t.coeff;
    p.terms.clear();
    for (auto& [e, c] : acc)
      if (c != 0) p.terms.push_back({c, e});
    return p;
  }
};

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  Parser parser{text};
  IntPolynomial p = parser.expr();
  parser.skip_ws();
  if (parser.i != text.size())
    throw Error(Errc::ParseError, "trailing input in '" + text + "'");
  Parser::widen(p, parser.max_var);
  return p;
}

IntPolynomial IntPolynomial::parse(const std::string& text, int n_vars) {
  IntPolynomial p = parse(text);
  if (p.n_vars > n_vars)
    throw Error(Errc::ParseError, "polynomial uses more than " + std::to_string(n_vars) + " variables");
  Parser::widen(p, n_vars);
  return p;
}

IntPolynomial IntPolynomial::derivative(int var) const {
  if (var < 0 || var >= n_vars) throw Error(Errc::InvalidArgument, "variable out of range");
  IntPolynomial out;
  out.n_vars = n_vars;
  for (const auto& t : terms) {
    if (t.exps[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exps[var];
    d.exps[var] -= 1;
    out.terms.push_back(std::move(d));
  }
  return out;
}

std::string IntPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Integer c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool printed = false;
    if (c != 1) {
      os << c;
      printed = true;
    }
    for (int v = 0; v < n_vars; ++v) {
      if (t.exps[v] == 0) continue;
      if (printed) os << "*";
      os << "x" << (v + 1);
      if (t.exps[v] > 1) os << "^" << t.exps[v];
      printed = true;
    }
    if (!printed) os << 1;
  }
  return os.str();
}

}  // namespace motivic
