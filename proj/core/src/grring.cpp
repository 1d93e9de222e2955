#include "motivic/grring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace motivic {

namespace {

std::vector<int> sorted_unique(std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

}  // namespace

StratumSymbol StratumSymbol::naive(std::vector<int> J) {
  return StratumSymbol{Flavor::Naive, sorted_unique(std::move(J)), 1};
}

StratumSymbol StratumSymbol::equivariant(std::vector<int> J, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "action label must be positive");
  return StratumSymbol{Flavor::Equivariant, sorted_unique(std::move(J)), m};
}

std::string StratumSymbol::name() const {
  if (is_unit()) return "1";
  std::ostringstream os;
  os << "E";
  if (flavor == Flavor::Equivariant) os << "~";
  os << "{";
  for (size_t i = 0; i < index_set.size(); ++i) {
    if (i) os << ",";
    os << index_set[i];
  }
  os << "}";
  if (flavor == Flavor::Equivariant) os << "[m=" << action_label << "]";
  return os.str();
}

GrElement::GrElement(const StratumSymbol& s, const LaurentPoly& c) {
  if (!c.is_zero()) terms_[s] = c;
}

LaurentPoly GrElement::coefficient(const StratumSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void GrElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

GrElement GrElement::operator-() const {
  GrElement r;
  for (const auto& [s, c] : terms_) r.terms_[s] = -c;
  return r;
}

GrElement& GrElement::operator+=(const GrElement& o) {
  for (const auto& [s, c] : o.terms_) terms_[s] += c;
  prune();
  return *this;
}

GrElement& GrElement::operator-=(const GrElement& o) {
  for (const auto& [s, c] : o.terms_) terms_[s] -= c;
  prune();
  return *this;
}

GrElement gr_scale(const LaurentPoly& c, const GrElement& a) {
  GrElement r;
  for (const auto& [s, coeff] : a.terms()) r += GrElement(s, c * coeff);
  return r;
}

GrElement gr_substitute(const GrElement& a, const StratumSymbol& from, const StratumSymbol& to) {
  GrElement r;
  for (const auto& [s, c] : a.terms()) r += GrElement(s == from ? to : s, c);
  return r;
}

GrElement gr_forget(const GrElement& a, const QuotientTable& quotients) {
  GrElement r;
  for (const auto& [s, c] : a.terms()) {
    if (s.flavor == Flavor::Naive) {
      r += GrElement(s, c);
      continue;
    }
    auto it = quotients.find(s);
    if (it == quotients.end())
      throw Error(Errc::MissingQuotient, "no declared quotient for " + s.name());
    r += GrElement(it->second, c);
  }
  return r;
}

Rational gr_specialize(const GrElement& a, const Rational& L_value,
                       const std::map<StratumSymbol, Rational>& symbol_values) {
  Rational sum = 0;
  for (const auto& [s, c] : a.terms()) {
    auto it = symbol_values.find(s);
    if (it == symbol_values.end())
      throw Error(Errc::MissingAssignment, "no value for symbol " + s.name());
    sum += c.evaluate(L_value) * it->second;
  }
  return sum;
}

GrElement gr_reduce(const GrElement& a, Modulus modulus) {
  GrElement r;
  for (const auto& [s, c] : a.terms())
    r += GrElement(s, modulus == Modulus::LMinusOne ? c.at_one() : c.at_zero());
  return r;
}

GrElement measure_cylinder(const GrElement& class_C, unsigned n, unsigned m) {
  return gr_scale(LaurentPoly::lefschetz(-static_cast<int>((n + 1) * m)), class_C);
}

std::string GrElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    LaurentPoly coeff = c;
    const bool single = coeff.terms().size() == 1;
    const bool negative = single && coeff.terms().begin()->second < 0;
    if (first) {
      first = false;
    } else {
      os << (negative ? " - " : " + ");
      if (negative) coeff = -coeff;
    }
    if (single)
      os << coeff.to_string();
    else
      os << "(" << coeff.to_string() << ")";
    os << "*" << s.name();
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

int parse_int(Cursor& c) {
  c.skip_ws();
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.i;
  }
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw Error(Errc::ParseError, "expected integer in '" + c.s + "'");
  return sign * std::stoi(c.s.substr(start, c.i - start));
}

StratumSymbol parse_symbol(Cursor& c) {
  if (c.peek() == '1') {
    ++c.i;
    return StratumSymbol::unit();
  }
  if (c.peek() != 'E') throw Error(Errc::ParseError, "expected symbol in '" + c.s + "'");
  ++c.i;
  Flavor flavor = Flavor::Naive;
  if (c.peek() == '~') {
    flavor = Flavor::Equivariant;
    ++c.i;
  }
  if (c.peek() != '{') throw Error(Errc::ParseError, "expected '{' in '" + c.s + "'");
  ++c.i;
  std::vector<int> J;
  if (c.peek() != '}') {
    J.push_back(parse_int(c));
    while (c.peek() == ',') {
      ++c.i;
      J.push_back(parse_int(c));
    }
  }
  if (c.peek() != '}') throw Error(Errc::ParseError, "expected '}' in '" + c.s + "'");
  ++c.i;
  int m = 1;
  if (c.peek() == '[') {
    ++c.i;
    if (c.s.compare(c.i, 2, "m=") != 0)
      throw Error(Errc::ParseError, "expected 'm=' in '" + c.s + "'");
    c.i += 2;
    m = parse_int(c);
    if (c.peek() != ']') throw Error(Errc::ParseError, "expected ']' in '" + c.s + "'");
    ++c.i;
  }
  if (flavor == Flavor::Naive && m != 1)
    throw Error(Errc::ParseError, "naive symbol with nontrivial label");
  return flavor == Flavor::Naive ? StratumSymbol::naive(std::move(J))
                                 : StratumSymbol::equivariant(std::move(J), m);
}

// A coefficient atom: "(L - 1)", "2L^-1", "L", "7". Stops before '*'.
LaurentPoly parse_coeff(Cursor& c, int sign) {
  if (c.peek() == '(') {
    size_t depth = 0;
    size_t start = ++c.i;
    while (c.i < c.s.size()) {
      if (c.s[c.i] == '(') ++depth;
      if (c.s[c.i] == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++c.i;
    }
    if (c.i >= c.s.size()) throw Error(Errc::ParseError, "unbalanced '(' in '" + c.s + "'");
    std::string inner = c.s.substr(start, c.i - start);
    ++c.i;
    LaurentPoly p = LaurentPoly::parse(inner);
    return sign < 0 ? -p : p;
  }
  size_t start = c.i;
  while (c.i < c.s.size() && c.s[c.i] != '*' && c.s[c.i] != '+' &&
         !(c.s[c.i] == '-' && c.i > start && c.s[c.i - 1] != '^') &&
         !std::isspace(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  LaurentPoly p = LaurentPoly::parse(c.s.substr(start, c.i - start));
  return sign < 0 ? -p : p;
}

}  // namespace

GrElement GrElement::parse(const std::string& text) {
  Cursor c{text};
  if (c.eof()) throw Error(Errc::ParseError, "empty GrElement");
  GrElement result;
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = (p == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      throw Error(Errc::ParseError, "expected '+' or '-' in '" + text + "'");
    }
    first = false;
    // "0" stands for the zero element.
    if (c.peek() == '0') {
      ++c.i;
      continue;
    }
    LaurentPoly coeff;
    StratumSymbol sym = StratumSymbol::unit();
    if (c.peek() == 'E') {
      coeff = LaurentPoly(sign);
      sym = parse_symbol(c);
    } else {
      coeff = parse_coeff(c, sign);
      if (c.peek() == '*') {
        ++c.i;
        sym = parse_symbol(c);
      }
    }
    result += GrElement(sym, coeff);
  }
  return result;
}

}  // namespace motivic
