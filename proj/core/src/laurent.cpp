#include "motivic/laurent.hpp"

#include <cctype>
#include <sstream>

namespace motivic {

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "min_exponent of zero");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "max_exponent of zero");
  return terms_.rbegin()->first;
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, Integer> out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  terms_ = std::move(out);
  prune();
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

Rational LaurentPoly::evaluate(const Rational& value) const {
  if (value == 0 && !is_polynomial())
    throw Error(Errc::PoleAtZero, "evaluating negative L-exponent at L=0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) p *= value;
    } else {
      for (int i = 0; i < -e; ++i) p *= value;
      p = Rational(1) / p;
    }
    sum += Rational(c) * p;
  }
  return sum;
}

LaurentPoly LaurentPoly::at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return LaurentPoly(sum);
}

LaurentPoly LaurentPoly::at_zero() const {
  if (!is_polynomial())
    throw Error(Errc::NotReducible, "negative L-exponent with modulus L");
  auto it = terms_.find(0);
  return it == terms_.end() ? LaurentPoly() : LaurentPoly(it->second);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "L";
      if (e != 1) os << "^" << e;
    }
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

Integer parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw Error(Errc::ParseError, "expected integer in '" + c.s + "'");
  return Integer(c.s.substr(start, c.i - start));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor c{text};
  LaurentPoly result;
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
    Integer coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_integer(c);
      saw_coeff = true;
    }
    int exponent = 0;
    if (c.peek() == '*') {
      ++c.i;  // tolerate "2*L"
    }
    if (c.peek() == 'L') {
      ++c.i;
      exponent = 1;
      if (c.peek() == '^') {
        ++c.i;
        int esign = 1;
        if (c.peek() == '-') {
          esign = -1;
          ++c.i;
        }
        exponent = esign * static_cast<int>(parse_integer(c));
      }
    } else if (!saw_coeff) {
      throw Error(Errc::ParseError, "expected term in '" + text + "'");
    }
    result += monomial(sign * coeff, exponent);
  }
  return result;
}

}  // namespace motivic
