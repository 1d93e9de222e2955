#ifndef MOTIVIC_LAURENT_HPP
#define MOTIVIC_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "motivic/error.hpp"

namespace motivic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in the Lefschetz class L over arbitrary-precision
/// integers. Canonical form: no zero coefficients are stored, so structural
/// equality of the term maps is ring equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

  /// Monomial c * L^e.
  static LaurentPoly monomial(const Integer& c, int exponent);
  /// The class L itself.
  static LaurentPoly lefschetz(int exponent = 1) { return monomial(1, exponent); }

  const std::map<int, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;  // no negative exponents
  int min_exponent() const;    // throws InvalidArgument on zero
  int max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;

  /// Exact evaluation at L = value. value must be nonzero if negative
  /// exponents are present (PoleAtZero).
  Rational evaluate(const Rational& value) const;

  /// Substitute L -> 1 (reduction modulo L-1, on the scalar level).
  LaurentPoly at_one() const;
  /// Substitute L -> 0; requires is_polynomial() (NotReducible otherwise).
  LaurentPoly at_zero() const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void prune();
  std::map<int, Integer> terms_;
};

}  // namespace motivic

#endif
