#ifndef MOTIVIC_POLYNOMIAL_HPP
#define MOTIVIC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

/// Integer-coefficient polynomial in n_vars variables. Input grammar:
/// variables x1..xk (aliases x, y, z), '+', '-', '*', '^' with nonnegative
/// integer exponents, integer literals, parentheses.
struct IntPolynomial {
  struct Term {
    Integer coeff;
    std::vector<int> exps;  // one exponent per variable
  };

  int n_vars = 0;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }

  static IntPolynomial parse(const std::string& text);
  static IntPolynomial parse(const std::string& text, int n_vars);

  IntPolynomial derivative(int var) const;
  std::string to_string() const;

 private:
  void normalize_terms();
};

}  // namespace motivic

#endif
