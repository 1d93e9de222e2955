#ifndef MOTIVIC_GRRING_HPP
#define MOTIVIC_GRRING_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

enum class Flavor { Naive = 0, Equivariant = 1 };

/// A named stratum class [E_J^o] (naive) or its cyclic cover [E~_J^o]
/// (equivariant, with mu_m action label). The empty index set is reserved for
/// the unit class [X_0].
struct StratumSymbol {
  Flavor flavor = Flavor::Naive;
  std::vector<int> index_set;  // sorted, unique
  int action_label = 1;        // cover degree m; 1 for naive symbols

  static StratumSymbol unit() { return StratumSymbol{}; }
  static StratumSymbol naive(std::vector<int> J);
  static StratumSymbol equivariant(std::vector<int> J, int m);

  bool is_unit() const { return index_set.empty() && flavor == Flavor::Naive; }

  /// Canonical identifier: "1", "E{1,3}", or "E~{1,3}[m=2]".
  std::string name() const;

  auto operator<=>(const StratumSymbol&) const = default;
};

/// Element of the localized equivariant Grothendieck ring, represented as a
/// finite Z[L,L^-1]-combination of stratum symbols (free-module normal form).
class GrElement {
 public:
  GrElement() = default;
  GrElement(const StratumSymbol& s) { terms_[s] = LaurentPoly(1); }  // NOLINT
  GrElement(const StratumSymbol& s, const LaurentPoly& c);

  /// c * [X_0] (the unit symbol).
  static GrElement scalar(const LaurentPoly& c) { return GrElement(StratumSymbol::unit(), c); }

  const std::map<StratumSymbol, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const StratumSymbol& s) const;

  GrElement operator-() const;
  GrElement& operator+=(const GrElement& o);
  GrElement& operator-=(const GrElement& o);

  friend GrElement operator+(GrElement a, const GrElement& b) { return a += b; }
  friend GrElement operator-(GrElement a, const GrElement& b) { return a -= b; }
  friend bool operator==(const GrElement&, const GrElement&) = default;

  std::string to_string() const;
  static GrElement parse(const std::string& text);

 private:
  void prune();
  std::map<StratumSymbol, LaurentPoly> terms_;
};

/// Z[L^{±1}]-module structure.
GrElement gr_scale(const LaurentPoly& c, const GrElement& a);
inline GrElement operator*(const LaurentPoly& c, const GrElement& a) { return gr_scale(c, a); }

/// Symbol-level substitution: every occurrence of `from` replaced by `to`,
/// coefficients untouched.
GrElement gr_substitute(const GrElement& a, const StratumSymbol& from, const StratumSymbol& to);

/// Quotient declarations used by gr_forget: equivariant symbol -> its naive
/// quotient symbol.
using QuotientTable = std::map<StratumSymbol, StratumSymbol>;

/// Pass to the naive quotient: each equivariant symbol is replaced by its
/// declared quotient partner; naive symbols pass through. Missing declaration
/// raises MissingQuotient.
GrElement gr_forget(const GrElement& a, const QuotientTable& quotients);

/// Evaluation homomorphism: L -> L_value, symbols -> symbol_values.
Rational gr_specialize(const GrElement& a, const Rational& L_value,
                       const std::map<StratumSymbol, Rational>& symbol_values);

enum class Modulus { LMinusOne, L };

/// Reduce coefficients mod L-1 (L -> 1) or mod L (L -> 0; coefficients must be
/// polynomials in L).
GrElement gr_reduce(const GrElement& a, Modulus modulus);

/// Naive equivariant motivic measure of a cylinder of level n in relative
/// dimension m: [C] * L^{-(n+1)m}.
GrElement measure_cylinder(const GrElement& class_C, unsigned n, unsigned m);

}  // namespace motivic

#endif
