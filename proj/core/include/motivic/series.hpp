#ifndef MOTIVIC_SERIES_HPP
#define MOTIVIC_SERIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/resolution.hpp"

namespace motivic {

/// A denominator factor (1 - L^a T^b), b >= 1.
struct DenFactor {
  int a = 0;
  int b = 1;
  auto operator<=>(const DenFactor&) const = default;
};

/// Element of M[T][L^a T^b / (1 - L^a T^b)] in fraction normal form:
/// numerator a T-polynomial with GrElement coefficients, denominator a
/// multiset of symbol-free factors (1 - L^a T^b).
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(GrElement constant);

  /// The generator L^a T^b / (1 - L^a T^b).
  static RationalSeries generator(int a, int b);

  /// Assemble from raw numerator coefficients and denominator factors.
  static RationalSeries from_parts(std::vector<GrElement> num,
                                   std::map<DenFactor, int> den);

  const std::vector<GrElement>& numerator() const { return num_; }
  const std::map<DenFactor, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  RationalSeries operator-() const;
  RationalSeries& operator+=(const RationalSeries& o);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a += -b; }

  /// Scale by a Grothendieck-ring element (coefficient-wise on the numerator).
  RationalSeries scaled(const GrElement& c) const;
  RationalSeries scaled(const LaurentPoly& c) const;
  /// Multiply by the generator L^a T^b / (1 - L^a T^b).
  RationalSeries times_generator(int a, int b) const;

  /// Cancel denominator factors that divide the numerator exactly.
  void normalize();

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void trim();
  std::vector<GrElement> num_;  // index = T-degree
  std::map<DenFactor, int> den_;
};

/// Equality as rational functions (cross-multiplication, exact).
bool rs_equal(const RationalSeries& x, const RationalSeries& y);
inline bool operator==(const RationalSeries& x, const RationalSeries& y) { return rs_equal(x, y); }

/// Exact power-series coefficients of T^0..T^D.
std::vector<GrElement> expand(const RationalSeries& x, int D);

/// T -> L^k T.
RationalSeries substitute_scaled(const RationalSeries& x, int k);

/// Formal limit for T -> infinity: each generator L^a T^b/(1-L^a T^b) goes to
/// -1, constants to themselves. NoLimit if the numerator T-degree exceeds the
/// total denominator T-degree.
GrElement limit_T_infinity(const RationalSeries& x);

/// Motivic zeta function Z(f;T) from resolution data:
/// sum over strata of (L-1)^(|J|-1) [E~_J^o] prod L^-xi T^N / (1 - L^-xi T^N).
RationalSeries zeta_equivariant(const ResolutionData& res);

/// Naive variant with (L-1)^|J| [E_J^o].
RationalSeries zeta_naive(const ResolutionData& res);

/// Volume Poincare series with gauge-form orders mu:
/// L^-m sum (L-1)^(|J|-1) [E~_J^o] prod L^-mu T^N / (1 - L^-mu T^N).
RationalSeries volume_series(const ResolutionData& res, const std::map<int, int>& mu);

/// Local singular series F(X, omega; d), computed by direct enumeration of
/// {k_i >= 1 : sum k_i N_i = d} (independent of the generating-series route).
GrElement local_singular_series(const ResolutionData& res, const std::map<int, int>& mu, int d);

/// Serre invariant mod (L-1): sum over singletons with N_i | d.
GrElement serre_invariant(const ResolutionData& res, int d);

/// Serre Poincare series: sum over singletons of [E~_i^o] T^N/(1-T^N),
/// coefficients reduced mod (L-1).
RationalSeries serre_series(const ResolutionData& res);

/// Nearby cycles: limit of -Z(f;T), cross-checked against the closed form
/// sum (1-L)^(|J|-1) [E~_J^o].
GrElement nearby_cycles(const ResolutionData& res);

/// Motivic volume L^-m * nearby_cycles.
GrElement motivic_volume(const ResolutionData& res);

/// Alternating sum over nonempty subsets of an open cover.
GrElement inclusion_exclusion(const std::map<std::vector<int>, GrElement>& pieces,
                              int n_opens);

/// L^-m sum [C] L^-ord_C over weak Neron model components.
GrElement integrate_gauge(const std::vector<std::pair<GrElement, int>>& components,
                          unsigned m);

/// Weil generating series vs zeta comparison:
/// volume_series(res, xi - N) == L^-m Z(f; LT).
bool compare_weil_zeta(const ResolutionData& res);

/// Rational function of T over Q: a rational series with all symbols and L
/// specialized.
struct SpecializedSeries {
  std::vector<Rational> num;                     // T-polynomial
  std::vector<std::pair<Rational, int>> den;     // factors (1 - c T^b)
  std::vector<Rational> expand(int D) const;
  std::string to_string() const;
};

SpecializedSeries specialize_pointcount(const RationalSeries& x, const Rational& q,
                                        const std::map<StratumSymbol, Rational>& symbol_values);

/// Topological zeta function, using the standard literature formula
/// Z_top(s) = sum_J chi(E_J^o) prod 1/(xi_i + s N_i), plus the raw candidate
/// pole multiset {-xi_i/N_i}.
struct TopologicalZeta {
  std::vector<Rational> num;    // polynomial in s
  std::vector<Rational> den;    // polynomial in s
  std::vector<Rational> poles;  // raw multiset over listed divisors
  Rational evaluate(const Rational& s) const;
  std::string to_string() const;
};

TopologicalZeta specialize_topological(const ResolutionData& res);

}  // namespace motivic

#endif
