#ifndef MOTIVIC_RESOLUTION_HPP
#define MOTIVIC_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "motivic/grring.hpp"

namespace motivic {

/// Component E_i of the SNC special fiber, with multiplicity N_i and
/// log-discrepancy xi_i (relative canonical divisor sum (xi_i - 1) E_i).
struct Divisor {
  int id = 0;
  int N = 1;
  int xi = 1;
};

/// A nonempty stratum E_J^o with its equivariant cover class, naive class,
/// and optional point-count / Euler data.
struct Stratum {
  std::vector<int> J;       // sorted divisor ids
  GrElement eq_class;       // [E~_J^o]
  GrElement naive_class;    // [E_J^o]
  std::optional<long long> chi;
  std::optional<LaurentPoly> count_poly;  // #E_J^o(F_q) as a polynomial in L
};

/// Combinatorics of an embedded resolution with SNC special fiber.
struct ResolutionData {
  std::string name;
  unsigned m = 0;  // relative dimension (ambient dimension m+1)
  std::vector<Divisor> divisors;
  std::vector<Stratum> strata;

  const Divisor* find_divisor(int id) const;
  const Stratum* find_stratum(const std::vector<int>& J) const;
};

/// All invariant violations; empty iff valid.
std::vector<std::string> validate(const ResolutionData& res);

/// m_J = gcd{N_i : i in J}. Empty J or unknown id raises InvalidStratum.
int stratum_gcd(const ResolutionData& res, const std::vector<int>& J);

struct X0LinearWitness {
  std::vector<int> J;
  std::vector<int> alpha;  // alpha_j >= 1 with sum alpha_j N_j = d
};

/// True iff d = sum alpha_j N_j for some listed stratum J with |J| > 1 and
/// integers alpha_j >= 1.
std::optional<X0LinearWitness> is_X0_linear(const ResolutionData& res, int d);

/// Formal blow-up with center E_J (|J| >= 2, E_J^o listed): exceptional
/// divisor gets a fresh id with N_0 = sum N_j and xi_0 = sum xi_j; strata
/// containing J are replaced by K u {0} strata carrying
/// (L-1)^(|J\K|-1) * class(J u K).
ResolutionData blowup(const ResolutionData& res, const std::vector<int>& J);

/// Class of the reduced special fiber: sum of the listed naive classes.
GrElement reduced_fiber_class(const ResolutionData& res);

/// Centers eligible for blowup: every listed J with |J| >= 2.
std::vector<std::vector<int>> eligible_centers(const ResolutionData& res);

/// Quotient declarations derived from the (eq_class, naive_class) pairs of
/// the dataset: an equivariant symbol s maps to t when replacing s by t in
/// eq_class yields naive_class.
QuotientTable quotient_table(const ResolutionData& res);

/// Symbol point-count assignment derived from count_poly at L = q: naive
/// stratum symbols get their stratum count, the unit gets 1. `extra` entries
/// override/extend (used for equivariant covers whose counts are not naive
/// stratum counts).
std::map<StratumSymbol, Rational> symbol_counts(
    const ResolutionData& res, const Rational& q,
    const std::map<StratumSymbol, Rational>& extra = {});

/// JSON dataset file I/O. Unknown keys are rejected; load refuses invalid
/// datasets (diagnostics in the exception message).
ResolutionData load_resolution(const std::string& path);
ResolutionData parse_resolution(const std::string& json_text);
std::string resolution_to_json(const ResolutionData& res);

}  // namespace motivic

#endif
