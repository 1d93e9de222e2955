#ifndef MOTIVIC_JETS_HPP
#define MOTIVIC_JETS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/resolution.hpp"

namespace motivic {

/// Arithmetic in F_q[t]/(t^(n+1)) for a prime q, on dense coefficient vectors.
class TruncatedPoly {
 public:
  TruncatedPoly(uint32_t q, int level);  // zero element, coefficients 0..level

  uint32_t q() const { return q_; }
  int level() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<uint32_t>& coeffs() const { return coeffs_; }
  uint32_t& operator[](size_t i) { return coeffs_[i]; }
  uint32_t operator[](size_t i) const { return coeffs_[i]; }

  /// Index of the first nonzero coefficient; level+1 if zero.
  int ord() const;

  TruncatedPoly& operator+=(const TruncatedPoly& o);
  TruncatedPoly& operator-=(const TruncatedPoly& o);
  TruncatedPoly operator*(const TruncatedPoly& o) const;
  TruncatedPoly& scale(uint32_t c);

  /// Substitute t -> c t (the root-of-unity action on jets).
  TruncatedPoly reparametrized(uint32_t c) const;

  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

 private:
  uint32_t q_;
  std::vector<uint32_t> coeffs_;
};

bool is_prime(uint64_t n);

/// Default cap on the number of enumerated jet tuples.
inline constexpr uint64_t kDefaultGuard = 100'000'000;

/// Exact counts of contact loci over F_q at jet level d.
struct JetCounts {
  uint32_t q = 0;
  int d = 0;
  uint64_t count_Xd = 0;   // ord f(psi) = d
  uint64_t count_Xd1 = 0;  // f(psi) = t^d mod t^(d+1)
  std::map<int, uint64_t> per_ord;  // exact contact order -> count; key d+1 = censored
};

/// Exhaustive enumeration of psi in (F_q[t]/(t^(d+1)))^n_vars.
JetCounts count_contact_loci(const IntPolynomial& f, uint32_t q, int d,
                             uint64_t guard = kDefaultGuard, unsigned threads = 0);

struct MuActionReport {
  JetCounts counts;
  std::vector<uint32_t> roots;       // F_q-rational d-th roots of unity
  bool action_permutes_Xd1 = false;  // psi(t) -> psi(xi t) stabilizes X_{d,1}
  bool gcd_coprime = false;          // gcd(d, q-1) == 1
  bool scaling_bijection = false;    // then count_Xd == (q-1) count_Xd1
};

/// Verify the mu_d-action on X_{d,1} and the X_d vs X_{d,1} scaling relation.
MuActionReport mu_action_check(const IntPolynomial& f, uint32_t q, int d,
                               uint64_t guard = kDefaultGuard);

struct GreenbergReport {
  std::vector<uint64_t> counts;  // level 0..n
  unsigned bundle_rank = 0;      // m
  bool law_holds = false;        // count(j+1) == q^m count(j) for all j
};

/// Counts of solutions of g = 0 mod t^(j+1) for j = 0..n; g empty means
/// affine space. Smoothness of every counted F_q-point is required.
GreenbergReport count_greenberg(const IntPolynomial& g, int n_vars, uint32_t q, int n,
                                uint64_t guard = kDefaultGuard);

struct OrdJacReport {
  int level = 0;
  uint32_t q = 0;
  std::map<int, uint64_t> sources_per_e;  // ord Jac = e -> #source jets
  std::map<int, uint64_t> images_per_e;   // e -> #distinct images from pure-e jets
  uint64_t censored_sources = 0;          // ord Jac not determined at this level
  uint64_t excluded_images = 0;           // mixed-order or e > n/2 images
  bool fibers_verified = false;           // every pure-e image (e <= n/2) has fiber q^e
};

/// Fiber structure of a two-variable polynomial map on jets: groups level-n
/// jets by image under h = (h1, h2) and checks the q^e fiber law on strata of
/// constant Jacobian order e <= n/2.
OrdJacReport ordjac_counts(const IntPolynomial& h1, const IntPolynomial& h2, uint32_t q,
                           int level, uint64_t guard = kDefaultGuard);

struct CrosscheckRow {
  int d = 0;
  uint64_t enumerated = 0;
  Rational predicted;  // q^((m+1)d) * specialized series coefficient
  bool match = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> equivariant;  // X_{d,1} vs Z(f;T)
  std::vector<CrosscheckRow> naive;        // X_d vs Z^naive(f;T)
  bool all_match = true;
};

/// Brute-force counts vs specialized symbolic coefficients, d = 1..D.
/// Equivariant rows are checked only when every needed symbol has a count
/// (dataset count_poly data extended by `extra_counts`).
CrosscheckReport crosscheck_series(const ResolutionData& res, const IntPolynomial& f,
                                   uint32_t q, int D,
                                   const std::map<StratumSymbol, Rational>& extra_counts = {},
                                   uint64_t guard = kDefaultGuard);

}  // namespace motivic

#endif
