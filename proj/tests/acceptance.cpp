// Acceptance gate: twelve exact checks, one pass/fail line each.
// Usage: acceptance <data-dir>   (defaults to ./data)

#include <iostream>
#include <vector>

#include "motivic/datasets.hpp"
#include "motivic/jets.hpp"
#include "motivic/series.hpp"

using namespace motivic;

namespace {

const LaurentPoly L = LaurentPoly::lefschetz();
int failures = 0;

void report(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << n << ": " << what << "\n";
  if (!ok) ++failures;
}

uint64_t ipow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// 1. Blow-up invariance of Z on xy and cusp over every eligible center, plus
// the hand identity u^2/(1-u^2) + 2u^3/((1-u)(1-u^2)) = u^2/(1-u)^2 at u = L^-1 T.
bool criterion_blowup(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    if (res.name != "xy" && res.name != "cusp") continue;
    for (const auto& J : eligible_centers(res)) {
      const ResolutionData up = blowup(res, J);
      if (!rs_equal(zeta_equivariant(res), zeta_equivariant(up))) return false;
      if (!rs_equal(zeta_naive(res), zeta_naive(up))) return false;
    }
  }
  // u = L^-1 T: u^2/(1-u^2) is generator(-2,2); u^3/((1-u)(1-u^2)) is
  // generator(-3,3) with an extra (1-L^-1 T) denominator folded in; the right
  // side is generator(-2,2) with a squared (1-L^-1 T) denominator.
  const GrElement u2 = GrElement::scalar(LaurentPoly::lefschetz(-2));
  const GrElement two_u3 = GrElement::scalar(LaurentPoly::monomial(2, -3));
  const RationalSeries lhs =
      RationalSeries::from_parts({GrElement(), GrElement(), u2}, {{DenFactor{-2, 2}, 1}}) +
      RationalSeries::from_parts({GrElement(), GrElement(), GrElement(), two_u3},
                                 {{DenFactor{-1, 1}, 1}, {DenFactor{-2, 2}, 1}});
  const RationalSeries rhs =
      RationalSeries::from_parts({GrElement(), GrElement(), u2}, {{DenFactor{-1, 1}, 2}});
  if (!rs_equal(lhs, rhs)) return false;
  // The same identity as produced by the engine: the equivariant zeta of the
  // blown-up xy dataset is term-wise the left side, the original the right.
  const ResolutionData* xy = nullptr;
  for (const auto& res : data)
    if (res.name == "xy") xy = &res;
  return xy && rs_equal(zeta_equivariant(*xy), zeta_equivariant(blowup(*xy, {1, 2})));
}

// 2. compare_weil_zeta on all datasets (mu_i = xi_i - N_i internally).
bool criterion_comparison(const std::vector<ResolutionData>& data) {
  for (const auto& res : data)
    if (!compare_weil_zeta(res)) return false;
  return true;
}

// 3. Nearby cycles: limit of -Z equals the closed form, invariant under blow-ups.
bool criterion_nearby(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    GrElement direct;
    for (const auto& st : res.strata)
      direct += gr_scale((LaurentPoly(1) - L).pow(static_cast<unsigned>(st.J.size() - 1)),
                         st.eq_class);
    if (limit_T_infinity(-zeta_equivariant(res)) != direct) return false;
    for (const auto& J : eligible_centers(res))
      if (nearby_cycles(blowup(res, J)) != nearby_cycles(res)) return false;
  }
  return true;
}

// 4. Quotient identity Z^naive == (L-1) forget(Z).
bool criterion_quotient(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    const RationalSeries z = zeta_equivariant(res);
    const auto quotients = quotient_table(res);
    std::vector<GrElement> num;
    for (const auto& c : z.numerator()) num.push_back(gr_forget(c, quotients));
    const RationalSeries forgotten = RationalSeries::from_parts(num, z.denominator());
    if (!rs_equal(zeta_naive(res), forgotten.scaled(L - 1))) return false;
  }
  return true;
}

// 5. Series/per-degree agreement for the mu test matrix, d <= 12.
bool criterion_volume(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    std::vector<std::map<int, int>> matrix(3);
    for (const auto& d : res.divisors) {
      matrix[0][d.id] = d.xi - d.N;
      matrix[1][d.id] = d.xi;
      matrix[2][d.id] = 1 - d.N;  // a negative-order gauge form
    }
    for (const auto& mu : matrix) {
      const auto coeffs = expand(volume_series(res, mu), 12);
      for (int d = 1; d <= 12; ++d)
        if (coeffs[d] != local_singular_series(res, mu, d)) return false;
    }
  }
  return true;
}

// 6. Serre consistency: divisibility sum == mod-(L-1) shadow of L^m F(d).
bool criterion_serre(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    std::map<int, int> mu;
    for (const auto& d : res.divisors) mu[d.id] = d.xi - d.N;
    const LaurentPoly lm = LaurentPoly::lefschetz(static_cast<int>(res.m));
    for (int d = 1; d <= 12; ++d) {
      GrElement filtered;
      for (const auto& st : res.strata)
        if (st.J.size() == 1 && d % res.find_divisor(st.J[0])->N == 0)
          filtered += st.eq_class;
      if (serre_invariant(res, d) != gr_reduce(filtered, Modulus::LMinusOne)) return false;
      if (serre_invariant(res, d) !=
          gr_reduce(gr_scale(lm, local_singular_series(res, mu, d)), Modulus::LMinusOne))
        return false;
    }
  }
  return true;
}

// 7. Jet oracle, normal crossing: f = xy, q in {3,5}, d <= 4.
bool criterion_jets_xy(const ResolutionData& xy) {
  const IntPolynomial f = IntPolynomial::parse("x*y");
  for (uint32_t q : {3u, 5u})
    if (!crosscheck_series(xy, f, q, 4).all_match) return false;
  if (count_contact_loci(f, 3, 1).count_Xd1 != 12) return false;
  if (count_contact_loci(f, 5, 1).count_Xd1 != 40) return false;
  return true;
}

// 8. Jet oracle, non-reduced fiber: f = x^2, q in {3,5,7}.
bool criterion_jets_xsq(const ResolutionData& xsq) {
  const IntPolynomial f = IntPolynomial::parse("x^2", 2);
  const std::map<StratumSymbol, Rational> torsor{
      {StratumSymbol::equivariant({1}, 2), Rational(2)}};
  for (uint32_t q : {3u, 5u, 7u}) {
    if (count_contact_loci(f, q, 1).count_Xd1 != 0) return false;
    if (count_contact_loci(f, q, 2).count_Xd1 != 2 * ipow(q, 4)) return false;
    if (!crosscheck_series(xsq, f, q, 2, torsor).all_match) return false;
  }
  return true;
}

// 9. Jet oracle, cusp: naive counts match for q=5 d<=4 and q=7 d<=3.
bool criterion_jets_cusp(const ResolutionData& cusp) {
  const IntPolynomial f = IntPolynomial::parse("x^2+y^3");
  if (!crosscheck_series(cusp, f, 5, 4).all_match) return false;
  if (!crosscheck_series(cusp, f, 7, 3).all_match) return false;
  return count_contact_loci(f, 7, 1).count_Xd == 252;
}

// 10. Greenberg truncation law for x^2+y^2+z^2-1 over F_3 and F_5.
bool criterion_greenberg() {
  const IntPolynomial g = IntPolynomial::parse("x^2+y^2+z^2-1");
  for (uint32_t q : {3u, 5u}) {
    const int n = q == 3 ? 2 : 1;  // j <= 1 in both cases; F_3 also checks j=1->2
    const auto rep = count_greenberg(g, 3, q, n);
    if (!rep.law_holds) return false;
    for (size_t j = 0; j + 1 < rep.counts.size(); ++j)
      if (rep.counts[j + 1] != ipow(q, 2) * rep.counts[j]) return false;
  }
  return true;
}

// 11. Change-of-variables counting for h = (x, xy), n = 2, q = 3.
bool criterion_changevar() {
  const auto rep =
      ordjac_counts(IntPolynomial::parse("x", 2), IntPolynomial::parse("x*y"), 3, 2);
  if (!rep.fibers_verified) return false;
  // Every e = 1 image has fiber exactly 3; identity on the e <= 1 strata.
  for (int e = 0; e <= 1; ++e) {
    if (!rep.images_per_e.count(e)) return false;
    if (rep.sources_per_e.at(e) != ipow(3, e) * rep.images_per_e.at(e)) return false;
  }
  return true;
}

// 12. Reduced special fiber mod L is a blow-up invariant (xy: -1 * unit).
bool criterion_fiber(const std::vector<ResolutionData>& data) {
  for (const auto& res : data) {
    const GrElement before = gr_reduce(reduced_fiber_class(res), Modulus::L);
    if (res.name == "xy" && before != GrElement::scalar(LaurentPoly(-1))) return false;
    for (const auto& J : eligible_centers(res))
      if (gr_reduce(reduced_fiber_class(blowup(res, J)), Modulus::L) != before) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  std::vector<ResolutionData> data;
  for (const char* name : {"smooth", "xy", "xsq", "cusp"})
    data.push_back(load_resolution(dir + "/" + name + ".json"));
  const ResolutionData &xy = data[1], &xsq = data[2], &cusp = data[3];

  try {
    report(1, "blow-up invariance of Z (xy, cusp) + hand identity", criterion_blowup(data));
    report(2, "comparison theorem S = L^-m Z(f;LT)", criterion_comparison(data));
    report(3, "nearby cycles limit == closed form, blow-up invariant", criterion_nearby(data));
    report(4, "quotient identity Z^naive == (L-1) forget(Z)", criterion_quotient(data));
    report(5, "volume series coefficients == singular series, d <= 12", criterion_volume(data));
    report(6, "Serre invariant: filtered sum == mod (L-1) shadow", criterion_serre(data));
    report(7, "jet oracle xy: #X_d,1 matches, spot 12 / 40", criterion_jets_xy(xy));
    report(8, "jet oracle x^2: #X_1,1 = 0, #X_2,1 = 2q^4", criterion_jets_xsq(xsq));
    report(9, "jet oracle cusp: naive counts match, #X_1(F_7) = 252", criterion_jets_cusp(cusp));
    report(10, "Greenberg truncation law q^2 per level", criterion_greenberg());
    report(11, "change-of-variables fiber law for (x, xy)", criterion_changevar());
    report(12, "reduced fiber mod L blow-up invariant, xy -> -1", criterion_fiber(data));
  } catch (const std::exception& e) {
    std::cout << "FAIL exception: " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
