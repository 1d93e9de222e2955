#include <doctest.h>

#include "motivic/datasets.hpp"

using namespace motivic;

namespace {
const LaurentPoly L = LaurentPoly::lefschetz();
}

TEST_CASE("bundled datasets validate") {
  for (const auto& res : datasets::all()) {
    CAPTURE(res.name);
    CHECK(validate(res).empty());
  }
}

TEST_CASE("validation rejects broken data") {
  ResolutionData res = datasets::xy();
  SUBCASE("duplicate divisor id") {
    res.divisors.push_back({1, 1, 1});
    CHECK(!validate(res).empty());
  }
  SUBCASE("unknown divisor in stratum") {
    res.strata[0].J = {9};
    CHECK(!validate(res).empty());
  }
  SUBCASE("nonpositive multiplicity") {
    res.divisors[0].N = 0;
    CHECK(!validate(res).empty());
  }
  SUBCASE("unsorted index set") {
    res.strata[2].J = {2, 1};
    CHECK(!validate(res).empty());
  }
  SUBCASE("duplicate stratum") {
    res.strata.push_back(res.strata[0]);
    CHECK(!validate(res).empty());
  }
}

TEST_CASE("stratum gcd and X0-linearity") {
  const ResolutionData cusp = datasets::cusp();
  CHECK(stratum_gcd(cusp, {1}) == 2);
  CHECK(stratum_gcd(cusp, {1, 3}) == 2);
  CHECK(stratum_gcd(cusp, {2, 3}) == 3);
  CHECK(stratum_gcd(cusp, {3, 4}) == 1);
  CHECK_THROWS_AS(stratum_gcd(cusp, {}), Error);

  // d is X_0-linear iff some |J|>1 stratum realizes d = sum alpha_j N_j.
  // {1,3}: 2a+6b, {2,3}: 3a+6b, {3,4}: 6a+b.
  CHECK(!is_X0_linear(cusp, 1));
  CHECK(!is_X0_linear(cusp, 2));
  CHECK(is_X0_linear(cusp, 8));   // 2+6
  CHECK(is_X0_linear(cusp, 9));   // 3+6
  CHECK(is_X0_linear(cusp, 7));   // 6+1
  CHECK(!is_X0_linear(cusp, 3));
  const auto w = is_X0_linear(cusp, 8);
  REQUIRE(w.has_value());
  int d = 0;
  for (size_t i = 0; i < w->J.size(); ++i) {
    CHECK(w->alpha[i] >= 1);
    d += w->alpha[i] * cusp.find_divisor(w->J[i])->N;
  }
  CHECK(d == 8);
}

TEST_CASE("eligible centers") {
  CHECK(eligible_centers(datasets::smooth()).empty());
  CHECK(eligible_centers(datasets::xy()) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(eligible_centers(datasets::cusp()).size() == 3);
}

TEST_CASE("blow-up of the xy origin") {
  const ResolutionData res = datasets::xy();
  const ResolutionData up = blowup(res, {1, 2});
  CHECK(validate(up).empty());

  // Fresh exceptional divisor id 0 with N = 1+1, xi = 1+1.
  const Divisor* e0 = up.find_divisor(0);
  REQUIRE(e0 != nullptr);
  CHECK(e0->N == 2);
  CHECK(e0->xi == 2);

  // The old dense point {1,2} is gone; {0}, {0,1}, {0,2} appear.
  CHECK(up.find_stratum({1, 2}) == nullptr);
  REQUIRE(up.find_stratum({0}) != nullptr);
  REQUIRE(up.find_stratum({0, 1}) != nullptr);
  REQUIRE(up.find_stratum({0, 2}) != nullptr);
  // E_0^o = P^1 minus two points: (L-1) * class(point).
  CHECK(up.find_stratum({0})->naive_class == GrElement::scalar(L - 1));
  CHECK(up.find_stratum({0, 1})->naive_class == GrElement::scalar(LaurentPoly(1)));

  CHECK_THROWS_AS(blowup(res, {1}), Error);   // too small
  CHECK_THROWS_AS(blowup(res, {}), Error);    // empty
}

TEST_CASE("blow-up preserves the reduced fiber class mod L") {
  for (const auto& res : datasets::all()) {
    for (const auto& J : eligible_centers(res)) {
      CAPTURE(res.name);
      const ResolutionData up = blowup(res, J);
      CHECK(gr_reduce(reduced_fiber_class(res), Modulus::L) ==
            gr_reduce(reduced_fiber_class(up), Modulus::L));
    }
  }
  // Hand value for xy: (L-1) + (L-1) + 1 = 2L - 1 = -1 mod L.
  CHECK(gr_reduce(reduced_fiber_class(datasets::xy()), Modulus::L) ==
        GrElement::scalar(LaurentPoly(-1)));
}

TEST_CASE("iterated blow-up stays valid") {
  ResolutionData res = datasets::cusp();
  for (int round = 0; round < 2; ++round) {
    const auto centers = eligible_centers(res);
    REQUIRE(!centers.empty());
    res = blowup(res, centers.front());
    CHECK(validate(res).empty());
  }
}

TEST_CASE("quotient table pairs each cover with its base") {
  const auto table = quotient_table(datasets::cusp());
  CHECK(table.at(StratumSymbol::equivariant({1}, 2)) == StratumSymbol::naive({1}));
  CHECK(table.at(StratumSymbol::equivariant({3}, 6)) == StratumSymbol::naive({3}));
  CHECK(table.at(StratumSymbol::equivariant({3, 4}, 1)) == StratumSymbol::naive({3, 4}));
}

TEST_CASE("symbol counts from count_poly") {
  const auto counts = symbol_counts(datasets::cusp(), Rational(7));
  CHECK(counts.at(StratumSymbol::unit()) == 1);
  CHECK(counts.at(StratumSymbol::naive({1})) == 7);
  CHECK(counts.at(StratumSymbol::naive({3})) == 5);
  CHECK(counts.at(StratumSymbol::naive({4})) == 6);
  CHECK(counts.at(StratumSymbol::naive({1, 3})) == 1);
  // Trivial cover (m=1) gets the same count as its base.
  CHECK(counts.at(StratumSymbol::equivariant({4}, 1)) == 6);
  // Overrides.
  const auto with_extra = symbol_counts(
      datasets::xsq(), Rational(5), {{StratumSymbol::equivariant({1}, 2), Rational(2)}});
  CHECK(with_extra.at(StratumSymbol::equivariant({1}, 2)) == 2);
}

TEST_CASE("JSON round-trip") {
  for (const auto& res : datasets::all()) {
    CAPTURE(res.name);
    const ResolutionData back = parse_resolution(resolution_to_json(res));
    CHECK(back.name == res.name);
    CHECK(back.m == res.m);
    REQUIRE(back.strata.size() == res.strata.size());
    for (size_t i = 0; i < res.strata.size(); ++i) {
      CHECK(back.strata[i].J == res.strata[i].J);
      CHECK(back.strata[i].eq_class == res.strata[i].eq_class);
      CHECK(back.strata[i].naive_class == res.strata[i].naive_class);
      CHECK(back.strata[i].chi == res.strata[i].chi);
      CHECK(back.strata[i].count_poly == res.strata[i].count_poly);
    }
  }
}

TEST_CASE("JSON loader rejects unknown keys and invalid data") {
  CHECK_THROWS_AS(parse_resolution(R"({"name":"x","m":1,"divisors":[],"strata":[],"bogus":1})"),
                  Error);
  CHECK_THROWS_AS(parse_resolution("not json"), Error);
  // Stratum referencing a missing divisor fails validation at load time.
  CHECK_THROWS_AS(parse_resolution(R"({"name":"x","m":1,
    "divisors":[{"id":1,"N":1,"xi":1}],
    "strata":[{"J":[2],"eq_class":"E~{2}[m=1]","naive_class":"E{2}"}]})"),
                  Error);
}
