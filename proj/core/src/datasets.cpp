#include "motivic/datasets.hpp"

namespace motivic::datasets {

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kL = LaurentPoly::lefschetz();
const LaurentPoly kLm1 = kL - kOne;

Stratum stratum(std::vector<int> J, GrElement eq, GrElement naive,
                long long chi, LaurentPoly count) {
  Stratum st;
  st.J = std::move(J);
  st.eq_class = std::move(eq);
  st.naive_class = std::move(naive);
  st.chi = chi;
  st.count_poly = std::move(count);
  return st;
}

}  // namespace

ResolutionData smooth() {
  ResolutionData res;
  res.name = "smooth";
  res.m = 1;
  res.divisors = {{1, 1, 1}};
  res.strata.push_back(stratum({1}, GrElement(StratumSymbol::equivariant({1}, 1)),
                               GrElement(StratumSymbol::naive({1})), 1, kL));
  return res;
}

ResolutionData xy() {
  ResolutionData res;
  res.name = "xy";
  res.m = 1;
  res.divisors = {{1, 1, 1}, {2, 1, 1}};
  const GrElement gm = GrElement::scalar(kLm1);   // [A^1 \ {0}]
  const GrElement pt = GrElement::scalar(kOne);   // a point
  res.strata.push_back(stratum({1}, gm, gm, 0, kLm1));
  res.strata.push_back(stratum({2}, gm, gm, 0, kLm1));
  res.strata.push_back(stratum({1, 2}, pt, pt, 1, kOne));
  return res;
}

ResolutionData xsq() {
  ResolutionData res;
  res.name = "xsq";
  res.m = 1;
  res.divisors = {{1, 2, 1}};
  // E~_1^o = A^1 x mu_2 (regular mu_2-torsor): class L * s with s the torsor
  // symbol; the quotient is E_1^o = A^1.
  res.strata.push_back(stratum({1},
                               gr_scale(kL, GrElement(StratumSymbol::equivariant({1}, 2))),
                               GrElement::scalar(kL), 1, kL));
  return res;
}

ResolutionData cusp() {
  ResolutionData res;
  res.name = "cusp";
  res.m = 1;
  res.divisors = {{1, 2, 2}, {2, 3, 3}, {3, 6, 5}, {4, 1, 1}};
  auto eq = [](std::vector<int> J, int m) {
    return GrElement(StratumSymbol::equivariant(std::move(J), m));
  };
  auto nv = [](std::vector<int> J) { return GrElement(StratumSymbol::naive(std::move(J))); };
  res.strata.push_back(stratum({1}, eq({1}, 2), nv({1}), 1, kL));
  res.strata.push_back(stratum({2}, eq({2}, 3), nv({2}), 1, kL));
  res.strata.push_back(stratum({3}, eq({3}, 6), nv({3}), -1, kL - LaurentPoly(2)));
  res.strata.push_back(stratum({4}, eq({4}, 1), nv({4}), 0, kLm1));
  res.strata.push_back(stratum({1, 3}, eq({1, 3}, 2), nv({1, 3}), 1, kOne));
  res.strata.push_back(stratum({2, 3}, eq({2, 3}, 3), nv({2, 3}), 1, kOne));
  res.strata.push_back(stratum({3, 4}, eq({3, 4}, 1), nv({3, 4}), 1, kOne));
  return res;
}

std::vector<ResolutionData> all() { return {smooth(), xy(), xsq(), cusp()}; }

}  // namespace motivic::datasets
