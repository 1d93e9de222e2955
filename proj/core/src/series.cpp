#include "motivic/series.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace motivic {

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kL = LaurentPoly::lefschetz();
const LaurentPoly kLm1 = kL - kOne;

using GrPoly = std::vector<GrElement>;       // T-polynomial, GrElement coefficients
using ScalarPoly = std::vector<LaurentPoly>;  // T-polynomial, Laurent coefficients

void trim_poly(GrPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GrPoly mul(const GrPoly& p, const ScalarPoly& q) {
  if (p.empty() || q.empty()) return {};
  GrPoly out(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j)
      out[i + j] += gr_scale(q[j], p[i]);
  trim_poly(out);
  return out;
}

/// Expanded polynomial of a denominator factor multiset.
ScalarPoly den_poly(const std::map<DenFactor, int>& den) {
  ScalarPoly out{kOne};
  for (const auto& [f, mult] : den) {
    for (int k = 0; k < mult; ++k) {
      ScalarPoly next(out.size() + f.b);
      const LaurentPoly La = LaurentPoly::lefschetz(f.a);
      for (size_t i = 0; i < out.size(); ++i) {
        next[i] += out[i];
        next[i + f.b] -= La * out[i];
      }
      out = std::move(next);
    }
  }
  return out;
}

/// Exact division of p by (1 - L^a T^b); nullopt if not divisible.
std::optional<GrPoly> try_divide(const GrPoly& p, const DenFactor& f) {
  if (p.empty()) return GrPoly{};
  const int D = static_cast<int>(p.size()) - 1;
  if (D < f.b) return std::nullopt;
  const LaurentPoly La = LaurentPoly::lefschetz(f.a);
  // p = q (1 - L^a T^b)  =>  q[i] = p[i] + L^a q[i-b].
  GrPoly q(p.size());
  for (int i = 0; i <= D; ++i) {
    q[i] = p[i];
    if (i >= f.b) q[i] += gr_scale(La, q[i - f.b]);
  }
  for (int i = D - f.b + 1; i <= D; ++i)
    if (!q[i].is_zero()) return std::nullopt;
  q.resize(D - f.b + 1);
  trim_poly(q);
  return q;
}

}  // namespace

RationalSeries::RationalSeries(GrElement constant) {
  if (!constant.is_zero()) num_.push_back(std::move(constant));
}

RationalSeries RationalSeries::generator(int a, int b) {
  if (b < 1) throw Error(Errc::InvalidArgument, "generator needs b >= 1");
  RationalSeries r;
  r.num_.assign(b + 1, GrElement());
  r.num_[b] = GrElement::scalar(LaurentPoly::lefschetz(a));
  r.den_[DenFactor{a, b}] = 1;
  return r;
}

void RationalSeries::trim() { trim_poly(num_); }

RationalSeries RationalSeries::from_parts(std::vector<GrElement> num,
                                          std::map<DenFactor, int> den) {
  RationalSeries r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  for (const auto& [f, m] : r.den_)
    if (f.b < 1 || m < 0) throw Error(Errc::InvalidArgument, "bad denominator factor");
  std::erase_if(r.den_, [](const auto& kv) { return kv.second == 0; });
  r.trim();
  if (r.num_.empty()) r.den_.clear();
  return r;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  // Least common denominator by factor-wise max multiplicity.
  std::map<DenFactor, int> lcm = den_;
  for (const auto& [f, m] : o.den_) lcm[f] = std::max(lcm[f], m);
  std::map<DenFactor, int> extra_this, extra_other;
  for (const auto& [f, m] : lcm) {
    auto it = den_.find(f);
    int have = it == den_.end() ? 0 : it->second;
    if (m > have) extra_this[f] = m - have;
    auto ot = o.den_.find(f);
    have = ot == o.den_.end() ? 0 : ot->second;
    if (m > have) extra_other[f] = m - have;
  }
  GrPoly a = mul(num_, den_poly(extra_this));
  GrPoly b = mul(o.num_, den_poly(extra_other));
  if (b.size() > a.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim_poly(a);
  num_ = std::move(a);
  den_ = std::move(lcm);
  if (num_.empty()) den_.clear();
  return *this;
}

RationalSeries RationalSeries::scaled(const GrElement& c) const {
  RationalSeries r = *this;
  for (auto& coeff : r.num_) {
    GrElement out;
    for (const auto& [s, lp] : c.terms()) {
      if (!s.is_unit())
        throw Error(Errc::InvalidArgument,
                    "scaling by non-unit symbols would form symbol products");
      out += gr_scale(lp, coeff);
    }
    coeff = out;
  }
  r.trim();
  if (r.num_.empty()) r.den_.clear();
  return r;
}

RationalSeries RationalSeries::scaled(const LaurentPoly& c) const {
  RationalSeries r = *this;
  for (auto& coeff : r.num_) coeff = gr_scale(c, coeff);
  r.trim();
  if (r.num_.empty()) r.den_.clear();
  return r;
}

RationalSeries RationalSeries::times_generator(int a, int b) const {
  if (b < 1) throw Error(Errc::InvalidArgument, "generator needs b >= 1");
  RationalSeries r;
  r.num_.assign(num_.size() + b, GrElement());
  const LaurentPoly La = LaurentPoly::lefschetz(a);
  for (size_t i = 0; i < num_.size(); ++i) r.num_[i + b] = gr_scale(La, num_[i]);
  r.den_ = den_;
  r.den_[DenFactor{a, b}] += 1;
  r.trim();
  if (r.num_.empty()) r.den_.clear();
  return r;
}

void RationalSeries::normalize() {
  trim();
  if (num_.empty()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = try_divide(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

bool rs_equal(const RationalSeries& x, const RationalSeries& y) {
  GrPoly a = mul(x.numerator(), den_poly(y.denominator()));
  GrPoly b = mul(y.numerator(), den_poly(x.denominator()));
  return a == b;
}

std::vector<GrElement> expand(const RationalSeries& x, int D) {
  if (D < 0) throw Error(Errc::InvalidArgument, "negative expansion order");
  std::vector<GrElement> out(D + 1);
  const auto& num = x.numerator();
  for (size_t i = 0; i < num.size() && i <= static_cast<size_t>(D); ++i) out[i] = num[i];
  for (const auto& [f, mult] : x.denominator()) {
    const LaurentPoly La = LaurentPoly::lefschetz(f.a);
    for (int k = 0; k < mult; ++k)
      for (int i = f.b; i <= D; ++i) out[i] += gr_scale(La, out[i - f.b]);
  }
  return out;
}

RationalSeries substitute_scaled(const RationalSeries& x, int k) {
  std::vector<GrElement> num = x.numerator();
  for (size_t j = 0; j < num.size(); ++j)
    num[j] = gr_scale(LaurentPoly::lefschetz(k * static_cast<int>(j)), num[j]);
  std::map<DenFactor, int> den;
  for (const auto& [f, m] : x.denominator()) den[DenFactor{f.a + k * f.b, f.b}] += m;
  return RationalSeries::from_parts(std::move(num), std::move(den));
}

GrElement limit_T_infinity(const RationalSeries& x) {
  RationalSeries r = x;
  r.normalize();
  if (r.is_zero()) return GrElement();
  const int degN = static_cast<int>(r.numerator().size()) - 1;
  int sum_b = 0, sum_a = 0, factors = 0;
  for (const auto& [f, m] : r.denominator()) {
    sum_b += f.b * m;
    sum_a += f.a * m;
    factors += m;
  }
  if (degN > sum_b)
    throw Error(Errc::NoLimit, "numerator T-degree exceeds denominator T-degree");
  if (degN < sum_b) return GrElement();
  LaurentPoly scale = LaurentPoly::lefschetz(-sum_a);
  if (factors % 2 != 0) scale = -scale;
  return gr_scale(scale, r.numerator().back());
}

namespace {

RationalSeries stratum_sum(const ResolutionData& res,
                           const std::function<GrElement(const Stratum&)>& cls,
                           const std::function<int(const Divisor&)>& exponent,
                           int extra_Lm1_power) {
  RationalSeries sum;
  for (const auto& st : res.strata) {
    GrElement c = cls(st);
    const unsigned pw = static_cast<unsigned>(static_cast<int>(st.J.size()) - 1 + extra_Lm1_power);
    RationalSeries term = RationalSeries(c).scaled(kLm1.pow(pw));
    for (int id : st.J) {
      const Divisor* d = res.find_divisor(id);
      term = term.times_generator(exponent(*d), d->N);
    }
    sum += term;
  }
  sum.normalize();
  return sum;
}

}  // namespace

RationalSeries zeta_equivariant(const ResolutionData& res) {
  return stratum_sum(
      res, [](const Stratum& st) { return st.eq_class; },
      [](const Divisor& d) { return -d.xi; }, 0);
}

RationalSeries zeta_naive(const ResolutionData& res) {
  for (const auto& st : res.strata)
    if (st.naive_class.is_zero())
      throw Error(Errc::IncompleteData, "stratum without naive class");
  return stratum_sum(
      res, [](const Stratum& st) { return st.naive_class; },
      [](const Divisor& d) { return -d.xi; }, 1);
}

RationalSeries volume_series(const ResolutionData& res, const std::map<int, int>& mu) {
  for (const auto& d : res.divisors)
    if (!mu.count(d.id))
      throw Error(Errc::IncompleteData, "missing mu for divisor " + std::to_string(d.id));
  RationalSeries s = stratum_sum(
      res, [](const Stratum& st) { return st.eq_class; },
      [&mu](const Divisor& d) { return -mu.at(d.id); }, 0);
  return s.scaled(LaurentPoly::lefschetz(-static_cast<int>(res.m)));
}

GrElement local_singular_series(const ResolutionData& res, const std::map<int, int>& mu,
                                int d) {
  for (const auto& dv : res.divisors)
    if (!mu.count(dv.id))
      throw Error(Errc::IncompleteData, "missing mu for divisor " + std::to_string(dv.id));
  GrElement sum;
  for (const auto& st : res.strata) {
    std::vector<int> Ns, mus;
    for (int id : st.J) {
      Ns.push_back(res.find_divisor(id)->N);
      mus.push_back(mu.at(id));
    }
    LaurentPoly inner;  // sum over {k_i >= 1 : sum k_i N_i = d} of L^{-sum k_i mu_i}
    auto dfs = [&](auto&& self, size_t k, int rest, int mu_acc) -> void {
      if (k == Ns.size()) {
        if (rest == 0) inner += LaurentPoly::lefschetz(-mu_acc);
        return;
      }
      for (int a = 1; a * Ns[k] <= rest; ++a)
        self(self, k + 1, rest - a * Ns[k], mu_acc + a * mus[k]);
    };
    dfs(dfs, 0, d, 0);
    if (inner.is_zero()) continue;
    sum += gr_scale(kLm1.pow(static_cast<unsigned>(st.J.size() - 1)) * inner, st.eq_class);
  }
  return gr_scale(LaurentPoly::lefschetz(-static_cast<int>(res.m)), sum);
}

GrElement serre_invariant(const ResolutionData& res, int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "d must be positive");
  GrElement sum;
  for (const auto& st : res.strata) {
    if (st.J.size() != 1) continue;
    if (d % res.find_divisor(st.J[0])->N == 0) sum += st.eq_class;
  }
  return gr_reduce(sum, Modulus::LMinusOne);
}

RationalSeries serre_series(const ResolutionData& res) {
  RationalSeries sum;
  for (const auto& st : res.strata) {
    if (st.J.size() != 1) continue;
    RationalSeries term(gr_reduce(st.eq_class, Modulus::LMinusOne));
    sum += term.times_generator(0, res.find_divisor(st.J[0])->N);
  }
  sum.normalize();
  return sum;
}

GrElement nearby_cycles(const ResolutionData& res) {
  GrElement lim = limit_T_infinity(-zeta_equivariant(res));
  GrElement direct;
  const LaurentPoly oneMinusL = kOne - kL;
  for (const auto& st : res.strata)
    direct += gr_scale(oneMinusL.pow(static_cast<unsigned>(st.J.size() - 1)), st.eq_class);
  if (lim != direct)
    throw Error(Errc::InvalidArgument,
                "nearby-cycles cross-check failed: limit disagrees with closed form");
  return lim;
}

GrElement motivic_volume(const ResolutionData& res) {
  return gr_scale(LaurentPoly::lefschetz(-static_cast<int>(res.m)), nearby_cycles(res));
}

GrElement inclusion_exclusion(const std::map<std::vector<int>, GrElement>& pieces,
                              int n_opens) {
  if (n_opens < 1 || n_opens > 20)
    throw Error(Errc::InvalidArgument, "cover size out of range");
  GrElement sum;
  for (unsigned mask = 1; mask < (1u << n_opens); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n_opens; ++i)
      if (mask & (1u << i)) subset.push_back(i + 1);
    auto it = pieces.find(subset);
    if (it == pieces.end())
      throw Error(Errc::IncompleteData,
                  "missing cover piece " + StratumSymbol::naive(subset).name());
    if (subset.size() % 2 == 1)
      sum += it->second;
    else
      sum -= it->second;
  }
  return sum;
}

GrElement integrate_gauge(const std::vector<std::pair<GrElement, int>>& components,
                          unsigned m) {
  GrElement sum;
  for (const auto& [cls, ord] : components) sum += gr_scale(LaurentPoly::lefschetz(-ord), cls);
  return gr_scale(LaurentPoly::lefschetz(-static_cast<int>(m)), sum);
}

bool compare_weil_zeta(const ResolutionData& res) {
  std::map<int, int> mu;
  for (const auto& d : res.divisors) mu[d.id] = d.xi - d.N;
  RationalSeries lhs = volume_series(res, mu);
  RationalSeries rhs = substitute_scaled(zeta_equivariant(res), 1)
                           .scaled(LaurentPoly::lefschetz(-static_cast<int>(res.m)));
  return rs_equal(lhs, rhs);
}

SpecializedSeries specialize_pointcount(const RationalSeries& x, const Rational& q,
                                        const std::map<StratumSymbol, Rational>& symbol_values) {
  if (q == 0) throw Error(Errc::InvalidArgument, "q must be nonzero");
  SpecializedSeries out;
  for (const auto& c : x.numerator()) out.num.push_back(gr_specialize(c, q, symbol_values));
  while (!out.num.empty() && out.num.back() == 0) out.num.pop_back();
  for (const auto& [f, mult] : x.denominator()) {
    Rational c = LaurentPoly::lefschetz(f.a).evaluate(q);
    for (int k = 0; k < mult; ++k) out.den.emplace_back(c, f.b);
  }
  return out;
}

std::vector<Rational> SpecializedSeries::expand(int D) const {
  std::vector<Rational> out(D + 1, Rational(0));
  for (size_t i = 0; i < num.size() && i <= static_cast<size_t>(D); ++i) out[i] = num[i];
  for (const auto& [c, b] : den)
    for (int i = b; i <= D; ++i) out[i] += c * out[i - b];
  return out;
}

std::string SpecializedSeries::to_string() const {
  std::ostringstream os;
  os << "(";
  if (num.empty()) os << "0";
  for (size_t j = 0; j < num.size(); ++j) {
    if (j) os << " + ";
    os << num[j] << "*T^" << j;
  }
  os << ")";
  for (const auto& [c, b] : den) os << " / (1 - " << c << "*T^" << b << ")";
  return os.str();
}

namespace {

// Dense polynomials in one variable over Q, for the topological zeta function.
using QPoly = std::vector<Rational>;

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly qp_add(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Rational qp_eval(const QPoly& p, const Rational& s) {
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * s + p[i];
  return v;
}

}  // namespace

Rational TopologicalZeta::evaluate(const Rational& s) const {
  Rational d = qp_eval(den, s);
  if (d == 0) throw Error(Errc::PoleAtZero, "evaluation at a pole");
  return qp_eval(num, s) / d;
}

std::string TopologicalZeta::to_string() const {
  auto poly = [](const QPoly& p) {
    if (p.empty()) return std::string("0");
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) os << " + ";
      os << p[i] << "*s^" << i;
    }
    return os.str();
  };
  return "(" + poly(num) + ") / (" + poly(den) + ")";
}

TopologicalZeta specialize_topological(const ResolutionData& res) {
  std::set<int> support;
  for (const auto& st : res.strata) {
    if (!st.chi)
      throw Error(Errc::IncompleteData, "stratum without Euler characteristic");
    for (int id : st.J) support.insert(id);
  }
  TopologicalZeta out;
  out.den = {Rational(1)};
  std::map<int, QPoly> linear;  // id -> (xi + s N)
  for (int id : support) {
    const Divisor* d = res.find_divisor(id);
    linear[id] = {Rational(d->xi), Rational(d->N)};
    out.den = qp_mul(out.den, linear[id]);
  }
  out.num = {};
  for (const auto& st : res.strata) {
    QPoly term = {Rational(*st.chi)};
    for (int id : support)
      if (!std::binary_search(st.J.begin(), st.J.end(), id))
        term = qp_mul(term, linear[id]);
    out.num = qp_add(out.num, term);
  }
  for (const auto& d : res.divisors)
    out.poles.emplace_back(Rational(-d.xi) / Rational(d.N));
  return out;
}

std::string RationalSeries::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << num_[j].to_string() << "]";
    if (j > 0) os << "*T^" << j;
  }
  os << ")";
  for (const auto& [f, m] : den_) {
    os << " / (1 - ";
    if (f.a != 0) os << "L^" << f.a << " ";
    os << "T^" << f.b << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

std::string RationalSeries::to_latex() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  os << "\\frac{";
  bool first = true;
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << num_[j].to_string() << "\\right)";
    if (j == 1) os << "T";
    if (j > 1) os << "T^{" << j << "}";
  }
  os << "}{";
  if (den_.empty()) os << "1";
  for (const auto& [f, m] : den_) {
    os << "\\left(1 - ";
    if (f.a != 0) os << "\\mathbb{L}^{" << f.a << "}";
    os << "T^{" << f.b << "}\\right)";
    if (m > 1) os << "^{" << m << "}";
  }
  os << "}";
  return os.str();
}

}  // namespace motivic
