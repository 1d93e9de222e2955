#include "motivic/jets.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "motivic/series.hpp"

namespace motivic {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

TruncatedPoly::TruncatedPoly(uint32_t q, int level) : q_(q), coeffs_(level + 1, 0) {
  if (level < 0) throw Error(Errc::InvalidArgument, "negative truncation level");
}

int TruncatedPoly::ord() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return static_cast<int>(coeffs_.size());
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
    if (coeffs_[i] >= q_) coeffs_[i] -= q_;
  }
  return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& o) {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + q_ - o.coeffs_[i]) % q_;
  }
  return *this;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  TruncatedPoly r(q_, level());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < coeffs_.size(); ++j) {
      r.coeffs_[i + j] =
          (r.coeffs_[i + j] + static_cast<uint64_t>(coeffs_[i]) * o.coeffs_[j]) % q_;
    }
  }
  return r;
}

TruncatedPoly& TruncatedPoly::scale(uint32_t c) {
  for (auto& x : coeffs_) x = static_cast<uint32_t>((static_cast<uint64_t>(x) * c) % q_);
  return *this;
}

TruncatedPoly TruncatedPoly::reparametrized(uint32_t c) const {
  TruncatedPoly r(q_, level());
  uint64_t pw = 1;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    r.coeffs_[i] = static_cast<uint32_t>((coeffs_[i] * pw) % q_);
    pw = (pw * c) % q_;
  }
  return r;
}

namespace {

struct ReducedPoly {
  struct Term {
    uint32_t c;
    std::vector<int> exps;
  };
  int n_vars = 0;
  std::vector<Term> terms;
  std::vector<int> max_exp;  // per variable

  static ReducedPoly reduce(const IntPolynomial& f, uint32_t q) {
    ReducedPoly r;
    r.n_vars = f.n_vars;
    r.max_exp.assign(f.n_vars, 0);
    for (const auto& t : f.terms) {
      Integer c = t.coeff % q;
      if (c < 0) c += q;
      if (c == 0) continue;
      r.terms.push_back({static_cast<uint32_t>(c), t.exps});
      for (int v = 0; v < f.n_vars; ++v) r.max_exp[v] = std::max(r.max_exp[v], t.exps[v]);
    }
    return r;
  }
};

TruncatedPoly eval(const ReducedPoly& f, const std::vector<TruncatedPoly>& psi,
                   uint32_t q, int level) {
  // Powers of each coordinate up to the needed exponent.
  std::vector<std::vector<TruncatedPoly>> pows(f.n_vars);
  for (int v = 0; v < f.n_vars; ++v) {
    pows[v].reserve(f.max_exp[v] + 1);
    TruncatedPoly one(q, level);
    one[0] = 1;
    pows[v].push_back(one);
    for (int e = 1; e <= f.max_exp[v]; ++e) pows[v].push_back(pows[v].back() * psi[v]);
  }
  TruncatedPoly acc(q, level);
  for (const auto& t : f.terms) {
    TruncatedPoly prod(q, level);
    prod[0] = t.c;
    for (int v = 0; v < f.n_vars; ++v)
      if (t.exps[v] > 0) prod = prod * pows[v][t.exps[v]];
    acc += prod;
  }
  return acc;
}

uint64_t ipow(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

void check_guard(uint32_t q, int n_vars, int level, uint64_t guard) {
  if (!is_prime(q)) throw Error(Errc::InvalidField, std::to_string(q) + " is not prime");
  const uint64_t coeffs = static_cast<uint64_t>(n_vars) * (level + 1);
  uint64_t total = 1;
  for (uint64_t i = 0; i < coeffs; ++i) {
    if (total > guard / q)
      throw Error(Errc::TooLarge, "enumeration exceeds guard of " + std::to_string(guard));
    total *= q;
  }
}

/// Visit every jet tuple with psi[0][0] fixed to `first`. The visitor sees
/// the tuple and its odometer index within the block.
template <class Fn>
void for_each_jet_block(uint32_t q, int n_vars, int level, uint32_t first, Fn&& fn) {
  const int ncoef = n_vars * (level + 1);
  std::vector<TruncatedPoly> psi(n_vars, TruncatedPoly(q, level));
  psi[0][0] = first;
  uint64_t index = 0;
  while (true) {
    fn(psi, index);
    ++index;
    int pos = 1;  // position 0 is the fixed block coordinate
    while (pos < ncoef) {
      uint32_t& c = psi[pos / (level + 1)][pos % (level + 1)];
      if (++c < q) break;
      c = 0;
      ++pos;
    }
    if (pos == ncoef) return;
  }
}

unsigned pick_threads(unsigned requested, uint32_t q, uint64_t per_block_work) {
  if (requested == 1) return 1;
  if (per_block_work < 10'000) return 1;  // not worth spawning
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned t = requested == 0 ? hw : requested;
  return std::min<unsigned>(t, q);
}

}  // namespace

JetCounts count_contact_loci(const IntPolynomial& f, uint32_t q, int d, uint64_t guard,
                             unsigned threads) {
  if (d < 1) throw Error(Errc::InvalidArgument, "d must be positive");
  if (f.n_vars < 1) throw Error(Errc::InvalidArgument, "no variables");
  check_guard(q, f.n_vars, d, guard);
  const ReducedPoly rf = ReducedPoly::reduce(f, q);
  const uint64_t per_block = ipow(q, static_cast<uint64_t>(f.n_vars) * (d + 1) - 1);

  std::vector<JetCounts> partial(q);
  auto run_block = [&](uint32_t first) {
    JetCounts& jc = partial[first];
    jc.q = q;
    jc.d = d;
    for_each_jet_block(q, f.n_vars, d, first, [&](const std::vector<TruncatedPoly>& psi, uint64_t) {
      TruncatedPoly value = eval(rf, psi, q, d);
      const int o = value.ord();
      jc.per_ord[o] += 1;
      if (o == d && value[d] == 1) jc.count_Xd1 += 1;
    });
  };

  const unsigned t = pick_threads(threads, q, per_block);
  if (t <= 1) {
    for (uint32_t v = 0; v < q; ++v) run_block(v);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
      pool.emplace_back([&, w] {
        for (uint32_t v = w; v < q; v += t) run_block(v);
      });
    for (auto& th : pool) th.join();
  }

  JetCounts total;
  total.q = q;
  total.d = d;
  for (uint32_t v = 0; v < q; ++v) {
    total.count_Xd1 += partial[v].count_Xd1;
    for (const auto& [o, n] : partial[v].per_ord) total.per_ord[o] += n;
  }
  total.count_Xd = total.per_ord.count(d) ? total.per_ord.at(d) : 0;
  return total;
}

MuActionReport mu_action_check(const IntPolynomial& f, uint32_t q, int d, uint64_t guard) {
  if (d < 1) throw Error(Errc::InvalidArgument, "d must be positive");
  check_guard(q, f.n_vars, d, guard);
  MuActionReport rep;
  rep.counts = count_contact_loci(f, q, d, guard, 1);

  for (uint32_t xi = 1; xi < q; ++xi) {
    uint64_t pw = 1;
    for (int k = 0; k < d; ++k) pw = (pw * xi) % q;
    if (pw == 1) rep.roots.push_back(xi);
  }

  const ReducedPoly rf = ReducedPoly::reduce(f, q);
  // Collect X_{d,1} as encoded odometer keys for membership checks.
  const int level = d;
  std::unordered_set<uint64_t> members;
  std::vector<std::vector<TruncatedPoly>> member_jets;
  auto encode = [&](const std::vector<TruncatedPoly>& psi) {
    uint64_t key = 0;
    for (int v = f.n_vars - 1; v >= 0; --v)
      for (int i = level; i >= 0; --i) key = key * q + psi[v][i];
    return key;
  };
  for (uint32_t first = 0; first < q; ++first)
    for_each_jet_block(q, f.n_vars, level, first, [&](const std::vector<TruncatedPoly>& psi, uint64_t) {
      TruncatedPoly value = eval(rf, psi, q, level);
      if (value.ord() == d && value[d] == 1) {
        members.insert(encode(psi));
        member_jets.push_back(psi);
      }
    });

  rep.action_permutes_Xd1 = true;
  for (const auto& psi : member_jets) {
    for (uint32_t xi : rep.roots) {
      std::vector<TruncatedPoly> mapped;
      mapped.reserve(psi.size());
      for (const auto& p : psi) mapped.push_back(p.reparametrized(xi));
      if (!members.count(encode(mapped))) {
        rep.action_permutes_Xd1 = false;
        break;
      }
    }
    if (!rep.action_permutes_Xd1) break;
  }

  rep.gcd_coprime = std::gcd(static_cast<uint64_t>(d), static_cast<uint64_t>(q - 1)) == 1;
  rep.scaling_bijection =
      !rep.gcd_coprime ||
      rep.counts.count_Xd == static_cast<uint64_t>(q - 1) * rep.counts.count_Xd1;
  return rep;
}

GreenbergReport count_greenberg(const IntPolynomial& g, int n_vars, uint32_t q, int n,
                                uint64_t guard) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative level");
  if (!g.is_zero() && g.n_vars > n_vars)
    throw Error(Errc::InvalidArgument, "equation uses more variables than declared");
  check_guard(q, n_vars, n, guard);
  GreenbergReport rep;
  rep.bundle_rank = static_cast<unsigned>(g.is_zero() ? n_vars : n_vars - 1);

  if (g.is_zero()) {
    for (int j = 0; j <= n; ++j)
      rep.counts.push_back(ipow(q, static_cast<uint64_t>(n_vars) * (j + 1)));
  } else {
    IntPolynomial gw = g;
    gw.n_vars = n_vars;
    for (auto& t : gw.terms) t.exps.resize(n_vars, 0);
    const ReducedPoly rg = ReducedPoly::reduce(gw, q);
    std::vector<ReducedPoly> grads;
    for (int v = 0; v < n_vars; ++v) grads.push_back(ReducedPoly::reduce(gw.derivative(v), q));
    for (int j = 0; j <= n; ++j) {
      uint64_t count = 0;
      for (uint32_t first = 0; first < q; ++first)
        for_each_jet_block(q, n_vars, j, first, [&](const std::vector<TruncatedPoly>& psi, uint64_t) {
          TruncatedPoly value = eval(rg, psi, q, j);
          if (value.ord() <= j) return;
          if (j == 0) {
            bool smooth = false;
            for (int v = 0; v < n_vars && !smooth; ++v)
              if (eval(grads[v], psi, q, 0)[0] != 0) smooth = true;
            if (!smooth)
              throw Error(Errc::NotSmooth, "singular F_q-point on the hypersurface");
          }
          ++count;
        });
      rep.counts.push_back(count);
    }
  }

  rep.law_holds = true;
  const uint64_t ratio = ipow(q, rep.bundle_rank);
  for (size_t j = 0; j + 1 < rep.counts.size(); ++j)
    if (rep.counts[j + 1] != ratio * rep.counts[j]) rep.law_holds = false;
  return rep;
}

OrdJacReport ordjac_counts(const IntPolynomial& h1, const IntPolynomial& h2, uint32_t q,
                           int level, uint64_t guard) {
  if (h1.n_vars > 2 || h2.n_vars > 2)
    throw Error(Errc::InvalidArgument, "ordjac_counts handles two-variable maps");
  check_guard(q, 2, level, guard);

  auto widen2 = [](IntPolynomial p) {
    p.n_vars = 2;
    for (auto& t : p.terms) t.exps.resize(2, 0);
    return p;
  };
  const IntPolynomial a = widen2(h1), b = widen2(h2);
  // Jac = da/dx db/dy - da/dy db/dx.
  IntPolynomial jac = IntPolynomial::parse(
      "(" + a.derivative(0).to_string() + ")*(" + b.derivative(1).to_string() + ")-(" +
          a.derivative(1).to_string() + ")*(" + b.derivative(0).to_string() + ")",
      2);
  if (jac.is_zero())
    throw Error(Errc::InvalidArgument, "map has identically vanishing Jacobian");

  const ReducedPoly ra = ReducedPoly::reduce(a, q);
  const ReducedPoly rb = ReducedPoly::reduce(b, q);
  const ReducedPoly rj = ReducedPoly::reduce(jac, q);

  OrdJacReport rep;
  rep.level = level;
  rep.q = q;

  struct ImageData {
    std::map<int, uint64_t> per_e;
  };
  std::unordered_map<uint64_t, ImageData> images;
  auto encode = [&](const TruncatedPoly& u, const TruncatedPoly& v) {
    uint64_t key = 0;
    for (int i = level; i >= 0; --i) key = key * q + u[i];
    for (int i = level; i >= 0; --i) key = key * q + v[i];
    return key;
  };

  for (uint32_t first = 0; first < q; ++first)
    for_each_jet_block(q, 2, level, first, [&](const std::vector<TruncatedPoly>& psi, uint64_t) {
      const int e = eval(rj, psi, q, level).ord();
      if (e > level) {
        rep.censored_sources += 1;
        return;
      }
      TruncatedPoly u = eval(ra, psi, q, level);
      TruncatedPoly v = eval(rb, psi, q, level);
      images[encode(u, v)].per_e[e] += 1;
    });

  rep.fibers_verified = true;
  for (const auto& [key, data] : images) {
    if (data.per_e.size() != 1) {
      rep.excluded_images += 1;
      continue;
    }
    const auto [e, fiber] = *data.per_e.begin();
    if (2 * e > level) {
      rep.excluded_images += 1;
      continue;
    }
    rep.images_per_e[e] += 1;
    rep.sources_per_e[e] += fiber;
    if (fiber != ipow(q, e)) rep.fibers_verified = false;
  }
  // Counting form of the change-of-variables identity on the pure strata.
  for (const auto& [e, n_images] : rep.images_per_e)
    if (rep.sources_per_e[e] != ipow(q, e) * n_images) rep.fibers_verified = false;
  return rep;
}

CrosscheckReport crosscheck_series(const ResolutionData& res, const IntPolynomial& f,
                                   uint32_t q, int D,
                                   const std::map<StratumSymbol, Rational>& extra_counts,
                                   uint64_t guard) {
  if (D < 1) throw Error(Errc::InvalidArgument, "D must be positive");
  const auto values = symbol_counts(res, Rational(q), extra_counts);
  const RationalSeries z_eq = zeta_equivariant(res);
  const RationalSeries z_nv = zeta_naive(res);
  const auto eq_coeffs = expand(z_eq, D);
  const auto nv_coeffs = expand(z_nv, D);

  auto have_values = [&](const GrElement& g) {
    for (const auto& [s, c] : g.terms())
      if (!values.count(s)) return false;
    return true;
  };
  bool eq_ok = true;
  for (int d = 1; d <= D; ++d) eq_ok = eq_ok && have_values(eq_coeffs[d]);
  for (int d = 1; d <= D; ++d)
    if (!have_values(nv_coeffs[d]))
      throw Error(Errc::IncompleteData, "missing naive point counts for degree " +
                                            std::to_string(d));

  CrosscheckReport rep;
  const Rational Q(q);
  for (int d = 1; d <= D; ++d) {
    const JetCounts counts = count_contact_loci(f, q, d, guard);
    Rational scale = 1;
    for (unsigned i = 0; i < (res.m + 1) * static_cast<unsigned>(d); ++i) scale *= Q;
    if (eq_ok) {
      CrosscheckRow row;
      row.d = d;
      row.enumerated = counts.count_Xd1;
      row.predicted = scale * gr_specialize(eq_coeffs[d], Q, values);
      row.match = Rational(row.enumerated) == row.predicted;
      rep.all_match = rep.all_match && row.match;
      rep.equivariant.push_back(row);
    }
    CrosscheckRow row;
    row.d = d;
    row.enumerated = counts.count_Xd;
    row.predicted = scale * gr_specialize(nv_coeffs[d], Q, values);
    row.match = Rational(row.enumerated) == row.predicted;
    rep.all_match = rep.all_match && row.match;
    rep.naive.push_back(row);
  }
  return rep;
}

}  // namespace motivic
