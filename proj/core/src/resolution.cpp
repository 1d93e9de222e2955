#include "motivic/resolution.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace motivic {

namespace {

bool is_sorted_unique(const std::vector<int>& J) {
  return std::adjacent_find(J.begin(), J.end(),
                            [](int a, int b) { return a >= b; }) == J.end();
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<StratumSymbol> equivariant_symbols(const GrElement& g) {
  std::vector<StratumSymbol> out;
  for (const auto& [s, c] : g.terms())
    if (s.flavor == Flavor::Equivariant) out.push_back(s);
  return out;
}

}  // namespace

const Divisor* ResolutionData::find_divisor(int id) const {
  for (const auto& d : divisors)
    if (d.id == id) return &d;
  return nullptr;
}

const Stratum* ResolutionData::find_stratum(const std::vector<int>& J) const {
  for (const auto& s : strata)
    if (s.J == J) return &s;
  return nullptr;
}

int stratum_gcd(const ResolutionData& res, const std::vector<int>& J) {
  if (J.empty()) throw Error(Errc::InvalidStratum, "empty index set");
  int g = 0;
  for (int id : J) {
    const Divisor* d = res.find_divisor(id);
    if (!d) throw Error(Errc::InvalidStratum, "unknown divisor id " + std::to_string(id));
    g = std::gcd(g, d->N);
  }
  return g;
}

std::vector<std::string> validate(const ResolutionData& res) {
  std::vector<std::string> diag;
  std::set<int> ids;
  for (const auto& d : res.divisors) {
    if (!ids.insert(d.id).second)
      diag.push_back("DuplicateDivisor{" + std::to_string(d.id) + "}");
    if (d.N < 1) diag.push_back("InvalidMultiplicity{" + std::to_string(d.id) + "}");
    if (d.xi < 1) diag.push_back("InvalidDiscrepancy{" + std::to_string(d.id) + "}");
  }
  std::set<std::vector<int>> seen;
  for (const auto& st : res.strata) {
    std::string jname = StratumSymbol::naive(st.J).name();
    if (st.J.empty()) {
      diag.push_back("EmptyStratum");
      continue;
    }
    if (!is_sorted_unique(st.J)) diag.push_back("UnsortedStratum" + jname);
    bool ok = true;
    for (int id : st.J)
      if (!ids.count(id)) {
        diag.push_back("UnknownDivisor{" + std::to_string(id) + "}");
        ok = false;
      }
    if (!ok) continue;
    if (!seen.insert(st.J).second) diag.push_back("DuplicateStratum" + jname);
    const int mJ = stratum_gcd(res, st.J);
    // A symbol naming this stratum's own cover must carry m_J. Reused symbols
    // (blow-up transports keep the source symbol's identity) are exempt.
    for (const auto& [sym, c] : st.eq_class.terms()) {
      if (sym.flavor == Flavor::Equivariant && sym.index_set == st.J &&
          sym.action_label != mJ)
        diag.push_back("LabelMismatch" + jname);
    }
    for (const auto& [sym, c] : st.naive_class.terms()) {
      if (sym.flavor != Flavor::Naive)
        diag.push_back("EquivariantSymbolInNaiveClass" + jname);
    }
    // Quotient consistency, where a declaration is derivable.
    auto eqs = equivariant_symbols(st.eq_class);
    if (eqs.size() == 1) {
      bool found = false;
      for (const auto& [t, c] : st.naive_class.terms())
        if (gr_substitute(st.eq_class, eqs[0], t) == st.naive_class) found = true;
      if (!found) diag.push_back("QuotientUnderivable" + jname);
    }
  }
  return diag;
}

std::optional<X0LinearWitness> is_X0_linear(const ResolutionData& res, int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "d must be positive");
  for (const auto& st : res.strata) {
    if (st.J.size() < 2) continue;
    std::vector<int> Ns;
    for (int id : st.J) Ns.push_back(res.find_divisor(id)->N);
    std::vector<int> alpha(Ns.size(), 0);
    // Bounded DFS over alpha_j in [1, d/N_j].
    auto dfs = [&](auto&& self, size_t k, int rest) -> bool {
      if (k == Ns.size()) return rest == 0;
      for (int a = 1; a * Ns[k] <= rest; ++a) {
        alpha[k] = a;
        if (self(self, k + 1, rest - a * Ns[k])) return true;
      }
      return false;
    };
    if (dfs(dfs, 0, d)) return X0LinearWitness{st.J, alpha};
  }
  return std::nullopt;
}

std::vector<std::vector<int>> eligible_centers(const ResolutionData& res) {
  std::vector<std::vector<int>> out;
  for (const auto& st : res.strata)
    if (st.J.size() >= 2) out.push_back(st.J);
  return out;
}

ResolutionData blowup(const ResolutionData& res, const std::vector<int>& J_in) {
  std::vector<int> J = J_in;
  std::sort(J.begin(), J.end());
  if (J.size() < 2) throw Error(Errc::CenterTooSmall, "blow-up center needs |J| >= 2");
  const Stratum* center = res.find_stratum(J);
  if (!center) throw Error(Errc::EmptyCenter, "stratum E_J^o not listed");

  // Smallest unused nonnegative id for the exceptional divisor (conventionally
  // 0, but iterated blow-ups need a fresh id).
  std::set<int> used;
  for (const auto& d : res.divisors) used.insert(d.id);
  int id0 = 0;
  while (used.count(id0)) ++id0;

  int N0 = 0, xi0 = 0;
  for (int id : J) {
    const Divisor* d = res.find_divisor(id);
    if (!d) throw Error(Errc::InvalidStratum, "unknown divisor id " + std::to_string(id));
    N0 += d->N;
    xi0 += d->xi;
  }

  ResolutionData out;
  out.name = res.name + "+bl" + StratumSymbol::naive(J).name().substr(1);
  out.m = res.m;
  out.divisors = res.divisors;
  out.divisors.push_back(Divisor{id0, N0, xi0});

  const LaurentPoly Lm1 = LaurentPoly::lefschetz() - LaurentPoly(1);

  // Strict transforms: strata not containing the center survive unchanged.
  for (const auto& st : res.strata)
    if (!subset(J, st.J)) out.strata.push_back(st);

  // New strata on the exceptional divisor: for each listed S >= J and each
  // proper subset T of J, the stratum (S \ J) u T u {0} carries
  // (L-1)^(|J|-|T|-1) times the class of S.
  for (const auto& st : res.strata) {
    if (!subset(J, st.J)) continue;
    const auto& S = st.J;
    const size_t nj = J.size();
    for (unsigned mask = 0; mask + 1 < (1u << nj); ++mask) {
      std::vector<int> K;
      for (int id : S)
        if (!std::binary_search(J.begin(), J.end(), id)) K.push_back(id);
      size_t tsize = 0;
      for (size_t b = 0; b < nj; ++b)
        if (mask & (1u << b)) {
          K.push_back(J[b]);
          ++tsize;
        }
      K.push_back(id0);
      std::sort(K.begin(), K.end());
      const unsigned excess = static_cast<unsigned>(nj - tsize - 1);  // |J\K| - 1
      const LaurentPoly factor = Lm1.pow(excess);
      Stratum ns;
      ns.J = K;
      ns.eq_class = gr_scale(factor, st.eq_class);
      ns.naive_class = gr_scale(factor, st.naive_class);
      if (st.chi) ns.chi = (excess == 0) ? st.chi : std::optional<long long>(0);
      if (st.count_poly) ns.count_poly = factor * *st.count_poly;
      // Lemma invariant: m_{J u K} divides m_{K u {0}}.
      if (stratum_gcd(out, ns.J) % stratum_gcd(res, S) != 0)
        throw Error(Errc::InvalidStratum, "gcd divisibility violated in blow-up");
      out.strata.push_back(std::move(ns));
    }
  }
  return out;
}

GrElement reduced_fiber_class(const ResolutionData& res) {
  GrElement sum;
  for (const auto& st : res.strata) {
    if (st.naive_class.is_zero() && !st.eq_class.is_zero())
      throw Error(Errc::IncompleteData, "stratum without naive class");
    sum += st.naive_class;
  }
  return sum;
}

QuotientTable quotient_table(const ResolutionData& res) {
  QuotientTable table;
  for (const auto& st : res.strata) {
    auto eqs = equivariant_symbols(st.eq_class);
    if (eqs.empty()) continue;
    if (eqs.size() == 1) {
      for (const auto& [t, c] : st.naive_class.terms()) {
        if (gr_substitute(st.eq_class, eqs[0], t) == st.naive_class) {
          table.emplace(eqs[0], t);
          break;
        }
      }
    } else {
      // Fall back to the structural partner for each symbol.
      GrElement subst = st.eq_class;
      for (const auto& s : eqs)
        subst = gr_substitute(subst, s, StratumSymbol::naive(s.index_set));
      if (subst == st.naive_class)
        for (const auto& s : eqs) table.emplace(s, StratumSymbol::naive(s.index_set));
    }
  }
  return table;
}

std::map<StratumSymbol, Rational> symbol_counts(
    const ResolutionData& res, const Rational& q,
    const std::map<StratumSymbol, Rational>& extra) {
  std::map<StratumSymbol, Rational> values;
  values[StratumSymbol::unit()] = 1;
  for (const auto& st : res.strata) {
    if (!st.count_poly) continue;
    const Rational count = st.count_poly->evaluate(q);
    const auto& nt = st.naive_class.terms();
    if (nt.size() == 1 && !nt.begin()->first.is_unit() &&
        nt.begin()->second == LaurentPoly(1)) {
      values[nt.begin()->first] = count;
      // Trivial cover: the equivariant symbol has the same count.
      const auto& et = st.eq_class.terms();
      if (et.size() == 1 && et.begin()->first.flavor == Flavor::Equivariant &&
          et.begin()->first.action_label == 1 && et.begin()->second == LaurentPoly(1))
        values[et.begin()->first] = count;
    }
  }
  for (const auto& [s, v] : extra) values[s] = v;
  return values;
}

// ---------------------------------------------------------------------------
// JSON dataset format

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> keys,
                    const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys)
      if (k == key) known = true;
    if (!known) throw Error(Errc::ParseError, "unknown key '" + k + "' in " + where);
  }
}

}  // namespace

ResolutionData parse_resolution(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  reject_unknown(j, {"name", "m", "divisors", "strata"}, "dataset");
  ResolutionData res;
  res.name = j.at("name").get<std::string>();
  res.m = j.at("m").get<unsigned>();
  for (const auto& dj : j.at("divisors")) {
    reject_unknown(dj, {"id", "N", "xi"}, "divisor");
    res.divisors.push_back(
        Divisor{dj.at("id").get<int>(), dj.at("N").get<int>(), dj.at("xi").get<int>()});
  }
  for (const auto& sj : j.at("strata")) {
    reject_unknown(sj, {"J", "eq_class", "naive_class", "chi", "count_poly"}, "stratum");
    Stratum st;
    st.J = sj.at("J").get<std::vector<int>>();
    st.eq_class = GrElement::parse(sj.at("eq_class").get<std::string>());
    st.naive_class = GrElement::parse(sj.at("naive_class").get<std::string>());
    if (sj.contains("chi")) st.chi = sj.at("chi").get<long long>();
    if (sj.contains("count_poly"))
      st.count_poly = LaurentPoly::parse(sj.at("count_poly").get<std::string>());
    res.strata.push_back(std::move(st));
  }
  auto diag = validate(res);
  if (!diag.empty()) {
    std::string msg = "invalid dataset '" + res.name + "':";
    for (const auto& d : diag) msg += " " + d;
    throw Error(Errc::InvalidArgument, msg);
  }
  return res;
}

ResolutionData load_resolution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_resolution(ss.str());
}

std::string resolution_to_json(const ResolutionData& res) {
  json j;
  j["name"] = res.name;
  j["m"] = res.m;
  j["divisors"] = json::array();
  for (const auto& d : res.divisors)
    j["divisors"].push_back({{"id", d.id}, {"N", d.N}, {"xi", d.xi}});
  j["strata"] = json::array();
  for (const auto& st : res.strata) {
    json sj;
    sj["J"] = st.J;
    sj["eq_class"] = st.eq_class.to_string();
    sj["naive_class"] = st.naive_class.to_string();
    if (st.chi) sj["chi"] = *st.chi;
    if (st.count_poly) sj["count_poly"] = st.count_poly->to_string();
    j["strata"].push_back(sj);
  }
  return j.dump(2);
}

}  // namespace motivic
