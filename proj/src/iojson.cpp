#include "hibi/iojson.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace hibi {

namespace {
constexpr long long kSafe = (1LL << 53) - 1;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json json_int(long long v) {
  if (v >= -kSafe && v <= kSafe) return Json(v);
  return Json(std::to_string(v));
}

Json json_bigint(const BigInt& v) {
  if (v >= -kSafe && v <= kSafe) return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json json_rational(const Rational& q) { return Json(to_fraction_string(q)); }

Rational fraction_from_string(const std::string& s) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + s);
    std::size_t k = part[0] == '-' ? 1 : 0;
    if (k == part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k])))
        throw std::invalid_argument("malformed rational: " + s);
    return BigInt(part);
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num) / Rational(den);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::spec: return "spec";
    case Family::maxspec: return "maxspec";
    case Family::ht: return "ht";
  }
  throw std::logic_error("unreachable family");
}

Family family_from_name(const std::string& s) {
  if (s == "spec") return Family::spec;
  if (s == "maxspec") return Family::maxspec;
  if (s == "ht") return Family::ht;
  throw std::invalid_argument("unknown family: " + s);
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    index[labels[i]] = i;
  auto resolve = [&](const Json& x) {
    if (x.is_string()) {
      auto it = index.find(x.get<std::string>());
      if (it == index.end())
        throw std::invalid_argument("unknown element in cover: " +
                                    x.get<std::string>());
      return it->second;
    }
    return x.get<int>();
  };
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("a cover must be a pair");
    covers.emplace_back(resolve(c[0]), resolve(c[1]));
  }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = Json::array();
  for (int e = 0; e < p.size(); ++e) j["elements"].push_back(p.label(e));
  j["covers"] = Json::array();
  for (int e = 0; e < p.size(); ++e)
    for (int u : p.upper_covers(e))
      j["covers"].push_back(Json::array({p.label(e), p.label(u)}));
  return j;
}

Json lattice_to_json(const DistributiveLattice& l) {
  Json j;
  j["elements"] = Json::array();
  for (int e = 0; e < l.size(); ++e) j["elements"].push_back(l.label(e));
  j["joinIrreducibles"] = Json::array();
  for (int e : l.irreducibles()) j["joinIrreducibles"].push_back(l.label(e));
  j["covers"] = Json::array();
  for (auto [lo, hi] : l.cover_pairs())
    j["covers"].push_back(Json::array({l.label(lo), l.label(hi)}));
  return j;
}

Json chain_to_json(const DistributiveLattice& l, const Chain& c) {
  Json a = Json::array();
  for (int e : c) a.push_back(l.label(e));
  return a;
}

Json hibi_ideal_to_json(const DistributiveLattice& l) {
  Json a = Json::array();
  for (const HibiRelation& r : hibi_ideal_generators(l)) {
    Json g;
    g["pair"] = Json::array({l.label(r.a), l.label(r.b)});
    g["join"] = l.label(r.join);
    g["meet"] = l.label(r.meet);
    a.push_back(std::move(g));
  }
  return a;
}

Json standard_basis_to_json(const DistributiveLattice& l, int degree) {
  Json a = Json::array();
  for (const StandardMonomial& m : standard_basis(l, degree)) {
    Json f = Json::array();
    for (int e : m.factors) f.push_back(l.label(e));
    a.push_back(std::move(f));
  }
  return a;
}

Json value_to_json(const ValueVector& v) {
  Json a = Json::array();
  for (long long x : v.v) a.push_back(json_int(x));
  return a;
}

Json quasi_to_json(const DistributiveLattice& l, Family f,
                   const QuasiResult& r) {
  Json j;
  j["family"] = family_name(f);
  j["value"] = value_to_json(r.value);
  j["argminChains"] = Json::array();
  for (const Chain& c : r.argmin)
    j["argminChains"].push_back(chain_to_json(l, c));
  return j;
}

Json straightening_entry_to_json(const GrassmannLattice& gl,
                                 const StraighteningEntry& e) {
  const DistributiveLattice& l = gl.lattice;
  Json j;
  j["pair"] = Json::array({l.label(e.i1), l.label(e.i2)});
  j["terms"] = Json::array();
  for (const StraighteningTerm& t : e.terms) {
    Json term;
    term["k1"] = l.label(t.k1);
    term["k2"] = l.label(t.k2);
    term["coeff"] = json_rational(t.coeff);
    j["terms"].push_back(std::move(term));
  }
  return j;
}

Json straightening_table_to_json(const GrassmannLattice& gl,
                                 const StraighteningTable& t) {
  Json a = Json::array();
  for (const StraighteningEntry& e : t.entries)
    a.push_back(straightening_entry_to_json(gl, e));
  return a;
}

Json governed_to_json(const GrassmannLattice& gl, const GovernedReport& r) {
  const DistributiveLattice& l = gl.lattice;
  auto label_or_null = [&](int e) {
    return e < 0 ? Json() : Json(l.label(e));
  };
  Json j;
  j["status"] = r.pass ? "pass" : "fail";
  j["basisIndependent"] = r.basis_ok;
  j["pairs"] = Json::array();
  for (const GovernedPairReport& pr : r.pairs) {
    Json p;
    p["pair"] = Json::array({l.label(pr.i1), l.label(pr.i2)});
    p["status"] = pr.pass ? "pass" : "fail";
    p["leadingTerm"] = pr.leading_ok;
    p["witnesses"] = Json::array();
    for (const GovernedTermReport& tr : pr.terms) {
      Json t;
      t["term"] = Json::array({l.label(tr.k1), l.label(tr.k2)});
      t["status"] = tr.pass ? "pass" : "fail";
      t["cases"] = Json::array();
      for (const GovernedCase& gc : tr.cases) {
        Json c;
        c["m1"] = label_or_null(gc.m1);
        c["m2"] = label_or_null(gc.m2);
        c["rule"] = gc.rule;
        c["h"] = label_or_null(gc.h);
        c["hprime"] = label_or_null(gc.hprime);
        t["cases"].push_back(std::move(c));
      }
      p["witnesses"].push_back(std::move(t));
    }
    j["pairs"].push_back(std::move(p));
  }
  return j;
}

Json polytope_to_json(const RationalPolytope& p,
                      const std::vector<std::vector<long long>>& lattice_pts) {
  Json j;
  j["ambientDim"] = p.dim();
  j["vrep"] = Json::array();
  for (const RVector& v : p.vertices()) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      row.push_back(json_rational(v(i)));
    j["vrep"].push_back(std::move(row));
  }
  j["hrep"] = Json::array();
  for (const HalfSpace& h : p.halfspaces()) {
    Json row;
    row["normal"] = Json::array();
    for (Eigen::Index i = 0; i < h.normal.size(); ++i)
      row["normal"].push_back(json_rational(h.normal(i)));
    row["rhs"] = json_rational(h.rhs);
    j["hrep"].push_back(std::move(row));
  }
  j["latticePoints"] = Json::array();
  for (const auto& pt : lattice_pts) {
    Json row = Json::array();
    for (long long x : pt) row.push_back(json_int(x));
    j["latticePoints"].push_back(std::move(row));
  }
  return j;
}

Json triangulation_to_json(const DistributiveLattice& l,
                           const std::vector<Simplex>& simplices) {
  Json j;
  j["count"] = json_int(static_cast<long long>(simplices.size()));
  Json dict = Json::object();
  Rational total = 0;
  Rational mfact = 1;
  for (int k = 2; k <= l.rank(); ++k) mfact *= k;
  for (const Simplex& s : simplices) {
    std::string key;
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
      if (i) key += "-";
      key += l.label(s.chain[i]);
    }
    Json entry;
    entry["vertices"] = Json::array();
    for (const RVector& v : s.verts) {
      Json row = Json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i)
        row.push_back(json_rational(v(i)));
      entry["vertices"].push_back(std::move(row));
    }
    Rational det = simplex_det(s);
    entry["det"] = json_rational(det);
    total += det / mfact;
    dict[key] = std::move(entry);
  }
  j["simplices"] = std::move(dict);
  j["volume"] = json_rational(total);
  return j;
}

}  // namespace hibi
