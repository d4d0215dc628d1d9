#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "hibi/chains.hpp"
#include "hibi/iojson.hpp"
#include "hibi/lattice.hpp"
#include "hibi/monomial.hpp"
#include "hibi/plucker.hpp"
#include "hibi/polytope.hpp"
#include "hibi/valuation.hpp"

namespace {

using namespace hibi;

struct Options {
  int d = 0, n = 0;
  std::string poset_file;
  std::string family = "spec";
  std::string chain = "0";
  std::string pair;
  std::string element;
  int index = -1;
  std::string monomial;
  std::string out;
  long long dilation = 1;
  int jobs = 1;
  int degree = -1;
  std::size_t cap_elements = 64;
  std::size_t cap_chains = 100000;
};

void emit(const Options& o, const Json& j) {
  std::string text = dump_json(j);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
  f << text;
}

DistributiveLattice load_lattice(const Options& o) {
  if (!o.poset_file.empty()) {
    std::ifstream f(o.poset_file);
    if (!f)
      throw std::invalid_argument("cannot open poset file: " + o.poset_file);
    Json j = Json::parse(f);
    return DistributiveLattice::ideals_of(poset_from_json(j), o.cap_elements);
  }
  if (o.d <= 0 || o.n <= 0)
    throw std::invalid_argument("need --d and --n, or --poset");
  return build_idn(o.d, o.n, o.cap_elements).lattice;
}

GrassmannLattice load_grassmann(const Options& o) {
  if (!o.poset_file.empty())
    throw std::invalid_argument("this subcommand needs --d/--n, not --poset");
  if (o.d <= 0 || o.n <= 0) throw std::invalid_argument("need --d and --n");
  return build_idn(o.d, o.n, o.cap_elements);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

Chain resolve_chain(const DistributiveLattice& l, const Options& o) {
  const std::string& spec = o.chain;
  if (spec.empty()) throw std::invalid_argument("empty chain selector");
  bool digits = true;
  for (char c : spec)
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
  if (digits) {
    std::size_t idx = std::stoull(spec);
    auto chains = maximal_chains(l, o.cap_chains);
    if (idx >= chains.size())
      throw std::invalid_argument("chain index out of range: " + spec);
    return chains[idx];
  }
  Chain c;
  for (const std::string& lab : split(spec, '-'))
    c.push_back(l.index_of_label(lab));
  if (!is_maximal_chain(l, c))
    throw std::invalid_argument("selector is not a maximal chain: " + spec);
  return c;
}

std::vector<int> resolve_factors(const DistributiveLattice& l,
                                 const Options& o) {
  std::vector<int> factors;
  int sources = (!o.element.empty()) + (o.index >= 0) + (!o.monomial.empty());
  if (sources != 1)
    throw std::invalid_argument(
        "give exactly one of --element, --index, --monomial");
  if (!o.element.empty()) {
    factors.push_back(l.index_of_label(o.element));
  } else if (o.index >= 0) {
    if (o.index >= l.size())
      throw std::invalid_argument("element index out of range");
    factors.push_back(o.index);
  } else {
    for (const std::string& lab : split(o.monomial, ','))
      factors.push_back(l.index_of_label(lab));
  }
  return factors;
}

std::pair<int, int> resolve_pair(const DistributiveLattice& l,
                                 const Options& o) {
  auto parts = split(o.pair, ',');
  if (parts.size() != 2)
    throw std::invalid_argument("--pair wants two comma-separated labels");
  return {l.index_of_label(parts[0]), l.index_of_label(parts[1])};
}

ValueVector value_sum(const ValueVector& a, const ValueVector& b) {
  if (a.tag != b.tag || a.v.size() != b.v.size())
    throw std::invalid_argument("value shapes differ");
  ValueVector s = a;
  for (std::size_t i = 0; i < s.v.size(); ++i) s.v[i] += b.v[i];
  return s;
}

int cmd_lattice(const Options& o) {
  emit(o, lattice_to_json(load_lattice(o)));
  return 0;
}

int cmd_chains(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  auto chains = maximal_chains(l, o.cap_chains);
  Json j;
  j["count"] = json_int(static_cast<long long>(chains.size()));
  j["chains"] = Json::array();
  for (const Chain& c : chains) j["chains"].push_back(chain_to_json(l, c));
  emit(o, j);
  return 0;
}

int cmd_hibi_ideal(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  if (o.degree >= 0)
    emit(o, standard_basis_to_json(l, o.degree));
  else
    emit(o, hibi_ideal_to_json(l));
  return 0;
}

int cmd_valuate(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  Family fam = family_from_name(o.family);
  Chain c = resolve_chain(l, o);
  std::vector<int> factors = resolve_factors(l, o);
  ChainValuation cv = chain_valuation(l, c, fam, OrderTag::revlex);
  ValueVector v = valuate_laurent(cv, xhat_product(l, factors));
  Json j;
  j["family"] = family_name(fam);
  j["chain"] = chain_to_json(l, c);
  j["value"] = value_to_json(v);
  emit(o, j);
  return 0;
}

int cmd_quasi(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  Family fam = family_from_name(o.family);
  std::vector<int> factors = resolve_factors(l, o);
  QuasiResult r =
      quasi_valuation(l, fam, xhat_product(l, factors), OrderTag::revlex,
                      o.jobs, o.cap_chains);
  emit(o, quasi_to_json(l, fam, r));
  return 0;
}

int cmd_straighten(const Options& o) {
  GrassmannLattice gl = load_grassmann(o);
  auto [a, b] = resolve_pair(gl.lattice, o);
  emit(o, straightening_entry_to_json(gl, straighten(gl, a, b)));
  return 0;
}

int cmd_governed(const Options& o) {
  GrassmannLattice gl = load_grassmann(o);
  StraighteningTable table = straightening_table(gl);
  GovernedReport report = governed_check(gl, table);
  emit(o, governed_to_json(gl, report));
  return report.pass ? 0 : 2;
}

int cmd_no_body(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  BodyOnChain body = no_body(l, resolve_chain(l, o));
  emit(o, polytope_to_json(body.polytope,
                           lattice_points(body.polytope, o.dilation)));
  return 0;
}

int cmd_fflv(const Options& o) {
  if (o.d <= 0 || o.n <= 0) throw std::invalid_argument("need --d and --n");
  RationalPolytope p = fflv_polytope(o.d, o.n);
  emit(o, polytope_to_json(p, lattice_points(p, o.dilation)));
  return 0;
}

int cmd_beta(const Options& o) {
  GrassmannLattice gl = load_grassmann(o);
  std::vector<int> factors = resolve_factors(gl.lattice, o);
  if (factors.size() != 1)
    throw std::invalid_argument("beta wants a single element");
  int e = factors[0];
  Json j;
  j["element"] = gl.lattice.label(e);
  j["cells"] = Json::array();
  for (auto [i, jj] : beta_cells(gl, e))
    j["cells"].push_back(Json::array({i, jj}));
  j["chi"] = Json::array();
  for (long long x : beta_chi(gl, e)) j["chi"].push_back(json_int(x));
  emit(o, j);
  return 0;
}

int cmd_triangulate(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  Chain ref = resolve_chain(l, o);
  emit(o, triangulation_to_json(l, triangulate(l, ref, o.cap_chains)));
  return 0;
}

int cmd_transfer(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  Chain ref = resolve_chain(l, o);
  BodyOnChain body = no_body(l, ref);
  const Poset& jp = l.jposet();
  std::vector<int> pos(l.rank());
  for (int i = 0; i < l.rank(); ++i) pos[body.enumeration[i]] = i;
  Json j;
  j["ambientDim"] = l.rank();
  j["table"] = Json::array();
  for (const auto& pt : body.points) {
    RVector x(l.rank());
    for (int i = 0; i < l.rank(); ++i) x(i) = pt[i];
    RVector y = transfer(jp, pos, x);
    Json row;
    row["from"] = Json::array();
    for (long long v : pt) row["from"].push_back(json_int(v));
    row["to"] = Json::array();
    for (int i = 0; i < l.rank(); ++i)
      row["to"].push_back(json_rational(y(i)));
    j["table"].push_back(std::move(row));
  }
  emit(o, j);
  return 0;
}

int cmd_verify(const Options& o) {
  DistributiveLattice l = load_lattice(o);
  Json checks = Json::array();
  bool all_ok = true;
  auto run = [&](const std::string& name, const std::function<bool()>& fn) {
    Json c;
    c["name"] = name;
    try {
      bool ok = fn();
      c["status"] = ok ? "pass" : "fail";
      if (!ok) all_ok = false;
    } catch (const std::exception& ex) {
      c["status"] = "fail";
      c["error"] = ex.what();
      all_ok = false;
    }
    checks.push_back(std::move(c));
  };

  auto chains = maximal_chains(l, o.cap_chains);

  run("chain-count-matches-extension-count", [&] {
    return chains.size() == count_maximal_chains(l);
  });

  run("rewrite-reaches-standard-basis", [&] {
    for (int a = 0; a < l.size(); ++a)
      for (int b = a; b < l.size(); ++b) {
        RewriteResult r = rewrite_to_standard(l, {a, b});
        if (!is_standard(l, r.standard.factors)) return false;
        if (y_product(l, r.standard.factors) != y_product(l, {a, b}))
          return false;
      }
    return true;
  });

  run("standard-monomials-distinct-y-images", [&] {
    for (int deg = 1; deg <= 2; ++deg) {
      auto basis = standard_basis(l, deg);
      std::set<YExp> images;
      for (const StandardMonomial& m : basis)
        images.insert(y_product(l, m.factors));
      if (images.size() != basis.size()) return false;
    }
    return true;
  });

  run("argmin-chains-carry-the-element", [&] {
    for (int e = 0; e < l.size(); ++e) {
      QuasiResult r = quasi_valuation(l, Family::spec, xhat(l, e),
                                      OrderTag::revlex, o.jobs, o.cap_chains);
      std::set<Chain> argmin(r.argmin.begin(), r.argmin.end());
      for (const Chain& c : chains) {
        bool carries = std::find(c.begin(), c.end(), e) != c.end();
        if (carries != (argmin.count(c) > 0)) return false;
      }
    }
    return true;
  });

  run("quasi-valuation-superadditive", [&] {
    for (int a = 0; a < l.size(); ++a)
      for (int b = a; b < l.size(); ++b) {
        QuasiResult va = quasi_valuation(l, Family::spec, xhat(l, a),
                                         OrderTag::revlex, o.jobs, o.cap_chains);
        QuasiResult vb = quasi_valuation(l, Family::spec, xhat(l, b),
                                         OrderTag::revlex, o.jobs, o.cap_chains);
        QuasiResult vab = quasi_valuation(
            l, Family::spec, xhat_product(l, {a, b}), OrderTag::revlex, o.jobs,
            o.cap_chains);
        if (compare(vab.value, value_sum(va.value, vb.value)) < 0) return false;
      }
    return true;
  });

  if (o.poset_file.empty()) {
    GrassmannLattice gl = load_grassmann(o);

    run("support-weight-lemma", [&] {
      auto bottom_wt = weight_of(gl.tuples[gl.lattice.bottom()], gl.n);
      for (int e = 0; e < gl.lattice.size(); ++e) {
        auto lhs = alpha_to_epsilon(omega_alpha(gl, e), gl.n);
        auto wt = weight_of(gl.tuples[e], gl.n);
        for (int i = 0; i < gl.n; ++i)
          if (lhs[i] != wt[i] - bottom_wt[i]) return false;
      }
      return true;
    });

    run("grid-identification-is-order-isomorphism", [&] {
      irreducible_to_root(gl);
      return true;
    });

    run("pairing-map-lands-in-grid-antichains", [&] {
      for (int e = 0; e < gl.lattice.size(); ++e)
        if (e != gl.lattice.bottom()) beta_cells(gl, e);
      return true;
    });

    StraighteningTable table = straightening_table(gl);
    run("straightening-leading-coefficients", [&] {
      for (const auto& entry : table.entries) {
        int jd = gl.lattice.join(entry.i1, entry.i2);
        int md = gl.lattice.meet(entry.i1, entry.i2);
        if (entry.terms.empty() || entry.terms[0].k1 != jd ||
            entry.terms[0].k2 != md || entry.terms[0].coeff != 1)
          return false;
      }
      return true;
    });

    run("straightening-is-governed", [&] {
      return governed_check(gl, table).pass;
    });

    if (l.rank() <= 9 && !chains.empty()) {
      run("body-matches-order-polytope", [&] {
        no_body(l, chains[0]);
        return true;
      });

      run("triangulation-unimodular", [&] {
        auto tri = triangulate(l, chains[0], o.cap_chains);
        if (tri.size() != chains.size()) return false;
        for (const Simplex& s : tri)
          if (simplex_det(s) != 1) return false;
        return true;
      });
    }

    if (l.rank() <= 6 && !chains.empty()) {
      run("triangulation-volume-matches-point-counts", [&] {
        auto tri = triangulate(l, chains[0], o.cap_chains);
        Rational mfact = 1;
        for (int k = 2; k <= l.rank(); ++k) mfact *= k;
        Rational vol = 0;
        for (const Simplex& s : tri) vol += simplex_det(s) / mfact;
        BodyOnChain body = no_body(l, chains[0]);
        auto counts = ehrhart_counts(body.polytope, l.rank());
        auto coeffs = polynomial_fit(counts);
        return coeffs.back() == vol;
      });
    }
  }

  Json j;
  j["status"] = all_ok ? "pass" : "fail";
  j["checks"] = std::move(checks);
  emit(o, j);
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact lattice, valuation and polytope toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  app.add_option("--d", o.d, "Tuple length d of the componentwise lattice");
  app.add_option("--n", o.n, "Ambient bound n of the componentwise lattice");
  app.add_option("--poset", o.poset_file,
                 "JSON poset file {\"elements\", \"covers\"}");
  app.add_option("--family", o.family, "Valuation family: spec|maxspec|ht");
  app.add_option("--chain", o.chain,
                 "Maximal chain: index, or labels joined by '-'");
  app.add_option("--pair", o.pair, "Two element labels, comma separated");
  app.add_option("--element", o.element, "One element label");
  app.add_option("--index", o.index, "One element by numeric id");
  app.add_option("--monomial", o.monomial,
                 "Product of elements: labels, comma separated");
  app.add_option("--dilation", o.dilation, "Dilation factor for point scans");
  app.add_option("--degree", o.degree, "Dump the standard basis of this degree");
  app.add_option("--out", o.out, "Write JSON here instead of stdout");
  app.add_option("--jobs", o.jobs, "Worker threads for chain scans");
  app.add_option("--cap-elements", o.cap_elements, "Element count cap");
  app.add_option("--cap-chains", o.cap_chains, "Chain count cap");

  auto* sub_lattice = app.add_subcommand("lattice", "Export the lattice");
  auto* sub_chains = app.add_subcommand("chains", "List maximal chains");
  auto* sub_hibi = app.add_subcommand("hibi-ideal", "Export the toric ideal");
  auto* sub_valuate =
      app.add_subcommand("valuate", "Value of a monomial on one chain");
  auto* sub_quasi =
      app.add_subcommand("quasi", "Minimum value over all chains");
  auto* sub_straighten =
      app.add_subcommand("straighten", "Rewrite one incomparable pair");
  auto* sub_governed =
      app.add_subcommand("governed", "Check the straightening laws");
  auto* sub_no_body =
      app.add_subcommand("no-body", "Body of a chain as a polytope");
  auto* sub_fflv = app.add_subcommand("fflv", "Chain polytope of the grid");
  auto* sub_beta = app.add_subcommand("beta", "Grid antichain of an element");
  auto* sub_triangulate =
      app.add_subcommand("triangulate", "Simplices of the chain subdivision");
  auto* sub_transfer =
      app.add_subcommand("transfer", "Piecewise-linear point table");
  auto* sub_verify = app.add_subcommand("verify", "Run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (sub_lattice->parsed()) return cmd_lattice(o);
    if (sub_chains->parsed()) return cmd_chains(o);
    if (sub_hibi->parsed()) return cmd_hibi_ideal(o);
    if (sub_valuate->parsed()) return cmd_valuate(o);
    if (sub_quasi->parsed()) return cmd_quasi(o);
    if (sub_straighten->parsed()) return cmd_straighten(o);
    if (sub_governed->parsed()) return cmd_governed(o);
    if (sub_no_body->parsed()) return cmd_no_body(o);
    if (sub_fflv->parsed()) return cmd_fflv(o);
    if (sub_beta->parsed()) return cmd_beta(o);
    if (sub_triangulate->parsed()) return cmd_triangulate(o);
    if (sub_transfer->parsed()) return cmd_transfer(o);
    if (sub_verify->parsed()) return cmd_verify(o);
    std::cerr << app.help() << std::flush;
    return 64;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
