// The tuple lattice bundled with minors: shuffle relations, straightening,
// the domination report, graded values of products, and the root-cell map.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hibi/chains.hpp"
#include "hibi/lattice.hpp"
#include "hibi/monomial.hpp"
#include "hibi/plucker.hpp"
#include "hibi/poset.hpp"
#include "hibi/qpoly.hpp"
#include "hibi/valuation.hpp"

using namespace hibi;

TEST_CASE("tuple codec and lattice sizes") {
  CHECK(build_idn(2, 4).lattice.size() == 6);
  CHECK(build_idn(2, 5).lattice.size() == 10);
  CHECK(build_idn(2, 6).lattice.size() == 15);
  CHECK(build_idn(3, 6).lattice.size() == 20);
  CHECK(build_idn(4, 7).lattice.size() == 35);
  CHECK_THROWS_AS(build_idn(3, 9), std::domain_error);  // 84 > default cap

  GrassmannLattice gl = build_idn(4, 7);
  Tuple t = {2, 4, 5, 7};
  CHECK(tuple_label(t, 7) == "2457");
  CHECK(tuple_from_label("2457", 4, 7) == t);
  int e = gl.index_of_tuple(t);
  CHECK(gl.tuples[e] == t);
  CHECK(gl.lattice.label(e) == "2457");
  CHECK_THROWS_AS(tuple_from_label("2447", 4, 7), std::invalid_argument);
  CHECK_THROWS_AS(tuple_from_label("248", 4, 7), std::invalid_argument);
}

TEST_CASE("irreducible taxonomy matches the lattice notion") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    GrassmannLattice gl = build_idn(d, n);
    const DistributiveLattice& l = gl.lattice;
    for (int e = 0; e < l.size(); ++e) {
      IrreducibleClass c = classify_irreducible(gl.tuples[e], d, n);
      CHECK(c.irreducible == l.is_irreducible(e));
    }
  }
  IrreducibleClass c13 = classify_irreducible({1, 3}, 2, 4);
  CHECK(c13.irreducible);
  CHECK(c13.s == 1);
  CHECK(c13.t == 2);
  IrreducibleClass bot = classify_irreducible({1, 2, 3, 4}, 4, 7);
  CHECK(bot.s == 0);
  CHECK(bot.t == 0);
  CHECK(!classify_irreducible({2, 4}, 2, 4).irreducible);
}

TEST_CASE("the staircase support of 2457 is frozen") {
  GrassmannLattice gl = build_idn(4, 7);
  const DistributiveLattice& l = gl.lattice;
  int e = l.index_of_label("2457");
  Mask m = l.spec_star(e);
  std::set<std::string> got;
  for (int j = 0; j < l.rank(); ++j)
    if ((m >> j) & 1) got.insert(l.jposet().label(j));
  std::set<std::string> want = {"2345", "1345", "1456", "1245",
                                "1256", "1235", "1236", "1237"};
  CHECK(got == want);

  CHECK(omega_alpha(gl, e) ==
        std::vector<long long>{1, 1, 2, 2, 1, 1});
  CHECK(omega_alpha(gl, l.bottom()) ==
        std::vector<long long>(6, 0));
}

TEST_CASE("weights are additive across join and meet") {
  GrassmannLattice gl = build_idn(2, 5);
  const DistributiveLattice& l = gl.lattice;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      auto wa = weight_of(gl.tuples[a], 5);
      auto wb = weight_of(gl.tuples[b], 5);
      auto wj = weight_of(gl.tuples[l.join(a, b)], 5);
      auto wm = weight_of(gl.tuples[l.meet(a, b)], 5);
      for (int i = 0; i < 5; ++i) CHECK(wa[i] + wb[i] == wj[i] + wm[i]);
    }
}

TEST_CASE("support weight reproduces the coordinate weight") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {4, 7}}) {
    GrassmannLattice gl = build_idn(d, n);
    const DistributiveLattice& l = gl.lattice;
    auto w0 = weight_of(gl.tuples[l.bottom()], n);
    for (int e = 0; e < l.size(); ++e) {
      auto eps = alpha_to_epsilon(omega_alpha(gl, e), n);
      auto we = weight_of(gl.tuples[e], n);
      for (int i = 0; i < n; ++i) CHECK(we[i] == w0[i] + eps[i]);
    }
  }
}

TEST_CASE("proper irreducibles map onto the root grid as posets") {
  GrassmannLattice gl = build_idn(2, 4);
  Poset rp = root_poset(2, 4);
  REQUIRE(rp.size() == 4);
  CHECK(root_cell(2, 4, root_index(2, 4, 1, 3)) == std::pair{1, 3});

  std::vector<int> to_root = irreducible_to_root(gl);
  REQUIRE(to_root.size() == 4);
  const Poset& jp = gl.lattice.jposet();
  auto cell_of = [&](const std::string& lbl) {
    return root_cell(2, 4, to_root[jp.index_of_label(lbl)]);
  };
  CHECK(cell_of("13") == std::pair{1, 2});
  CHECK(cell_of("14") == std::pair{1, 3});
  CHECK(cell_of("23") == std::pair{2, 2});
  CHECK(cell_of("34") == std::pair{2, 3});

  // order isomorphism, checked both ways
  for (int a = 0; a < jp.size(); ++a)
    for (int b = 0; b < jp.size(); ++b)
      CHECK(jp.leq(a, b) == rp.leq(to_root[a], to_root[b]));

  // the grid shape in the larger case
  Poset rp36 = root_poset(3, 6);
  CHECK(rp36.size() == 9);
  CHECK(irreducible_to_root(build_idn(3, 6)).size() == 9);
}

TEST_CASE("shuffle relations vanish on minors and have frozen shape") {
  GrassmannLattice gl = build_idn(2, 4);
  int rejected = -1;
  std::vector<QPoly> rels = plucker_relations(gl, &rejected);
  CHECK(rejected == 0);
  REQUIRE(rels.size() == 1);
  const QPoly& r = rels[0];
  CHECK(expand_in_minors(gl, r).is_zero());
  REQUIRE(r.terms().size() == 3);

  // the three quadratic monomials pair the three complementary label pairs
  const DistributiveLattice& l = gl.lattice;
  std::set<std::set<std::string>> support;
  std::map<std::set<std::string>, Rational> coeff;
  for (const auto& [exp, c] : r.terms()) {
    std::set<std::string> mono;
    long long deg = 0;
    for (int i = 0; i < l.size(); ++i) {
      deg += exp[i];
      if (exp[i] == 1) mono.insert(l.label(i));
      CHECK(exp[i] <= 1);
    }
    CHECK(deg == 2);
    support.insert(mono);
    coeff[mono] = c;
  }
  std::set<std::set<std::string>> want = {
      {"12", "34"}, {"13", "24"}, {"14", "23"}};
  CHECK(support == want);
  // signs alternate so that the two non-diagonal products cancel the third
  Rational a = coeff[{"12", "34"}], b = coeff[{"13", "24"}],
           c = coeff[{"14", "23"}];
  CHECK(a * b < 0);
  CHECK(b * c < 0);

  int rej5 = -1;
  CHECK(plucker_relations(build_idn(2, 5), &rej5).size() == 5);
  CHECK(rej5 == 0);
}

TEST_CASE("straightening goldens and exactness") {
  GrassmannLattice g24 = build_idn(2, 4);
  const DistributiveLattice& l24 = g24.lattice;
  StraighteningEntry e = straighten(g24, l24.index_of_label("14"),
                                    l24.index_of_label("23"));
  REQUIRE(e.terms.size() == 2);
  CHECK(l24.label(e.terms[0].k1) == "24");
  CHECK(l24.label(e.terms[0].k2) == "13");
  CHECK(e.terms[0].coeff == Rational(1));
  CHECK(l24.label(e.terms[1].k1) == "34");
  CHECK(l24.label(e.terms[1].k2) == "12");
  CHECK(e.terms[1].coeff == Rational(-1));

  CHECK_THROWS_AS(straighten(g24, l24.index_of_label("13"),
                             l24.index_of_label("24")),
                  std::invalid_argument);

  GrassmannLattice g25 = build_idn(2, 5);
  const DistributiveLattice& l25 = g25.lattice;
  StraighteningEntry e2 = straighten(g25, l25.index_of_label("25"),
                                     l25.index_of_label("34"));
  REQUIRE(e2.terms.size() == 2);
  CHECK(l25.label(e2.terms[0].k1) == "35");
  CHECK(l25.label(e2.terms[0].k2) == "24");
  CHECK(e2.terms[0].coeff == Rational(1));
  CHECK(l25.label(e2.terms[1].k1) == "45");
  CHECK(l25.label(e2.terms[1].k2) == "23");
  CHECK(e2.terms[1].coeff == Rational(-1));

  // every table entry reproduces its pair exactly under minor expansion
  StraighteningTable t = straightening_table(g25);
  CHECK(t.entries.size() == 5);
  const int nv = l25.size();
  for (const auto& entry : t.entries) {
    QPoly diff(nv);
    std::vector<int> exp(nv, 0);
    exp[entry.i1] += 1;
    exp[entry.i2] += 1;
    diff.add_term(exp, Rational(1));
    for (const auto& term : entry.terms) {
      std::vector<int> te(nv, 0);
      te[term.k1] += 1;
      te[term.k2] += 1;
      diff.add_term(te, -term.coeff);
    }
    CHECK(expand_in_minors(g25, diff).is_zero());
    CHECK(t.at(entry.i1, entry.i2).i1 == entry.i1);
    // leading term is the join/meet pair with unit coefficient
    CHECK(entry.terms[0].k1 == l25.join(entry.i1, entry.i2));
    CHECK(entry.terms[0].k2 == l25.meet(entry.i1, entry.i2));
    CHECK(entry.terms[0].coeff == Rational(1));
  }
  CHECK_THROWS_WITH_AS(t.at(0, 1), "pair is not in the straightening table",
                       std::invalid_argument);
}

TEST_CASE("expansion into the standard basis is exact and standard") {
  GrassmannLattice gl = build_idn(2, 5);
  const DistributiveLattice& l = gl.lattice;
  StraighteningTable t = straightening_table(gl);

  // a degree-3 product with two incomparable pairs inside
  std::vector<int> factors = {l.index_of_label("15"), l.index_of_label("24"),
                              l.index_of_label("34")};
  std::map<StandardMonomial, Rational> exp = expand_to_standard(gl, t, factors);
  CHECK(!exp.empty());

  const int nv = l.size();
  QPoly diff(nv);
  std::vector<int> pe(nv, 0);
  for (int f : factors) pe[f] += 1;
  diff.add_term(pe, Rational(1));
  for (const auto& [mono, c] : exp) {
    CHECK(is_standard(l, mono.factors));
    CHECK(mono.factors.size() == factors.size());
    CHECK(c != 0);
    std::vector<int> me(nv, 0);
    for (int f : mono.factors) me[f] += 1;
    diff.add_term(me, -c);
  }
  CHECK(expand_in_minors(gl, diff).is_zero());

  // expanding an already-standard product is the identity
  std::vector<int> std_factors = {l.index_of_label("35"),
                                  l.index_of_label("13")};
  auto exp2 = expand_to_standard(gl, t, std_factors);
  REQUIRE(exp2.size() == 1);
  CHECK(exp2.begin()->second == Rational(1));
  CHECK(exp2.begin()->first.factors ==
        std::vector<int>{l.index_of_label("35"), l.index_of_label("13")});
}

TEST_CASE("domination report on the small lattice is frozen") {
  GrassmannLattice gl = build_idn(2, 4);
  const DistributiveLattice& l = gl.lattice;
  StraighteningTable t = straightening_table(gl);
  REQUIRE(t.entries.size() == 1);

  GovernedReport g = governed_check(gl, t);
  CHECK(g.pass);
  CHECK(g.basis_ok);
  REQUIRE(g.pairs.size() == 1);
  const GovernedPairReport& p = g.pairs[0];
  CHECK(p.leading_ok);
  CHECK(p.pass);
  CHECK(l.label(p.i1) == "14");
  CHECK(l.label(p.i2) == "23");
  REQUIRE(p.terms.size() == 1);  // only the non-leading term is examined
  const GovernedTermReport& tr = p.terms[0];
  CHECK(l.label(tr.k1) == "34");
  CHECK(l.label(tr.k2) == "12");
  CHECK(tr.pass);
  REQUIRE(tr.cases.size() == 2);
  for (const GovernedCase& c : tr.cases) {
    CHECK(c.rule == 1);
    CHECK(l.label(c.h) == "34");
    CHECK(c.hprime == -1);
    CHECK(l.label(c.m2) == "13");
  }
  CHECK(l.label(tr.cases[0].m1) == "14");
  CHECK(l.label(tr.cases[1].m1) == "23");

  // negative controls: a corrupted table must be caught
  StraighteningTable bad = t;
  bad.entries[0].terms[1].k1 = l.bottom();
  bad.entries[0].terms[1].k2 = l.bottom();
  GovernedReport gb = governed_check(gl, bad);
  CHECK(!gb.pass);
  CHECK(!gb.pairs[0].pass);

  StraighteningTable bad2 = t;
  bad2.entries[0].terms[0].coeff = Rational(2);
  GovernedReport gb2 = governed_check(gl, bad2);
  CHECK(!gb2.pass);
  CHECK(!gb2.pairs[0].leading_ok);
}

TEST_CASE("graded product values are frozen on the small lattice") {
  GrassmannLattice gl = build_idn(2, 4);
  const DistributiveLattice& l = gl.lattice;
  StraighteningTable t = straightening_table(gl);
  int e14 = l.index_of_label("14"), e23 = l.index_of_label("23");

  std::vector<Chain> chains = maximal_chains(l);
  for (const Chain& c : chains) {
    ValueVector v = mu_chain(gl, t, c, Family::spec, {e14, e23});
    CHECK(v.tag == OrderTag::graded_revlex);
    CHECK(v.v == std::vector<long long>{2, 2, 1, 1, 0});
  }
  QuasiResult q = mu_quasi(gl, t, Family::spec, {e14, e23});
  CHECK(q.value.v == std::vector<long long>{2, 2, 1, 1, 0});
  CHECK(q.argmin.size() == 2);

  // on a standard product the graded value is the sum of factor values
  QuasiResult q14 = mu_quasi(gl, t, Family::spec, {e14});
  QuasiResult q13 =
      mu_quasi(gl, t, Family::spec, {l.index_of_label("13")});
  QuasiResult qs =
      mu_quasi(gl, t, Family::spec, {e14, l.index_of_label("13")});
  for (std::size_t i = 0; i < qs.value.v.size(); ++i)
    CHECK(qs.value.v[i] == q14.value.v[i] + q13.value.v[i]);
}

TEST_CASE("root cells of the pairing iteration are frozen") {
  GrassmannLattice g47 = build_idn(4, 7);
  int e = g47.lattice.index_of_label("2457");
  CHECK(pairing_map({2, 4, 5, 7}, 4, 7) == Tuple{1, 2, 4, 5});
  CHECK(pairing_map({1, 2, 4, 5}, 4, 7) == Tuple{1, 2, 3, 4});
  CHECK(beta_cells(g47, e) ==
        (std::vector<std::pair<int, int>>{{1, 6}, {3, 4}}));

  GrassmannLattice g24 = build_idn(2, 4);
  const DistributiveLattice& l = g24.lattice;
  using Cells = std::vector<std::pair<int, int>>;
  CHECK(beta_cells(g24, l.index_of_label("12")) == Cells{});
  CHECK(beta_cells(g24, l.index_of_label("13")) == Cells{{2, 2}});
  CHECK(beta_cells(g24, l.index_of_label("14")) == Cells{{2, 3}});
  CHECK(beta_cells(g24, l.index_of_label("23")) == Cells{{1, 2}});
  CHECK(beta_cells(g24, l.index_of_label("24")) == Cells{{1, 3}});
  CHECK(beta_cells(g24, l.index_of_label("34")) == (Cells{{1, 3}, {2, 2}}));

  // every cell list is an antichain of the root grid, and the indicator
  // vectors separate lattice elements
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    GrassmannLattice gl = build_idn(d, n);
    Poset rp = root_poset(d, n);
    std::set<std::vector<long long>> seen;
    for (int el = 0; el < gl.lattice.size(); ++el) {
      std::vector<long long> chi = beta_chi(gl, el);
      REQUIRE(static_cast<int>(chi.size()) == rp.size());
      Mask m = 0;
      for (int i = 0; i < rp.size(); ++i)
        if (chi[i]) m |= Mask{1} << i;
      CHECK(rp.is_antichain(m));
      seen.insert(chi);
    }
    CHECK(static_cast<int>(seen.size()) == gl.lattice.size());
  }
}
