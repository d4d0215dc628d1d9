// Exact rational polytopes: order and chain polytopes, degeneration bodies,
// dilation counting, the chain triangulation, and the transfer map.
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "hibi/chains.hpp"
#include "hibi/lattice.hpp"
#include "hibi/linalg.hpp"
#include "hibi/plucker.hpp"
#include "hibi/polytope.hpp"
#include "hibi/poset.hpp"

using namespace hibi;

namespace {

RVector rvec(std::vector<long long> v) {
  RVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

HalfSpace hs(std::vector<long long> normal, long long rhs) {
  return HalfSpace{rvec(std::move(normal)), Rational(rhs)};
}

std::string chain_label(const DistributiveLattice& l, const Chain& c) {
  std::string s;
  for (int e : c) s += (s.empty() ? "" : "-") + l.label(e);
  return s;
}

}  // namespace

TEST_CASE("hrep construction validates boundedness and dimension") {
  // unit square, with one redundant inequality that must be dropped
  std::vector<HalfSpace> square = {hs({1, 0}, 1), hs({-1, 0}, 0),
                                   hs({0, 1}, 1), hs({0, -1}, 0),
                                   hs({1, 1}, 5)};
  RationalPolytope p = RationalPolytope::from_hrep(2, square);
  CHECK(p.halfspaces().size() == 4);
  REQUIRE(p.vertices().size() == 4);
  CHECK(p.vertices().front() == rvec({0, 0}));
  CHECK(p.vertices().back() == rvec({1, 1}));
  CHECK(p.contains(rvec({1, 1})));
  RVector mid(2);
  mid[0] = Rational(1, 2);
  mid[1] = Rational(3, 4);
  CHECK(p.contains(mid));
  CHECK(!p.contains(rvec({2, 0})));

  CHECK_THROWS_WITH_AS(
      RationalPolytope::from_hrep(1, {hs({-1}, 0)}),
      "the region is unbounded", std::domain_error);
  CHECK_THROWS_WITH_AS(
      RationalPolytope::from_hrep(1, {hs({1}, -1), hs({-1}, 0)}),
      "the inequalities have no solution", std::domain_error);
  CHECK_THROWS_WITH_AS(
      RationalPolytope::from_hrep(
          2, {hs({1, 0}, 0), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)}),
      "the region is not full-dimensional", std::domain_error);

  // points-and-hrep cross-validation
  std::vector<RVector> pts = {rvec({0, 0}), rvec({1, 0}), rvec({0, 1}),
                              rvec({1, 1})};
  RationalPolytope q = RationalPolytope::from_points_and_hrep(
      pts, 2, {hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)});
  CHECK(q.vertices().size() == 4);
  CHECK_THROWS_WITH_AS(
      RationalPolytope::from_points_and_hrep(
          {rvec({0, 0}), rvec({2, 0})}, 2,
          {hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0)}),
      "a point violates the inequalities", std::domain_error);
}

TEST_CASE("order polytope of the two-element antichain is the unit square") {
  Poset anti = Poset::from_covers({"p", "q"}, {});
  RationalPolytope p = order_polytope(anti);
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 4);
  CHECK(lattice_points(p, 1).size() == 4);

  // a chain gives the triangle of decreasing 0/1 vectors
  Poset chain2 = Poset::from_covers({"a", "b"}, {{0, 1}});
  RationalPolytope t = order_polytope(chain2);
  CHECK(t.vertices().size() == 3);
  std::vector<std::vector<long long>> pts = lattice_points(t, 1);
  CHECK(pts == std::vector<std::vector<long long>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("grid paths are enumerated in frozen order") {
  CHECK(dyck_paths(2, 4).size() == 2);
  CHECK(dyck_paths(2, 5).size() == 3);
  CHECK(dyck_paths(3, 6).size() == 6);
  CHECK(dyck_paths(4, 7).size() == 10);

  std::vector<std::vector<std::pair<int, int>>> paths = dyck_paths(2, 4);
  CHECK(paths[0] ==
        (std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}));
  CHECK(paths[1] ==
        (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}));
  for (const auto& path : paths) {
    CHECK(path.front() == std::pair{1, 2});
    CHECK(path.back() == std::pair{2, 3});
  }
}

TEST_CASE("chain polytope points are the antichain indicators") {
  for (auto [d, n, cnt] :
       std::vector<std::tuple<int, int, int>>{{2, 4, 6}, {2, 5, 10},
                                              {3, 6, 20}}) {
    RationalPolytope f = fflv_polytope(d, n);
    Poset rp = root_poset(d, n);
    REQUIRE(f.dim() == rp.size());
    std::vector<std::vector<long long>> pts = lattice_points(f, 1);
    CHECK(static_cast<int>(pts.size()) == cnt);
    std::set<Mask> seen;
    for (const auto& pt : pts) {
      Mask m = 0;
      for (int i = 0; i < rp.size(); ++i) {
        CHECK((pt[i] == 0 || pt[i] == 1));
        if (pt[i]) m |= Mask{1} << i;
      }
      CHECK(rp.is_antichain(m));
      seen.insert(m);
    }
    CHECK(pts.size() == seen.size());
  }
}

TEST_CASE("degeneration bodies are order polytopes on every chain") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
    GrassmannLattice gl = build_idn(d, n);
    const DistributiveLattice& l = gl.lattice;
    for (const Chain& c : maximal_chains(l)) {
      BodyOnChain body = no_body(l, c);
      CHECK(body.enumeration == chain_to_enumeration(l, c));
      CHECK(static_cast<int>(body.points.size()) == l.size());
      CHECK(body.points == lattice_points(body.polytope, 1));
      CHECK(std::is_sorted(body.points.begin(), body.points.end()));
      // vertex set == point set for these bodies
      std::set<std::vector<long long>> vs;
      for (const RVector& v : body.polytope.vertices()) {
        std::vector<long long> w;
        for (const Rational& x : v)
          w.push_back(boost::multiprecision::numerator(x)
                          .convert_to<long long>());
        vs.insert(w);
      }
      CHECK(vs == std::set<std::vector<long long>>(body.points.begin(),
                                                   body.points.end()));
    }

    // the two bodies of one lattice share the point set only up to the
    // coordinate permutation relating their enumerations
    std::vector<Chain> chains = maximal_chains(l);
    BodyOnChain b0 = no_body(l, chains[0]);
    BodyOnChain b1 = no_body(l, chains[1]);
    std::set<std::vector<long long>> s0(b0.points.begin(), b0.points.end());
    std::set<std::vector<long long>> s1(b1.points.begin(), b1.points.end());
    std::set<std::vector<long long>> s1_permuted;
    for (const auto& pt : b1.points) {
      std::vector<long long> q(pt.size());
      for (std::size_t pos = 0; pos < pt.size(); ++pos) {
        int j = b1.enumeration[pos];
        int pos0 = static_cast<int>(
            std::find(b0.enumeration.begin(), b0.enumeration.end(), j) -
            b0.enumeration.begin());
        q[pos0] = pt[pos];
      }
      s1_permuted.insert(q);
    }
    CHECK(s0 == s1_permuted);
  }
}

TEST_CASE("dilation counts and the interpolated polynomial are frozen") {
  GrassmannLattice gl = build_idn(2, 4);
  const DistributiveLattice& l = gl.lattice;
  Chain c = maximal_chains(l)[0];
  BodyOnChain body = no_body(l, c);

  std::vector<long long> counts = ehrhart_counts(body.polytope, 4);
  CHECK(counts == std::vector<long long>{1, 6, 20, 50, 105});
  CHECK(lattice_points(body.polytope, 2).size() == 20);

  std::vector<Rational> poly = polynomial_fit(counts);
  REQUIRE(poly.size() == 5);
  CHECK(poly[0] == Rational(1));
  CHECK(poly[4] == Rational(1, 12));
  // evaluate at 5 as a predictive check: 6*36*8/12
  Rational at5 = 0, pw = 1;
  for (const Rational& a : poly) {
    at5 += a * pw;
    pw *= 5;
  }
  CHECK(at5 == Rational(196));

  CHECK(polynomial_fit({7}) == std::vector<Rational>{Rational(7)});
  CHECK_THROWS_AS(polynomial_fit({}), std::invalid_argument);
}

TEST_CASE("the chain triangulation is unimodular and exhaustive") {
  GrassmannLattice gl = build_idn(2, 4);
  const DistributiveLattice& l = gl.lattice;
  std::vector<Chain> chains = maximal_chains(l);
  Chain ref = chains[0];
  BodyOnChain body = no_body(l, ref);

  std::vector<Simplex> tri = triangulate(l, ref);
  REQUIRE(tri.size() == chains.size());
  Rational volume = 0;
  Rational factorial = 1;
  for (int i = 1; i <= l.rank(); ++i) factorial *= i;
  for (std::size_t k = 0; k < tri.size(); ++k) {
    const Simplex& s = tri[k];
    CHECK(s.chain == chains[k]);
    REQUIRE(static_cast<int>(s.verts.size()) == l.rank() + 1);
    for (const Rational& x : s.verts[0]) CHECK(x == 0);
    for (const RVector& v : s.verts) CHECK(body.polytope.contains(v));
    CHECK(simplex_det(s) == Rational(1));
    volume += simplex_det(s) / factorial;
  }
  CHECK(volume == Rational(2, 24));

  // every integer point of the body lies in some simplex: check via the
  // point sets of the per-chain sub-bodies
  std::set<std::vector<long long>> covered;
  for (const Simplex& s : tri) {
    // a unimodular simplex with vertex 0 contains exactly its vertices as
    // integer points
    for (const RVector& v : s.verts) {
      std::vector<long long> w;
      for (const Rational& x : v)
        w.push_back(
            boost::multiprecision::numerator(x).convert_to<long long>());
      covered.insert(w);
    }
  }
  CHECK(covered == std::set<std::vector<long long>>(body.points.begin(),
                                                    body.points.end()));

  // the larger lattice: five unimodular simplices, volume 5/7!
  GrassmannLattice g25 = build_idn(2, 5);
  std::vector<Simplex> tri5 =
      triangulate(g25.lattice, maximal_chains(g25.lattice)[0]);
  REQUIRE(tri5.size() == 5);
  for (const Simplex& s : tri5) CHECK(simplex_det(s) == Rational(1));
}

TEST_CASE("transfer maps ideal indicators to their maximal antichains") {
  GrassmannLattice gl = build_idn(2, 4);
  const DistributiveLattice& l = gl.lattice;
  const Poset& jp = l.jposet();
  std::vector<int> ident = {0, 1, 2, 3};

  for (int e = 0; e < l.size(); ++e) {
    Mask ideal = l.spec_star(e);
    Mask mx = l.max_spec_star(e);
    RVector x(jp.size());
    for (int j = 0; j < jp.size(); ++j)
      x[j] = Rational(((ideal >> j) & 1) ? 1 : 0);
    RVector y = transfer(jp, ident, x);
    for (int j = 0; j < jp.size(); ++j)
      CHECK(y[j] == Rational(((mx >> j) & 1) ? 1 : 0));
    RVector back = transfer_inverse(jp, ident, y);
    for (int j = 0; j < jp.size(); ++j) CHECK(back[j] == x[j]);
  }

  // the two maps invert each other on interior rational points too
  RVector x(4);
  x[0] = Rational(9, 10);
  x[1] = Rational(1, 2);
  x[2] = Rational(2, 3);
  x[3] = Rational(1, 4);
  RVector y = transfer(jp, ident, x);
  RVector back = transfer_inverse(jp, ident, y);
  for (int j = 0; j < 4; ++j) CHECK(back[j] == x[j]);

  // element 34 shows the cell-count mismatch between the two antichain
  // pictures: its maximal support is one element, while its root-cell list
  // has two cells
  int e34 = l.index_of_label("34");
  CHECK(std::popcount(l.max_spec_star(e34)) == 1);
  CHECK(beta_cells(gl, e34).size() == 2);
}

TEST_CASE("transferred body points match the chain polytope points") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
    GrassmannLattice gl = build_idn(d, n);
    const DistributiveLattice& l = gl.lattice;
    const Poset& jp = l.jposet();
    std::vector<int> to_root = irreducible_to_root(gl);
    Chain ref = maximal_chains(l)[0];
    BodyOnChain body = no_body(l, ref);

    // positions -> jposet ids -> root-grid indices
    RationalPolytope f = fflv_polytope(d, n);
    std::set<std::vector<long long>> fflv_pts;
    for (const auto& pt : lattice_points(f, 1)) fflv_pts.insert(pt);

    Poset rp = root_poset(d, n);
    std::vector<int> ident(rp.size());
    for (int i = 0; i < rp.size(); ++i) ident[i] = i;

    std::set<std::vector<long long>> image;
    for (const auto& pt : body.points) {
      RVector x(rp.size());
      for (int pos = 0; pos < jp.size(); ++pos)
        x[to_root[body.enumeration[pos]]] = Rational(pt[pos]);
      RVector y = transfer(rp, ident, x);
      std::vector<long long> w;
      for (const Rational& v : y)
        w.push_back(
            boost::multiprecision::numerator(v).convert_to<long long>());
      image.insert(w);
    }
    CHECK(image == fflv_pts);
  }
}
