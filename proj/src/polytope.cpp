#include "hibi/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hibi/plucker.hpp"

namespace hibi {

namespace {

// Calls fn(sel) for every ascending k-subset sel of {0, ..., m-1}.
void for_each_combination(int m, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> sel(k);
  for (int i = 0; i < k; ++i) sel[i] = i;
  for (;;) {
    fn(sel);
    int i = k - 1;
    while (i >= 0 && sel[i] == m - k + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
}

std::vector<Rational> key_of(const RVector& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

int affine_rank(const std::vector<RVector>& pts) {
  if (pts.size() <= 1) return 0;
  RMatrix diff(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    diff.row(i - 1) = (pts[i] - pts[0]).transpose();
  return static_cast<int>(rrank(diff));
}

void check_coords(const Poset& p, const std::vector<int>& coord_of) {
  if (static_cast<int>(coord_of.size()) != p.size())
    throw std::invalid_argument("coordinate map has the wrong size");
  std::vector<char> seen(p.size(), 0);
  for (int c : coord_of) {
    if (c < 0 || c >= p.size() || seen[c])
      throw std::invalid_argument("coordinate map is not a permutation");
    seen[c] = 1;
  }
}

long long rfloor(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt rem = ((num % den) + den) % den;
  return BigInt((num - rem) / den).convert_to<long long>();
}

long long rceil(const Rational& q) { return -rfloor(-q); }

}  // namespace

bool RationalPolytope::contains(const RVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("point has the wrong dimension");
  for (const HalfSpace& h : hs_)
    if (h.normal.dot(x) > h.rhs) return false;
  return true;
}

RationalPolytope RationalPolytope::from_hrep(int dim,
                                             const std::vector<HalfSpace>& hs) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<HalfSpace> rows;
  for (const HalfSpace& h : hs) {
    if (h.normal.size() != dim)
      throw std::invalid_argument("inequality has the wrong dimension");
    bool zero = true;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (h.normal(i) != 0) zero = false;
    if (zero) {
      if (h.rhs < 0)
        throw std::domain_error("the inequalities have no solution");
      continue;  // trivially true
    }
    rows.push_back(h);
  }
  const int m = static_cast<int>(rows.size());
  RMatrix a(m, dim);
  RVector b(m);
  for (int i = 0; i < m; ++i) {
    a.row(i) = rows[i].normal.transpose();
    b(i) = rows[i].rhs;
  }

  // Boundedness. A line in the region shows up as a nonzero kernel of the
  // normal matrix; otherwise a nonzero recession direction must be an
  // extreme ray, pinned down by dim-1 independent active normals.
  if (rrank(a) < dim) throw std::domain_error("the region is unbounded");
  auto ray_escapes = [&](const RVector& r) {
    RVector ar = a * r;
    bool nonpos = true, nonneg = true;
    for (int i = 0; i < m; ++i) {
      if (ar(i) > 0) nonpos = false;
      if (ar(i) < 0) nonneg = false;
    }
    return nonpos || nonneg;
  };
  if (dim == 1) {
    RVector r(1);
    r(0) = 1;
    if (ray_escapes(r)) throw std::domain_error("the region is unbounded");
  } else {
    bool unbounded = false;
    for_each_combination(m, dim - 1, [&](const std::vector<int>& sel) {
      if (unbounded) return;
      RMatrix sub(dim - 1, dim);
      for (int i = 0; i < dim - 1; ++i) sub.row(i) = a.row(sel[i]);
      if (rrank(sub) != dim - 1) return;
      if (ray_escapes(rkernel(sub).col(0))) unbounded = true;
    });
    if (unbounded) throw std::domain_error("the region is unbounded");
  }

  // Vertex enumeration: every vertex is the unique solution of dim
  // independent active inequalities.
  std::set<std::vector<Rational>> vert_set;
  for_each_combination(m, dim, [&](const std::vector<int>& sel) {
    RMatrix sub(dim, dim);
    RVector rhs(dim);
    for (int i = 0; i < dim; ++i) {
      sub.row(i) = a.row(sel[i]);
      rhs(i) = b(sel[i]);
    }
    if (rrank(sub) != dim) return;
    auto x = rsolve(sub, rhs);
    if (!x) return;
    RVector ax = a * *x;
    for (int i = 0; i < m; ++i)
      if (ax(i) > b(i)) return;
    vert_set.insert(key_of(*x));
  });
  if (vert_set.empty())
    throw std::domain_error("the inequalities have no solution");

  RationalPolytope p;
  p.dim_ = dim;
  for (const auto& k : vert_set) {
    RVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = k[i];
    p.verts_.push_back(std::move(v));
  }
  if (affine_rank(p.verts_) != dim)
    throw std::domain_error("the region is not full-dimensional");

  // Keep exactly the facet rows: active vertex sets of affine rank dim-1.
  std::set<std::vector<Rational>> seen_rows;
  for (int i = 0; i < m; ++i) {
    std::vector<RVector> active;
    for (const RVector& v : p.verts_)
      if (rows[i].normal.dot(v) == rows[i].rhs) active.push_back(v);
    if (active.empty() || affine_rank(active) != dim - 1) continue;

    // Coprime integer form, preserving orientation.
    BigInt den_lcm = 1;
    for (int c = 0; c < dim; ++c)
      den_lcm = lcm(den_lcm, BigInt(denominator(rows[i].normal(c))));
    den_lcm = lcm(den_lcm, BigInt(denominator(rows[i].rhs)));
    BigInt num_gcd = 0;
    auto scaled_num = [&](const Rational& q) {
      return BigInt(numerator(q) * (den_lcm / denominator(q)));
    };
    for (int c = 0; c < dim; ++c)
      num_gcd = gcd(num_gcd, scaled_num(rows[i].normal(c)));
    num_gcd = gcd(num_gcd, scaled_num(rows[i].rhs));
    if (num_gcd == 0) num_gcd = 1;
    HalfSpace h;
    h.normal = RVector(dim);
    for (int c = 0; c < dim; ++c)
      h.normal(c) = Rational(scaled_num(rows[i].normal(c)) / num_gcd);
    h.rhs = Rational(scaled_num(rows[i].rhs) / num_gcd);

    std::vector<Rational> key = key_of(h.normal);
    key.push_back(h.rhs);
    if (seen_rows.insert(key).second) p.hs_.push_back(std::move(h));
  }
  std::sort(p.hs_.begin(), p.hs_.end(),
            [](const HalfSpace& x, const HalfSpace& y) {
              std::vector<Rational> kx = key_of(x.normal), ky = key_of(y.normal);
              kx.push_back(x.rhs);
              ky.push_back(y.rhs);
              return kx < ky;
            });
  return p;
}

RationalPolytope RationalPolytope::from_points_and_hrep(
    const std::vector<RVector>& pts, int dim,
    const std::vector<HalfSpace>& hs) {
  RationalPolytope p = from_hrep(dim, hs);
  for (const RVector& x : pts)
    if (!p.contains(x))
      throw std::domain_error("a point violates the inequalities");
  std::set<std::vector<Rational>> point_set;
  for (const RVector& x : pts) point_set.insert(key_of(x));
  for (const RVector& v : p.verts_)
    if (!point_set.count(key_of(v)))
      throw std::domain_error("a vertex of the inequality region is not among the points");
  return p;
}

std::vector<HalfSpace> order_polytope_hrep(const Poset& p,
                                           const std::vector<int>& coord_of) {
  check_coords(p, coord_of);
  const int n = p.size();
  std::vector<HalfSpace> hs;
  auto zero = [&] {
    HalfSpace h;
    h.normal = RVector::Zero(n);
    h.rhs = 0;
    return h;
  };
  for (int e = 0; e < n; ++e)
    for (int u : p.upper_covers(e)) {
      HalfSpace h = zero();  // x_u <= x_e
      h.normal(coord_of[u]) = 1;
      h.normal(coord_of[e]) = -1;
      hs.push_back(std::move(h));
    }
  for (int e : p.minimal_elements()) {
    HalfSpace h = zero();  // x_e <= 1
    h.normal(coord_of[e]) = 1;
    h.rhs = 1;
    hs.push_back(std::move(h));
  }
  for (int e : p.maximal_elements()) {
    HalfSpace h = zero();  // 0 <= x_e
    h.normal(coord_of[e]) = -1;
    hs.push_back(std::move(h));
  }
  return hs;
}

RationalPolytope order_polytope(const Poset& p) {
  std::vector<int> id(p.size());
  for (int i = 0; i < p.size(); ++i) id[i] = i;
  return RationalPolytope::from_hrep(p.size(), order_polytope_hrep(p, id));
}

std::vector<std::vector<std::pair<int, int>>> dyck_paths(int d, int n) {
  if (d < 1 || n <= d) throw std::invalid_argument("need 1 <= d < n");
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> path;
  std::function<void(int, int)> go = [&](int i, int j) {
    path.emplace_back(i, j);
    if (i == d && j == n - 1) {
      out.push_back(path);
    } else {
      if (i < d) go(i + 1, j);
      if (j < n - 1) go(i, j + 1);
    }
    path.pop_back();
  };
  go(1, d);
  return out;
}

RationalPolytope fflv_polytope(int d, int n) {
  const int dim = d * (n - d);
  std::vector<HalfSpace> hs;
  for (int idx = 0; idx < dim; ++idx) {
    HalfSpace h;
    h.normal = RVector::Zero(dim);
    h.normal(idx) = -1;  // 0 <= x
    h.rhs = 0;
    hs.push_back(std::move(h));
  }
  for (const auto& path : dyck_paths(d, n)) {
    HalfSpace h;
    h.normal = RVector::Zero(dim);
    for (auto [i, j] : path) h.normal(root_index(d, n, i, j)) = 1;
    h.rhs = 1;
    hs.push_back(std::move(h));
  }
  return RationalPolytope::from_hrep(dim, hs);
}

BodyOnChain no_body(const DistributiveLattice& l, const Chain& chain) {
  Enumeration en = chain_to_enumeration(l, chain);
  const int rank = l.rank();
  std::vector<int> pos(rank);
  for (int i = 0; i < rank; ++i) pos[en[i]] = i;

  std::vector<std::vector<long long>> points;
  std::vector<RVector> rpoints;
  for (int e = 0; e < l.size(); ++e) {
    std::vector<long long> chi(rank, 0);
    Mask m = l.spec_star(e);
    for (int j = 0; j < rank; ++j)
      if ((m >> j) & 1) chi[pos[j]] = 1;
    RVector v(rank);
    for (int i = 0; i < rank; ++i) v(i) = chi[i];
    points.push_back(std::move(chi));
    rpoints.push_back(std::move(v));
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw std::logic_error("duplicate support vector");

  BodyOnChain body;
  body.polytope = RationalPolytope::from_points_and_hrep(
      rpoints, rank, order_polytope_hrep(l.jposet(), pos));
  body.points = std::move(points);
  body.enumeration = std::move(en);
  return body;
}

std::vector<std::vector<long long>> lattice_points(const RationalPolytope& p,
                                                   long long k) {
  if (k < 0) throw std::invalid_argument("dilation must be nonnegative");
  const int dim = p.dim();
  std::vector<long long> lo(dim), hi(dim);
  for (int c = 0; c < dim; ++c) {
    Rational mn = p.vertices()[0](c), mx = mn;
    for (const RVector& v : p.vertices()) {
      mn = std::min(mn, v(c));
      mx = std::max(mx, v(c));
    }
    lo[c] = rceil(mn * k);
    hi[c] = rfloor(mx * k);
  }

  std::vector<std::vector<long long>> out;
  std::vector<long long> x(lo);
  for (;;) {
    bool ok = true;
    for (const HalfSpace& h : p.halfspaces()) {
      Rational s = 0;
      for (int c = 0; c < dim; ++c)
        if (h.normal(c) != 0) s += h.normal(c) * x[c];
      if (s > h.rhs * k) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    int c = dim - 1;
    while (c >= 0 && x[c] == hi[c]) {
      x[c] = lo[c];
      --c;
    }
    if (c < 0) break;
    ++x[c];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> ehrhart_counts(const RationalPolytope& p, int upto) {
  std::vector<long long> counts;
  for (int k = 0; k <= upto; ++k)
    counts.push_back(static_cast<long long>(lattice_points(p, k).size()));
  return counts;
}

std::vector<Rational> polynomial_fit(const std::vector<long long>& counts) {
  const int m = static_cast<int>(counts.size());
  if (m == 0) throw std::invalid_argument("no counts to fit");
  RMatrix a(m, m);
  RVector b(m);
  for (int k = 0; k < m; ++k) {
    Rational pw = 1;
    for (int j = 0; j < m; ++j) {
      a(k, j) = pw;
      pw *= k;
    }
    b(k) = counts[k];
  }
  auto x = rsolve(a, b);
  if (!x) throw std::logic_error("interpolation failed");
  return std::vector<Rational>(x->data(), x->data() + m);
}

std::vector<Simplex> triangulate(const DistributiveLattice& l,
                                 const Chain& refchain, std::size_t cap) {
  Enumeration ref = chain_to_enumeration(l, refchain);
  const int rank = l.rank();
  std::vector<int> pos(rank);
  for (int i = 0; i < rank; ++i) pos[ref[i]] = i;

  std::vector<Simplex> out;
  for (const Chain& c : maximal_chains(l, cap)) {
    Simplex s;
    s.chain = c;
    for (int e : c) {
      RVector v = RVector::Zero(rank);
      Mask m = l.spec_star(e);
      for (int j = 0; j < rank; ++j)
        if ((m >> j) & 1) v(pos[j]) = 1;
      s.verts.push_back(std::move(v));
    }
    out.push_back(std::move(s));
  }
  return out;
}

Rational simplex_det(const Simplex& s) {
  if (s.verts.empty()) throw std::invalid_argument("empty simplex");
  const int m = static_cast<int>(s.verts.size()) - 1;
  RMatrix edges(m, m);
  for (int i = 0; i < m; ++i) {
    if (s.verts[i + 1].size() != m)
      throw std::invalid_argument("simplex is not full-dimensional");
    edges.row(i) = (s.verts[i + 1] - s.verts[0]).transpose();
  }
  Rational det = rdet(edges);
  return det < 0 ? Rational(-det) : det;
}

RVector transfer(const Poset& p, const std::vector<int>& coord_of,
                 const RVector& x) {
  check_coords(p, coord_of);
  if (x.size() != p.size())
    throw std::invalid_argument("point has the wrong dimension");
  RVector y(p.size());
  for (int e = 0; e < p.size(); ++e) {
    Rational mx = 0;
    for (int u : p.upper_covers(e)) mx = std::max(mx, x(coord_of[u]));
    y(coord_of[e]) = x(coord_of[e]) - mx;
  }
  return y;
}

RVector transfer_inverse(const Poset& p, const std::vector<int>& coord_of,
                         const RVector& y) {
  check_coords(p, coord_of);
  if (y.size() != p.size())
    throw std::invalid_argument("point has the wrong dimension");
  RVector x(p.size());
  std::vector<int> order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int e = *it;
    Rational mx = 0;
    for (int u : p.upper_covers(e)) mx = std::max(mx, x(coord_of[u]));
    x(coord_of[e]) = y(coord_of[e]) + mx;
  }
  return x;
}

}  // namespace hibi
