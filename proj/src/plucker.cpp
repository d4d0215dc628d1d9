#include "hibi/plucker.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hibi/linalg.hpp"

namespace hibi {

std::string tuple_label(const Tuple& t, int n) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (n > 9 && k) s += ".";
    s += std::to_string(t[k]);
  }
  return s;
}

Tuple tuple_from_label(const std::string& s, int d, int n) {
  Tuple t;
  if (n > 9) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t dot = s.find('.', pos);
      if (dot == std::string::npos) dot = s.size();
      t.push_back(std::stoi(s.substr(pos, dot - pos)));
      pos = dot + 1;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad tuple label: " + s);
      t.push_back(c - '0');
    }
  }
  if (static_cast<int>(t.size()) != d)
    throw std::invalid_argument("tuple label has wrong length: " + s);
  for (int k = 0; k < d; ++k) {
    if (t[k] < 1 || t[k] > n)
      throw std::invalid_argument("tuple entry out of range: " + s);
    if (k && t[k] <= t[k - 1])
      throw std::invalid_argument("tuple not strictly increasing: " + s);
  }
  return t;
}

int GrassmannLattice::index_of_tuple(const Tuple& t) const {
  for (int e = 0; e < static_cast<int>(tuples.size()); ++e)
    if (tuples[e] == t) return e;
  throw std::invalid_argument("tuple is not a lattice element");
}

GrassmannLattice build_idn(int d, int n, std::size_t cap) {
  if (d < 1 || n <= d) throw std::invalid_argument("need 1 <= d < n");
  unsigned long long count = 1;
  for (int k = 1; k <= d; ++k) count = count * (n - d + k) / k;
  if (count > cap)
    throw std::domain_error("element count C(n,d) exceeds cap");

  std::vector<Tuple> tuples;
  Tuple cur(d);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    tuples.push_back(cur);
    int k = d - 1;
    while (k >= 0 && cur[k] == n - d + 1 + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }

  std::vector<std::string> labels;
  labels.reserve(tuples.size());
  for (const Tuple& t : tuples) labels.push_back(tuple_label(t, n));

  GrassmannLattice gl{d, n,
                      DistributiveLattice::from_order(
                          labels,
                          [&](int a, int b) {
                            for (int k = 0; k < d; ++k)
                              if (tuples[a][k] > tuples[b][k]) return false;
                            return true;
                          }),
                      {}};
  gl.tuples.resize(tuples.size());
  for (int e = 0; e < gl.lattice.size(); ++e)
    gl.tuples[e] = tuple_from_label(gl.lattice.label(e), d, n);
  return gl;
}

IrreducibleClass classify_irreducible(const Tuple& t, int d, int n) {
  (void)n;
  int s = 0;
  while (s < d && t[s] == s + 1) ++s;
  if (s == d) return {true, 0, 0};  // bottom
  for (int k = s; k + 1 < d; ++k)
    if (t[k + 1] != t[k] + 1) return {false, 0, 0};
  return {true, s, t[s] - 1};
}

std::vector<long long> weight_of(const Tuple& t, int n) {
  std::vector<long long> w(n, 0);
  for (int e : t) w[e - 1] += 1;
  return w;
}

std::vector<long long> omega_alpha(const GrassmannLattice& gl, int e) {
  std::vector<long long> a(gl.n - 1, 0);
  Mask m = gl.lattice.spec_star(e);
  for (int j = 0; j < gl.lattice.rank(); ++j)
    if ((m >> j) & 1) {
      int el = gl.lattice.irreducible_element(j);
      IrreducibleClass c = classify_irreducible(gl.tuples[el], gl.d, gl.n);
      if (!c.irreducible || c.t < 1)
        throw std::logic_error("non-irreducible element in support");
      a[c.t - 1] += 1;
    }
  return a;
}

std::vector<long long> alpha_to_epsilon(const std::vector<long long>& a,
                                        int n) {
  std::vector<long long> w(n, 0);
  for (int t = 1; t <= n - 1; ++t) {
    w[t] += a[t - 1];      // eps_{t+1}
    w[t - 1] -= a[t - 1];  // -eps_t
  }
  return w;
}

Poset root_poset(int d, int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= d; ++i)
    for (int j = d; j <= n - 1; ++j) {
      labels.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
      int idx = root_index(d, n, i, j);
      if (i < d) covers.emplace_back(idx, root_index(d, n, i + 1, j));
      if (j < n - 1) covers.emplace_back(idx, root_index(d, n, i, j + 1));
    }
  return Poset::from_covers(std::move(labels), std::move(covers));
}

int root_index(int d, int n, int i, int j) {
  if (i < 1 || i > d || j < d || j > n - 1)
    throw std::invalid_argument("root cell out of range");
  return (i - 1) * (n - d) + (j - d);
}

std::pair<int, int> root_cell(int d, int n, int idx) {
  if (idx < 0 || idx >= d * (n - d))
    throw std::invalid_argument("root index out of range");
  return {idx / (n - d) + 1, idx % (n - d) + d};
}

std::vector<int> irreducible_to_root(const GrassmannLattice& gl) {
  const Poset& jp = gl.lattice.jposet();
  Poset rp = root_poset(gl.d, gl.n);
  if (jp.size() != rp.size())
    throw std::logic_error("irreducible count does not match grid size");
  std::vector<int> img(jp.size());
  for (int j = 0; j < jp.size(); ++j) {
    int el = gl.lattice.irreducible_element(j);
    IrreducibleClass c = classify_irreducible(gl.tuples[el], gl.d, gl.n);
    if (!c.irreducible || (c.s == 0 && c.t == 0))
      throw std::logic_error("proper irreducible expected");
    img[j] = root_index(gl.d, gl.n, gl.d - c.s, gl.d - 1 + c.t - c.s);
  }
  for (int a = 0; a < jp.size(); ++a)
    for (int b = 0; b < jp.size(); ++b)
      if (jp.leq(a, b) != rp.leq(img[a], img[b]))
        throw std::logic_error("grid identification is not an order isomorphism");
  return img;
}

QPoly expand_in_minors(const GrassmannLattice& gl, const QPoly& p) {
  QPoly out(gl.d * gl.n);
  for (const auto& [e, c] : p.terms()) {
    QPoly term = QPoly::constant(gl.d * gl.n, c);
    for (int v = 0; v < p.nvars(); ++v)
      for (int k = 0; k < e[v]; ++k)
        term = term * minor_poly(gl.d, gl.n, gl.tuples[v]);
    out += term;
  }
  return out;
}

namespace {

// Sorts a tuple ascending; returns 0 if it has a repeat, else the sign.
int normalize_tuple(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) sign = -sign;
    }
  std::sort(t.begin(), t.end());
  return sign;
}

}  // namespace

std::vector<QPoly> plucker_relations(const GrassmannLattice& gl,
                                     int* rejected) {
  const int d = gl.d;
  const int nv = static_cast<int>(gl.tuples.size());
  if (rejected) *rejected = 0;
  std::vector<QPoly> out;

  for (int ia = 0; ia < nv; ++ia)
    for (int ib = 0; ib < nv; ++ib)
      for (int t = 1; t <= d; ++t) {
        const Tuple& I = gl.tuples[ia];
        const Tuple& J = gl.tuples[ib];
        // d+1 shuffled symbols: the first t of I and the last d-t+1 of J.
        std::vector<int> symbols(I.begin(), I.begin() + t);
        symbols.insert(symbols.end(), J.begin() + (t - 1), J.end());

        QPoly rel(nv);
        std::vector<int> sel(t);
        std::iota(sel.begin(), sel.end(), 0);
        for (;;) {
          std::vector<int> rest;
          for (int k = 0; k <= d; ++k)
            if (!std::binary_search(sel.begin(), sel.end(), k))
              rest.push_back(k);
          // Sign of the shuffle = parity of inversions of (sel, rest).
          std::vector<int> perm = sel;
          perm.insert(perm.end(), rest.begin(), rest.end());
          int sign = 1;
          for (std::size_t x = 0; x < perm.size(); ++x)
            for (std::size_t y = x + 1; y < perm.size(); ++y)
              if (perm[x] > perm[y]) sign = -sign;

          Tuple ti, tj;
          for (int k : sel) ti.push_back(symbols[k]);
          ti.insert(ti.end(), I.begin() + t, I.end());
          tj.assign(J.begin(), J.begin() + (t - 1));
          for (int k : rest) tj.push_back(symbols[k]);

          int si = normalize_tuple(ti), sj = normalize_tuple(tj);
          if (si != 0 && sj != 0) {
            std::vector<int> e(nv, 0);
            e[gl.index_of_tuple(ti)] += 1;
            e[gl.index_of_tuple(tj)] += 1;
            rel.add_term(e, sign * si * sj);
          }

          // next t-combination of {0..d}
          int k = t - 1;
          while (k >= 0 && sel[k] == d - t + 1 + k) --k;
          if (k < 0) break;
          ++sel[k];
          for (int j2 = k + 1; j2 < t; ++j2) sel[j2] = sel[j2 - 1] + 1;
        }

        if (rel.is_zero()) continue;
        if (!expand_in_minors(gl, rel).is_zero()) {
          if (rejected) ++*rejected;
          continue;
        }
        // Normalize (leading coefficient 1) and deduplicate.
        rel = rel * (Rational(1) / rel.terms().begin()->second);
        if (std::find(out.begin(), out.end(), rel) == out.end())
          out.push_back(rel);
      }
  return out;
}

StraighteningEntry straighten(const GrassmannLattice& gl, int i1, int i2) {
  const DistributiveLattice& l = gl.lattice;
  if (l.leq(i1, i2) || l.leq(i2, i1))
    throw std::invalid_argument("straightening a comparable pair");
  const int d = gl.d;
  const int jd = l.join(i1, i2), md = l.meet(i1, i2);

  std::vector<int> multiset(gl.tuples[i1]);
  multiset.insert(multiset.end(), gl.tuples[i2].begin(), gl.tuples[i2].end());
  std::sort(multiset.begin(), multiset.end());

  // Candidate standard splits of the combined multiset, sandwiched between
  // the join and the meet.
  std::set<std::pair<int, int>> cand_set;
  std::vector<int> sel(d);
  std::iota(sel.begin(), sel.end(), 0);
  for (;;) {
    Tuple k1, k2;
    for (int p = 0, q = 0; p < 2 * d; ++p) {
      if (q < d && sel[q] == p) {
        k1.push_back(multiset[p]);
        ++q;
      } else {
        k2.push_back(multiset[p]);
      }
    }
    auto strict = [](const Tuple& t) {
      for (std::size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k + 1] <= t[k]) return false;
      return true;
    };
    if (strict(k1) && strict(k2)) {
      int a = gl.index_of_tuple(k1), b = gl.index_of_tuple(k2);
      if (l.leq(b, a) && l.leq(jd, a) && l.leq(b, md))
        cand_set.emplace(a, b);
      else if (l.leq(a, b) && l.leq(jd, b) && l.leq(a, md))
        cand_set.emplace(b, a);
    }
    int k = d - 1;
    while (k >= 0 && sel[k] == d + k) --k;
    if (k < 0) break;
    ++sel[k];
    for (int j2 = k + 1; j2 < d; ++j2) sel[j2] = sel[j2 - 1] + 1;
  }

  std::vector<std::pair<int, int>> cands;
  cands.emplace_back(jd, md);  // leading pair first
  for (const auto& c : cand_set)
    if (c != std::make_pair(jd, md)) cands.push_back(c);
  if (!cand_set.count({jd, md}))
    throw std::logic_error("leading pair is not a standard split");

  // Exact solve: minor(i1)*minor(i2) = sum coeff * minor(k1)*minor(k2).
  QPoly lhs = minor_poly(d, gl.n, gl.tuples[i1]) *
              minor_poly(d, gl.n, gl.tuples[i2]);
  std::vector<QPoly> cols;
  cols.reserve(cands.size());
  std::map<std::vector<int>, int> rows;
  auto row_of = [&](const std::vector<int>& e) {
    auto it = rows.find(e);
    if (it == rows.end()) it = rows.emplace(e, rows.size()).first;
    return it->second;
  };
  for (const auto& [a, b] : cands) {
    cols.push_back(minor_poly(d, gl.n, gl.tuples[a]) *
                   minor_poly(d, gl.n, gl.tuples[b]));
    for (const auto& [e, c] : cols.back().terms()) row_of(e);
  }
  for (const auto& [e, c] : lhs.terms()) row_of(e);

  RMatrix A = RMatrix::Zero(rows.size(), cands.size());
  RVector b = RVector::Zero(rows.size());
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (const auto& [e, c] : cols[j].terms()) A(row_of(e), j) = c;
  for (const auto& [e, c] : lhs.terms()) b(row_of(e)) = c;

  if (rrank(A) != static_cast<Eigen::Index>(cands.size()))
    throw std::logic_error("straightening system is underdetermined");
  auto x = rsolve(A, b);
  if (!x) throw std::logic_error("straightening system is inconsistent");

  StraighteningEntry entry;
  entry.i1 = i1;
  entry.i2 = i2;
  for (std::size_t j = 0; j < cands.size(); ++j)
    if ((*x)(j) != 0)
      entry.terms.push_back({cands[j].first, cands[j].second, (*x)(j)});
  return entry;
}

const StraighteningEntry& StraighteningTable::at(int a, int b) const {
  auto it = index.find({std::min(a, b), std::max(a, b)});
  if (it == index.end())
    throw std::invalid_argument("pair is not in the straightening table");
  return entries[it->second];
}

StraighteningTable straightening_table(const GrassmannLattice& gl) {
  StraighteningTable t;
  const DistributiveLattice& l = gl.lattice;
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b) {
      if (l.leq(a, b) || l.leq(b, a)) continue;
      t.index.emplace(std::make_pair(a, b), t.entries.size());
      t.entries.push_back(straighten(gl, a, b));
    }
  return t;
}

GovernedReport governed_check(const GrassmannLattice& gl,
                              const StraighteningTable& table) {
  const DistributiveLattice& l = gl.lattice;
  GovernedReport report;
  report.pass = true;

  auto max_elems = [&](int e) {
    std::vector<int> out;
    if (e == l.bottom()) {
      out.push_back(l.bottom());
      return out;
    }
    Mask mx = l.max_spec_star(e);
    for (int j = 0; j < l.rank(); ++j)
      if ((mx >> j) & 1) out.push_back(l.irreducible_element(j));
    return out;
  };

  for (const auto& entry : table.entries) {
    GovernedPairReport pr;
    pr.i1 = entry.i1;
    pr.i2 = entry.i2;
    const int jd = l.join(entry.i1, entry.i2);
    const int md = l.meet(entry.i1, entry.i2);
    pr.leading_ok = !entry.terms.empty() && entry.terms[0].k1 == jd &&
                    entry.terms[0].k2 == md && entry.terms[0].coeff == 1;
    pr.pass = pr.leading_ok;

    for (std::size_t ti = 1; ti < entry.terms.size(); ++ti) {
      const auto& term = entry.terms[ti];
      GovernedTermReport tr;
      tr.k1 = term.k1;
      tr.k2 = term.k2;
      std::vector<int> mk1 = max_elems(term.k1), mk2 = max_elems(term.k2);
      for (int m1 : max_elems(jd))
        for (int m2 : max_elems(md)) {
          if (!l.leq(m2, m1)) continue;
          GovernedCase gc;
          gc.m1 = m1;
          gc.m2 = m2;
          for (int h : mk1)
            if (l.leq(m1, h) && h != m1) {
              gc.rule = 1;
              gc.h = h;
              break;
            }
          if (gc.rule == 0) {
            for (int h : mk1) {
              if (h != m1) continue;
              for (int hp : mk1)
                if (hp != h && l.leq(m2, hp) && hp != m2) {
                  gc.rule = 2;
                  gc.h = h;
                  gc.hprime = hp;
                  break;
                }
              break;
            }
          }
          if (gc.rule == 0 &&
              std::find(mk1.begin(), mk1.end(), m1) != mk1.end()) {
            for (int hp : mk2)
              if (l.leq(m2, hp)) {
                gc.rule = 3;
                gc.h = m1;
                gc.hprime = hp;
                break;
              }
          }
          if (gc.rule == 0) tr.pass = false;
          tr.cases.push_back(gc);
        }
      if (!tr.pass) pr.pass = false;
      pr.terms.push_back(std::move(tr));
    }
    if (!pr.pass) report.pass = false;
    report.pairs.push_back(std::move(pr));
  }

  // Degree-2 standard monomials must stay linearly independent under the
  // exact minor expansion.
  std::vector<QPoly> polys;
  for (const auto& sm : standard_basis(l, 2))
    polys.push_back(minor_poly(gl.d, gl.n, gl.tuples[sm.factors[0]]) *
                    minor_poly(gl.d, gl.n, gl.tuples[sm.factors[1]]));
  report.basis_ok = poly_rank(polys) == static_cast<int>(polys.size());
  if (!report.basis_ok) report.pass = false;
  return report;
}

std::map<StandardMonomial, Rational> expand_to_standard(
    const GrassmannLattice& gl, const StraighteningTable& table,
    std::vector<int> factors) {
  const DistributiveLattice& l = gl.lattice;
  std::map<StandardMonomial, Rational> out;
  std::sort(factors.begin(), factors.end());
  std::vector<std::pair<std::vector<int>, Rational>> work{
      {std::move(factors), Rational(1)}};
  while (!work.empty()) {
    auto [f, c] = std::move(work.back());
    work.pop_back();
    std::size_t k = 0;
    for (; k + 1 < f.size(); ++k)
      if (!l.leq(f[k], f[k + 1]) && !l.leq(f[k + 1], f[k])) break;
    if (f.empty() || k + 1 >= f.size()) {
      std::reverse(f.begin(), f.end());
      out[StandardMonomial{f}] += c;
      continue;
    }
    const auto& entry = table.at(f[k], f[k + 1]);
    std::vector<int> rest;
    for (std::size_t p = 0; p < f.size(); ++p)
      if (p != k && p != k + 1) rest.push_back(f[p]);
    for (const auto& term : entry.terms) {
      std::vector<int> nf = rest;
      nf.push_back(term.k1);
      nf.push_back(term.k2);
      std::sort(nf.begin(), nf.end());
      work.emplace_back(std::move(nf), c * term.coeff);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ValueVector mu_chain(const GrassmannLattice& gl,
                     const StraighteningTable& table, const Chain& c,
                     Family family, const std::vector<int>& factors) {
  auto expansion = expand_to_standard(gl, table, factors);
  if (expansion.empty())
    throw std::invalid_argument("expansion of the zero element");
  ChainValuation cv = chain_valuation(gl.lattice, c, family,
                                      OrderTag::graded_revlex);
  std::optional<ValueVector> best;
  for (const auto& [sm, coeff] : expansion) {
    ValueVector v = valuate_laurent(cv, y_product(gl.lattice, sm.factors));
    if (!best || compare(v, *best) < 0) best = std::move(v);
  }
  return *best;
}

QuasiResult mu_quasi(const GrassmannLattice& gl,
                     const StraighteningTable& table, Family family,
                     const std::vector<int>& factors, int jobs,
                     std::size_t cap) {
  auto expansion = expand_to_standard(gl, table, factors);
  if (expansion.empty())
    throw std::invalid_argument("expansion of the zero element");
  std::vector<PolyTerm> terms;
  for (const auto& [sm, coeff] : expansion)
    terms.push_back({coeff, y_product(gl.lattice, sm.factors)});
  return quasi_valuation_poly(gl.lattice, family, std::move(terms),
                              OrderTag::graded_revlex, jobs, cap);
}

Tuple pairing_map(const Tuple& t, int d, int n) {
  (void)n;
  int s = 0;
  while (s < d && t[s] == s + 1) ++s;
  if (s == d)
    throw std::invalid_argument("pairing map is undefined on the bottom");
  Tuple out(t.begin(), t.begin() + s);
  out.push_back(s + 1);
  out.insert(out.end(), t.begin() + s, t.begin() + (d - 1));
  return out;
}

std::vector<std::pair<int, int>> beta_cells(const GrassmannLattice& gl,
                                            int e) {
  std::vector<std::pair<int, int>> cells;
  Tuple cur = gl.tuples[e];
  Tuple bottom(gl.d);
  std::iota(bottom.begin(), bottom.end(), 1);
  while (cur != bottom) {
    int s = 0;
    while (s < gl.d && cur[s] == s + 1) ++s;
    int last = cur.back();
    cells.emplace_back(s + 1, last - 1);
    Tuple nxt = pairing_map(cur, gl.d, gl.n);
    // The support weight dropped at this step must be the root interval
    // [s+1, last-1].
    std::vector<long long> a = omega_alpha(gl, gl.index_of_tuple(cur));
    std::vector<long long> b = omega_alpha(gl, gl.index_of_tuple(nxt));
    for (int t = 1; t <= gl.n - 1; ++t) {
      long long expect = (t >= s + 1 && t <= last - 1) ? 1 : 0;
      if (a[t - 1] - b[t - 1] != expect)
        throw std::logic_error("pairing step weight mismatch");
    }
    cur = std::move(nxt);
  }
  // Collected cells must be pairwise incomparable in the grid order.
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y) {
      auto [i1, j1] = cells[x];
      auto [i2, j2] = cells[y];
      if ((i1 <= i2 && j1 <= j2) || (i2 <= i1 && j2 <= j1))
        throw std::logic_error("pairing cells are not an antichain");
    }
  return cells;
}

std::vector<long long> beta_chi(const GrassmannLattice& gl, int e) {
  std::vector<long long> chi(gl.d * (gl.n - gl.d), 0);
  for (auto [i, j] : beta_cells(gl, e))
    chi[root_index(gl.d, gl.n, i, j)] = 1;
  return chi;
}

}  // namespace hibi
