#include "hibi/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hibi {

namespace {

std::string brace_label(const Poset& p, Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e = 0; e < p.size(); ++e)
    if ((m >> e) & 1) {
      if (!first) s += ",";
      s += p.label(e);
      first = false;
    }
  return s + "}";
}

}  // namespace

DistributiveLattice DistributiveLattice::build(Poset jposet,
                                               std::vector<Mask> elems,
                                               std::vector<std::string> labels) {
  DistributiveLattice l;
  l.jposet_ = std::move(jposet);
  l.elems_ = std::move(elems);
  l.labels_ = std::move(labels);
  for (int i = 0; i < static_cast<int>(l.elems_.size()); ++i)
    l.index_.emplace(l.elems_[i], i);
  l.irr_elem_.resize(l.jposet_.size());
  for (int j = 0; j < l.jposet_.size(); ++j) {
    auto it = l.index_.find(l.jposet_.down_set(j));
    if (it == l.index_.end())
      throw std::invalid_argument("principal ideal missing from element set");
    l.irr_elem_[j] = it->second;
  }
  return l;
}

DistributiveLattice DistributiveLattice::ideals_of(const Poset& p,
                                                   std::size_t cap) {
  std::vector<Mask> elems = p.ideals(cap);
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (Mask m : elems) labels.push_back(brace_label(p, m));
  return build(p, std::move(elems), std::move(labels));
}

DistributiveLattice DistributiveLattice::from_order(
    std::vector<std::string> labels,
    const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw std::invalid_argument("empty lattice");

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) le[a][b] = leq(a, b);

  for (int a = 0; a < n; ++a) {
    if (!le[a][a]) throw std::invalid_argument("order is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && le[a][b] && le[b][a])
        throw std::invalid_argument("order is not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (le[a][b] && le[b][c] && !le[a][c])
          throw std::invalid_argument("order is not transitive");
    }
  }

  // Exact join/meet tables; error out if some bound is missing or ambiguous.
  auto bound = [&](int a, int b, bool upper) {
    std::vector<int> cands;
    for (int c = 0; c < n; ++c)
      if (upper ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]))
        cands.push_back(c);
    for (int c : cands) {
      bool extreme = true;
      for (int d : cands)
        if (upper ? !le[c][d] : !le[d][c]) {
          extreme = false;
          break;
        }
      if (extreme) return c;
    }
    throw std::invalid_argument(upper ? "a pair lacks a least upper bound"
                                      : "a pair lacks a greatest lower bound");
  };
  std::vector<std::vector<int>> jn(n, std::vector<int>(n)),
      mt(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      jn[a][b] = bound(a, b, true);
      mt[a][b] = bound(a, b, false);
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mt[a][jn[b][c]] != jn[mt[a][b]][mt[a][c]])
          throw std::invalid_argument("lattice is not distributive");

  // Lower covers in the element order.
  auto lower_covers_of = [&](int e) {
    std::vector<int> lc;
    for (int c = 0; c < n; ++c) {
      if (c == e || !le[c][e]) continue;
      bool covered = true;
      for (int d = 0; d < n; ++d)
        if (d != c && d != e && le[c][d] && le[d][e]) {
          covered = false;
          break;
        }
      if (covered) lc.push_back(c);
    }
    return lc;
  };

  std::vector<int> irr;  // proper join-irreducibles: exactly one lower cover
  for (int e = 0; e < n; ++e)
    if (lower_covers_of(e).size() == 1) irr.push_back(e);
  const int nirr = static_cast<int>(irr.size());
  if (nirr > 64)
    throw std::invalid_argument("more than 64 join-irreducibles");

  // Deterministic jposet index order: by height in the lattice, then label.
  std::vector<int> hts(nirr);
  for (int j = 0; j < nirr; ++j) {
    int h = 0;
    for (int m : irr)
      if (le[m][irr[j]]) ++h;
    hts[j] = h;
  }
  std::vector<int> order(nirr);
  for (int j = 0; j < nirr; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (hts[x] != hts[y]) return hts[x] < hts[y];
    return labels[irr[x]] < labels[irr[y]];
  });
  std::vector<int> jelem(nirr);
  std::vector<std::string> jlabels(nirr);
  for (int j = 0; j < nirr; ++j) {
    jelem[j] = irr[order[j]];
    jlabels[j] = labels[jelem[j]];
  }

  // Covers of the induced order on the join-irreducibles.
  std::vector<std::pair<int, int>> jcovers;
  for (int a = 0; a < nirr; ++a)
    for (int b = 0; b < nirr; ++b) {
      if (a == b || !le[jelem[a]][jelem[b]]) continue;
      bool covered = true;
      for (int c = 0; c < nirr; ++c)
        if (c != a && c != b && le[jelem[a]][jelem[c]] &&
            le[jelem[c]][jelem[b]]) {
          covered = false;
          break;
        }
      if (covered) jcovers.emplace_back(a, b);
    }
  Poset jposet = Poset::from_covers(jlabels, jcovers);

  // Birkhoff map: element -> bitmask of join-irreducibles below it. Verified
  // to be a bijection onto the ideal family that turns join/meet into or/and.
  std::vector<Mask> masks(n, 0);
  for (int e = 0; e < n; ++e)
    for (int j = 0; j < nirr; ++j)
      if (le[jelem[j]][e]) masks[e] |= Mask{1} << j;
  std::vector<Mask> sorted_masks = masks;
  std::sort(sorted_masks.begin(), sorted_masks.end());
  if (std::adjacent_find(sorted_masks.begin(), sorted_masks.end()) !=
      sorted_masks.end())
    throw std::invalid_argument("join-irreducible support map is not injective");
  std::sort(sorted_masks.begin(), sorted_masks.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  if (sorted_masks != jposet.ideals())
    throw std::invalid_argument(
        "elements do not biject onto ideals of the join-irreducible poset");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (masks[jn[a][b]] != (masks[a] | masks[b]) ||
          masks[mt[a][b]] != (masks[a] & masks[b]))
        throw std::invalid_argument(
            "join/meet do not match union/intersection of supports");

  // Canonical element order: (height, mask value).
  std::vector<int> eorder(n);
  for (int e = 0; e < n; ++e) eorder[e] = e;
  std::sort(eorder.begin(), eorder.end(), [&](int x, int y) {
    int px = popcount(masks[x]), py = popcount(masks[y]);
    if (px != py) return px < py;
    return masks[x] < masks[y];
  });
  std::vector<Mask> elems(n);
  std::vector<std::string> elabels(n);
  for (int i = 0; i < n; ++i) {
    elems[i] = masks[eorder[i]];
    elabels[i] = labels[eorder[i]];
  }
  return build(std::move(jposet), std::move(elems), std::move(elabels));
}

int DistributiveLattice::index_of_label(const std::string& label) const {
  for (int e = 0; e < size(); ++e)
    if (labels_[e] == label) return e;
  throw std::invalid_argument("unknown lattice element label: " + label);
}

int DistributiveLattice::index_of_mask(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw std::invalid_argument("mask is not a lattice element");
  return it->second;
}

std::vector<int> DistributiveLattice::upper_covers(int e) const {
  std::vector<int> out;
  Mask m = elems_.at(e);
  for (int j = 0; j < jposet_.size(); ++j) {
    if ((m >> j) & 1) continue;
    Mask nxt = m | (Mask{1} << j);
    auto it = index_.find(nxt);
    if (it != index_.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DistributiveLattice::lower_covers(int e) const {
  std::vector<int> out;
  Mask m = elems_.at(e);
  for (int j = 0; j < jposet_.size(); ++j) {
    if (!((m >> j) & 1)) continue;
    Mask nxt = m & ~(Mask{1} << j);
    auto it = index_.find(nxt);
    if (it != index_.end()) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> DistributiveLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < size(); ++e)
    for (int u : upper_covers(e)) out.emplace_back(e, u);
  std::sort(out.begin(), out.end());
  return out;
}

int DistributiveLattice::irreducible_index(int e) const {
  Mask m = elems_.at(e);
  if (m == 0) return -1;
  Mask mx = jposet_.max_of(m);
  if (popcount(mx) != 1) return -2;
  int j = __builtin_ctzll(mx);
  return jposet_.down_set(j) == m ? j : -2;
}

bool DistributiveLattice::is_irreducible(int e) const {
  return irreducible_index(e) != -2;
}

std::vector<int> DistributiveLattice::irreducibles() const {
  std::vector<int> out{bottom()};
  for (int j = 0; j < jposet_.size(); ++j) out.push_back(irr_elem_[j]);
  return out;
}

}  // namespace hibi
