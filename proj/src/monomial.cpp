#include "hibi/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hibi {

std::vector<HibiRelation> hibi_ideal_generators(const DistributiveLattice& l) {
  std::vector<HibiRelation> out;
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b) {
      if (l.leq(a, b) || l.leq(b, a)) continue;
      out.push_back({a, b, l.join(a, b), l.meet(a, b)});
    }
  return out;
}

YExp element_to_y(const DistributiveLattice& l, int e) {
  YExp y(l.rank() + 1, 0);
  y[0] = 1;
  Mask m = l.spec_star(e);
  for (int j = 0; j < l.rank(); ++j)
    if ((m >> j) & 1) y[1 + j] = 1;
  return y;
}

YExp xhat(const DistributiveLattice& l, int e) {
  YExp y = element_to_y(l, e);
  y[0] = 0;
  return y;
}

YExp y_product(const DistributiveLattice& l, const std::vector<int>& factors) {
  YExp y(l.rank() + 1, 0);
  for (int f : factors) {
    YExp t = element_to_y(l, f);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += t[i];
  }
  return y;
}

YExp xhat_product(const DistributiveLattice& l,
                  const std::vector<int>& factors) {
  YExp y = y_product(l, factors);
  y[0] = 0;
  return y;
}

bool is_standard(const DistributiveLattice& l,
                 const std::vector<int>& factors) {
  for (std::size_t k = 0; k + 1 < factors.size(); ++k)
    if (!l.leq(factors[k + 1], factors[k])) return false;
  return true;
}

std::vector<StandardMonomial> standard_basis(const DistributiveLattice& l,
                                             int r) {
  if (r < 0) throw std::invalid_argument("negative degree");
  std::vector<StandardMonomial> out;
  std::vector<int> cur;
  // Descending factor tuples emitted in ascending lexicographic order.
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    int lo = 0, hi = cur.empty() ? l.size() - 1 : cur.back();
    for (int e = lo; e <= hi; ++e) {
      if (!cur.empty() && !l.leq(e, cur.back())) continue;
      cur.push_back(e);
      rec(remaining - 1);
      cur.pop_back();
    }
  };
  rec(r);
  return out;
}

RewriteResult rewrite_to_standard(const DistributiveLattice& l,
                                  std::vector<int> factors,
                                  std::vector<std::vector<int>>* trace) {
  std::sort(factors.begin(), factors.end());
  if (trace) trace->push_back(factors);
  int steps = 0;
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      int a = factors[k], b = factors[k + 1];
      if (l.leq(a, b) || l.leq(b, a)) continue;
      factors[k] = l.meet(a, b);
      factors[k + 1] = l.join(a, b);
      std::sort(factors.begin(), factors.end());
      ++steps;
      if (trace) trace->push_back(factors);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  // Ascending by id with all adjacent pairs comparable means ascending in the
  // lattice order; the standard form stores the reverse (weakly decreasing).
  std::reverse(factors.begin(), factors.end());
  return {{factors}, steps};
}

}  // namespace hibi
