#include "hibi/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace hibi {

bool is_maximal_chain(const DistributiveLattice& l, const Chain& c) {
  if (static_cast<int>(c.size()) != l.rank() + 1) return false;
  if (c.front() != l.bottom() || c.back() != l.top()) return false;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Mask a = l.mask_of(c[k]), b = l.mask_of(c[k + 1]);
    if ((a & b) != a || popcount(b) != popcount(a) + 1) return false;
  }
  return true;
}

void for_each_maximal_chain(const DistributiveLattice& l,
                            const std::function<void(const Chain&)>& fn,
                            std::size_t cap) {
  Chain cur{l.bottom()};
  std::size_t emitted = 0;
  std::function<void()> dfs = [&]() {
    if (cur.back() == l.top()) {
      if (++emitted > cap) throw std::domain_error("chain count exceeds cap");
      fn(cur);
      return;
    }
    for (int u : l.upper_covers(cur.back())) {
      cur.push_back(u);
      dfs();
      cur.pop_back();
    }
  };
  dfs();
}

std::vector<Chain> maximal_chains(const DistributiveLattice& l,
                                  std::size_t cap) {
  std::vector<Chain> out;
  for_each_maximal_chain(l, [&](const Chain& c) { out.push_back(c); }, cap);
  return out;
}

unsigned long long count_maximal_chains(const DistributiveLattice& l) {
  return l.jposet().count_linear_extensions();
}

Enumeration chain_to_enumeration(const DistributiveLattice& l,
                                 const Chain& c) {
  if (!is_maximal_chain(l, c))
    throw std::invalid_argument("not a maximal chain");
  Enumeration e;
  e.reserve(l.rank());
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Mask diff = l.mask_of(c[k + 1]) & ~l.mask_of(c[k]);
    e.push_back(__builtin_ctzll(diff));
  }
  return e;
}

Chain enumeration_to_chain(const DistributiveLattice& l,
                           const Enumeration& e) {
  if (static_cast<int>(e.size()) != l.rank())
    throw std::invalid_argument("enumeration has wrong length");
  std::vector<bool> seen(l.rank(), false);
  for (int j : e) {
    if (j < 0 || j >= l.rank() || seen[j])
      throw std::invalid_argument("enumeration is not a permutation");
    seen[j] = true;
  }
  Chain c{l.bottom()};
  Mask m = 0;
  for (int j : e) {
    m |= Mask{1} << j;
    if (!l.jposet().is_ideal(m))
      throw std::invalid_argument("enumeration is not order-preserving");
    c.push_back(l.index_of_mask(m));
  }
  return c;
}

}  // namespace hibi
