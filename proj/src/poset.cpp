#include "hibi/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hibi {

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::vector<std::pair<int, int>> covers) {
  Poset p;
  p.n_ = static_cast<int>(labels.size());
  if (p.n_ > 64) throw std::invalid_argument("poset exceeds 64 elements");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate element label: " + l);
  }
  p.labels_ = std::move(labels);

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  p.ups_.assign(p.n_, {});
  p.downs_.assign(p.n_, {});
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= p.n_ || hi >= p.n_)
      throw std::invalid_argument("cover index out of range");
    if (lo == hi) throw std::invalid_argument("cover relating element to itself");
    p.ups_[lo].push_back(hi);
    p.downs_[hi].push_back(lo);
  }
  p.covers_ = std::move(covers);

  // Topological order; a leftover element means the cover digraph has a cycle.
  std::vector<int> indeg(p.n_, 0);
  for (auto& [lo, hi] : p.covers_) ++indeg[hi], (void)lo;
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int e = 0; e < p.n_; ++e)
    if (indeg[e] == 0) q.push(e);
  while (!q.empty()) {
    int e = q.top();
    q.pop();
    p.topo_.push_back(e);
    for (int u : p.ups_[e])
      if (--indeg[u] == 0) q.push(u);
  }
  if (static_cast<int>(p.topo_.size()) != p.n_)
    throw std::invalid_argument("cover relation contains a cycle");

  // Reachability closure: up_[a] = principal filter, down_[a] = principal ideal.
  p.up_.assign(p.n_, 0);
  p.down_.assign(p.n_, 0);
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    int e = *it;
    p.up_[e] = Mask{1} << e;
    for (int u : p.ups_[e]) p.up_[e] |= p.up_[u];
  }
  for (int e : p.topo_) {
    p.down_[e] = Mask{1} << e;
    for (int d : p.downs_[e]) p.down_[e] |= p.down_[d];
  }

  // Reject cover pairs implied by the rest: lo -> mid -> ... -> hi.
  for (auto& [lo, hi] : p.covers_)
    for (int mid : p.ups_[lo])
      if (mid != hi && p.leq(mid, hi))
        throw std::invalid_argument("cover pair (" + p.labels_[lo] + ", " +
                                    p.labels_[hi] +
                                    ") is transitively implied");

  for (auto& v : p.ups_) std::sort(v.begin(), v.end());
  for (auto& v : p.downs_) std::sort(v.begin(), v.end());
  return p;
}

int Poset::index_of_label(const std::string& label) const {
  for (int e = 0; e < n_; ++e)
    if (labels_[e] == label) return e;
  throw std::invalid_argument("unknown element label: " + label);
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> r;
  for (int e = 0; e < n_; ++e)
    if (downs_[e].empty()) r.push_back(e);
  return r;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> r;
  for (int e = 0; e < n_; ++e)
    if (ups_[e].empty()) r.push_back(e);
  return r;
}

bool Poset::is_ideal(Mask m) const {
  for (int e = 0; e < n_; ++e)
    if ((m >> e) & 1)
      for (int d : downs_[e])
        if (!((m >> d) & 1)) return false;
  return true;
}

bool Poset::is_antichain(Mask m) const {
  for (int a = 0; a < n_; ++a)
    if ((m >> a) & 1)
      for (int b = a + 1; b < n_; ++b)
        if (((m >> b) & 1) && (leq(a, b) || leq(b, a))) return false;
  return true;
}

Mask Poset::max_of(Mask m) const {
  Mask r = 0;
  for (int e = 0; e < n_; ++e)
    if ((m >> e) & 1) {
      bool dominated = false;
      for (int b = 0; b < n_ && !dominated; ++b)
        if (b != e && ((m >> b) & 1) && leq(e, b)) dominated = true;
      if (!dominated) r |= Mask{1} << e;
    }
  return r;
}

Mask Poset::down_closure(Mask m) const {
  Mask r = 0;
  for (int e = 0; e < n_; ++e)
    if ((m >> e) & 1) r |= down_[e];
  return r;
}

std::vector<Mask> Poset::ideals(std::size_t cap) const {
  // Breadth-first closure of {empty} under adding one allowed element.
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> todo{0};
  for (std::size_t k = 0; k < todo.size(); ++k) {
    Mask cur = todo[k];
    for (int e = 0; e < n_; ++e) {
      if ((cur >> e) & 1) continue;
      bool ok = true;
      for (int d : downs_[e])
        if (!((cur >> d) & 1)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Mask nxt = cur | (Mask{1} << e);
      if (seen.insert(nxt).second) {
        todo.push_back(nxt);
        if (seen.size() > cap)
          throw std::domain_error("ideal count exceeds cap");
      }
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

unsigned long long Poset::count_linear_extensions() const {
  // f(ideal) = number of ways to build it one element at a time.
  std::vector<Mask> ids = ideals();
  std::unordered_map<Mask, unsigned long long> f;
  f.reserve(ids.size() * 2);
  f[0] = 1;
  for (Mask m : ids) {
    if (m == 0) continue;
    unsigned long long total = 0;
    // Remove one maximal element of m to find the predecessors.
    Mask mx = max_of(m);
    for (int e = 0; e < n_; ++e)
      if ((mx >> e) & 1) total += f.at(m & ~(Mask{1} << e));
    f[m] = total;
  }
  Mask full = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
  return f.at(full);
}

}  // namespace hibi
