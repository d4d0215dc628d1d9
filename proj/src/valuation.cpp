#include "hibi/valuation.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "hibi/linalg.hpp"

namespace hibi {

int compare(const ValueVector& a, const ValueVector& b) {
  if (a.tag != b.tag) throw std::invalid_argument("comparing mixed orders");
  if (a.v.size() != b.v.size())
    throw std::invalid_argument("comparing values of different lengths");
  std::size_t lo = 0;
  if (a.tag == OrderTag::graded_revlex) {
    if (a.v[0] != b.v[0]) return a.v[0] < b.v[0] ? -1 : 1;
    lo = 1;
  }
  for (std::size_t i = a.v.size(); i-- > lo;)
    if (a.v[i] != b.v[i]) return a.v[i] < b.v[i] ? -1 : 1;
  return 0;
}

ChainValuation chain_valuation(const DistributiveLattice& l, const Chain& c,
                               Family family, OrderTag tag) {
  ChainValuation cv;
  cv.lattice = &l;
  cv.chain = c;
  cv.enumeration = chain_to_enumeration(l, c);
  cv.family = family;
  cv.tag = tag;
  const int n = l.rank();
  cv.position_of.assign(n, -1);
  for (int i = 0; i < n; ++i) cv.position_of[cv.enumeration[i]] = i;

  cv.B.assign(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    switch (family) {
      case Family::ht:
        cv.B[j][j] = 1;
        break;
      case Family::spec:
        for (int i = 0; i <= j; ++i) cv.B[i][j] = 1;
        break;
      case Family::maxspec: {
        Mask mx = l.max_spec_star(c[j + 1]);
        for (int jj = 0; jj < n; ++jj)
          if ((mx >> jj) & 1) cv.B[cv.position_of[jj]][j] = 1;
        break;
      }
    }
  }

  RMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cv.B[i][j];
  if (rdet(m) == 0) throw std::logic_error("value matrix is singular");
  return cv;
}

ValueVector valuate_laurent(const ChainValuation& cv, const YExp& w) {
  const int n = cv.lattice->rank();
  if (static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("exponent vector has wrong length");
  // y-exponents in enumeration positions, then chain-variable exponents.
  std::vector<long long> u(n + 1, 0);
  for (int i = 0; i < n; ++i) u[i] = w[1 + cv.enumeration[i]];
  std::vector<long long> x(n);
  for (int j = 0; j < n; ++j) x[j] = u[j] - u[j + 1];

  std::vector<long long> val(n, 0);
  for (int j = 0; j < n; ++j)
    if (x[j] != 0)
      for (int i = 0; i < n; ++i) val[i] += cv.B[i][j] * x[j];

  ValueVector out;
  out.tag = cv.tag;
  if (cv.tag == OrderTag::graded_revlex) {
    out.v.reserve(n + 1);
    out.v.push_back(w[0]);
    out.v.insert(out.v.end(), val.begin(), val.end());
  } else {
    out.v = std::move(val);
  }
  return out;
}

ValueVector valuate_poly(const ChainValuation& cv,
                         std::vector<PolyTerm> terms) {
  std::map<YExp, Rational> canon;
  for (auto& t : terms) canon[t.exp] += t.coeff;
  std::erase_if(canon, [](const auto& kv) { return kv.second == 0; });
  if (canon.empty())
    throw std::invalid_argument("valuation of the zero polynomial");
  std::optional<ValueVector> best;
  for (const auto& [exp, coeff] : canon) {
    ValueVector v = valuate_laurent(cv, exp);
    if (!best || compare(v, *best) < 0) best = std::move(v);
  }
  return *best;
}

namespace {

QuasiResult quasi_fold(const DistributiveLattice& l, Family family,
                       OrderTag tag, int jobs, std::size_t cap,
                       const std::function<ValueVector(const ChainValuation&)>&
                           eval) {
  std::vector<Chain> chains = maximal_chains(l, cap);
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    QuasiResult r;
    for (std::size_t k = lo; k < hi; ++k) {
      ValueVector v = eval(chain_valuation(l, chains[k], family, tag));
      if (r.argmin.empty() || compare(v, r.value) < 0) {
        r.value = std::move(v);
        r.argmin = {chains[k]};
      } else if (compare(v, r.value) == 0) {
        r.argmin.push_back(chains[k]);
      }
    }
    return r;
  };

  if (jobs <= 1 || chains.size() < 2) return eval_range(0, chains.size());

  std::size_t nj = std::min<std::size_t>(jobs, chains.size());
  std::vector<std::future<QuasiResult>> parts;
  std::size_t chunk = (chains.size() + nj - 1) / nj;
  for (std::size_t lo = 0; lo < chains.size(); lo += chunk)
    parts.push_back(std::async(std::launch::async, eval_range, lo,
                               std::min(lo + chunk, chains.size())));
  QuasiResult out;
  for (auto& f : parts) {
    QuasiResult r = f.get();
    if (r.argmin.empty()) continue;
    if (out.argmin.empty() || compare(r.value, out.value) < 0) {
      out = std::move(r);
    } else if (compare(r.value, out.value) == 0) {
      out.argmin.insert(out.argmin.end(), r.argmin.begin(), r.argmin.end());
    }
  }
  return out;
}

}  // namespace

QuasiResult quasi_valuation(const DistributiveLattice& l, Family family,
                            const YExp& w, OrderTag tag, int jobs,
                            std::size_t cap) {
  return quasi_fold(l, family, tag, jobs, cap,
                    [&](const ChainValuation& cv) {
                      return valuate_laurent(cv, w);
                    });
}

QuasiResult quasi_valuation_poly(const DistributiveLattice& l, Family family,
                                 std::vector<PolyTerm> terms, OrderTag tag,
                                 int jobs, std::size_t cap) {
  return quasi_fold(l, family, tag, jobs, cap,
                    [&](const ChainValuation& cv) {
                      return valuate_poly(cv, terms);
                    });
}

std::optional<StandardMonomial> graded_product(const DistributiveLattice& l,
                                               const StandardMonomial& a,
                                               const StandardMonomial& b) {
  std::vector<int> merged = a.factors;
  merged.insert(merged.end(), b.factors.begin(), b.factors.end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  if (!is_standard(l, merged)) return std::nullopt;
  return StandardMonomial{std::move(merged)};
}

}  // namespace hibi
