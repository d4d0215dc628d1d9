#include "hibi/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hibi {

QPoly QPoly::constant(int nvars, const Rational& c) {
  QPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

QPoly QPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable out of range");
  QPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

void QPoly::add_term(const std::vector<int>& exp, const Rational& c) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable counts");
  QPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

QPoly QPoly::operator*(const Rational& c) const {
  QPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

std::string QPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_fraction_string(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) s += "*" + var_names.at(i);
  }
  return s;
}

QPoly minor_poly(int d, int n, const std::vector<int>& cols) {
  if (static_cast<int>(cols.size()) != d)
    throw std::invalid_argument("minor needs d columns");
  for (int k = 0; k < d; ++k) {
    if (cols[k] < 1 || cols[k] > n)
      throw std::invalid_argument("column index out of range");
    if (k > 0 && cols[k] <= cols[k - 1])
      throw std::invalid_argument("columns must be strictly increasing");
  }
  QPoly p(d * n);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    std::vector<int> e(d * n, 0);
    for (int r = 0; r < d; ++r) e[r * n + (cols[perm[r]] - 1)] += 1;
    p.add_term(e, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

int poly_rank(const std::vector<QPoly>& polys) {
  using Row = std::map<std::vector<int>, Rational>;
  std::vector<Row> pivots;  // each normalized so its first monomial has coeff 1
  for (const QPoly& p : polys) {
    Row row = p.terms();
    for (const Row& piv : pivots) {
      auto it = row.find(piv.begin()->first);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [e, c] : piv) {
        auto jt = row.find(e);
        if (jt == row.end()) jt = row.emplace(e, Rational(0)).first;
        jt->second -= f * c;
        if (jt->second == 0) row.erase(jt);
      }
    }
    if (row.empty()) continue;
    Rational lead = row.begin()->second;
    for (auto& [e, c] : row) c /= lead;
    pivots.push_back(std::move(row));
  }
  return static_cast<int>(pivots.size());
}

}  // namespace hibi
