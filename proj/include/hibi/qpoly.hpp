#pragma once

#include <map>
#include <string>
#include <vector>

#include "hibi/rational.hpp"

namespace hibi {

/**
 * @brief Sparse exact polynomial over a fixed variable list.
 *
 * Terms live in a map keyed by exponent vector, so the representation is
 * canonical (no zero coefficients, deterministic term order) and all
 * arithmetic is exact.
 */
class QPoly {
 public:
  explicit QPoly(int nvars = 0) : nvars_(nvars) {}

  static QPoly constant(int nvars, const Rational& c);
  static QPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exp, const Rational& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& c) const;
  bool operator==(const QPoly& o) const = default;

  std::string to_string(
      const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/**
 * @brief Maximal minor of a symbolic d-by-n matrix as an exact polynomial.
 *
 * Variable (r, c) of the matrix (0-based) is polynomial variable r*n + c;
 * @p cols lists the 1-based column indices, strictly increasing.
 */
QPoly minor_poly(int d, int n, const std::vector<int>& cols);

/**
 * @brief Rank of a family of polynomials, viewed as exact coefficient
 * vectors over their monomials.
 *
 * Computed by incremental sparse Gaussian elimination; zero polynomials
 * contribute nothing.
 */
int poly_rank(const std::vector<QPoly>& polys);

}  // namespace hibi
