#pragma once

// Exact linear algebra over the rationals. Eigen is the only math dependency;
// all solves, ranks and determinants run FullPivLU on GMP rationals, so every
// result below is exact (no tolerances anywhere).

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "hibi/rational.hpp"

namespace hibi {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational rdet(const RMatrix& a) {
  return Eigen::FullPivLU<RMatrix>(a).determinant();
}

inline Eigen::Index rrank(const RMatrix& a) {
  Eigen::FullPivLU<RMatrix> lu(a);
  lu.setThreshold(Rational(0));
  return lu.rank();
}

/// One exact solution of a·x = b, or nullopt if the system is inconsistent.
inline std::optional<RVector> rsolve(const RMatrix& a, const RVector& b) {
  Eigen::FullPivLU<RMatrix> lu(a);
  lu.setThreshold(Rational(0));
  RVector x = lu.solve(b);
  RVector r = a * x - b;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return std::nullopt;
  return x;
}

/// Exact kernel basis (columns of the returned matrix span the nullspace).
inline RMatrix rkernel(const RMatrix& a) {
  Eigen::FullPivLU<RMatrix> lu(a);
  lu.setThreshold(Rational(0));
  return lu.kernel();
}

}  // namespace hibi
