#pragma once

#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

/// Laurent exponent vector over y_0 .. y_N; index 0 is the homogenizing
/// variable, index 1+j tracks the proper join-irreducible with jposet index j.
using YExp = std::vector<long long>;

/// One quadratic generator x_a·x_b − x_{a∨b}·x_{a∧b} for an unordered
/// incomparable pair (a < b by element id).
struct HibiRelation {
  int a, b, join, meet;
};

/// All quadratic generators, one per unordered incomparable pair, sorted by
/// (a, b) element ids.
std::vector<HibiRelation> hibi_ideal_generators(const DistributiveLattice& l);

/// Monomial image of x_e: y_0 · prod of y_{1+j} over j in spec_star(e).
YExp element_to_y(const DistributiveLattice& l, int e);

/// Dehomogenized image: element_to_y without the y_0 factor.
YExp xhat(const DistributiveLattice& l, int e);

/// Exponent vector of a product of x-variables (y_0 exponent = degree).
YExp y_product(const DistributiveLattice& l, const std::vector<int>& factors);

/// Exponent vector of the matching product of dehomogenized variables.
YExp xhat_product(const DistributiveLattice& l,
                  const std::vector<int>& factors);

/// A standard monomial: factors pairwise comparable, stored weakly
/// decreasing (top-most factor first).
struct StandardMonomial {
  std::vector<int> factors;

  bool operator==(const StandardMonomial& o) const = default;
  bool operator<(const StandardMonomial& o) const {
    return factors < o.factors;
  }
};

/// True when the id-descending factor list is a weakly decreasing multichain.
bool is_standard(const DistributiveLattice& l,
                 const std::vector<int>& factors);

/// All standard monomials of degree r, in ascending lexicographic order of
/// their (descending) factor tuples.
std::vector<StandardMonomial> standard_basis(const DistributiveLattice& l,
                                             int r);

struct RewriteResult {
  StandardMonomial standard;
  int steps = 0;
};

/**
 * @brief Rewrites an arbitrary product of x-variables to its standard form.
 *
 * The factor list is kept sorted ascending by element id (a linear extension
 * of the lattice order); each step replaces the leftmost incomparable
 * adjacent pair by (meet, join). The sum of squared heights strictly
 * increases and is bounded, so the loop terminates without a step cap. When
 * @p trace is non-null every intermediate factor list is appended to it.
 */
RewriteResult rewrite_to_standard(const DistributiveLattice& l,
                                  std::vector<int> factors,
                                  std::vector<std::vector<int>>* trace = nullptr);

}  // namespace hibi
