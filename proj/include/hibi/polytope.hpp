#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hibi/chains.hpp"
#include "hibi/lattice.hpp"
#include "hibi/linalg.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// One linear inequality `normal . x <= rhs`.
struct HalfSpace {
  RVector normal;
  Rational rhs;
};

/**
 * @brief A full-dimensional bounded rational polytope carrying both an exact
 * vertex description and an irredundant facet description.
 *
 * Construction always cross-validates the two descriptions, so a successfully
 * built object is a proof that they agree.
 */
class RationalPolytope {
 public:
  int dim() const { return dim_; }

  /// Vertices in ascending lexicographic order.
  const std::vector<RVector>& vertices() const { return verts_; }

  /// Irredundant facet inequalities with coprime integer coefficients,
  /// sorted lexicographically.
  const std::vector<HalfSpace>& halfspaces() const { return hs_; }

  bool contains(const RVector& x) const;

  /**
   * @brief Build from inequalities alone.
   *
   * Vertices are enumerated exactly; throws std::domain_error if the region
   * is empty, unbounded, or not full-dimensional.
   */
  static RationalPolytope from_hrep(int dim, const std::vector<HalfSpace>& hs);

  /**
   * @brief Build from a point set and inequalities that must describe the
   * same polytope.
   *
   * Verifies mutual containment: every point satisfies the inequalities and
   * every vertex of the inequality region is one of the points; throws
   * std::domain_error otherwise.
   */
  static RationalPolytope from_points_and_hrep(
      const std::vector<RVector>& pts, int dim,
      const std::vector<HalfSpace>& hs);

 private:
  int dim_ = 0;
  std::vector<RVector> verts_;
  std::vector<HalfSpace> hs_;
};

/**
 * @brief Inequalities of the order polytope of @p p in the ideal convention.
 *
 * Coordinate `coord_of[e]` carries element e; covers a < b give
 * x_b <= x_a, minimal elements are bounded by 1 and maximal elements by 0,
 * so the integer points are exactly the indicator vectors of order ideals.
 */
std::vector<HalfSpace> order_polytope_hrep(const Poset& p,
                                           const std::vector<int>& coord_of);

/// Order polytope of @p p with coordinate i = element i.
RationalPolytope order_polytope(const Poset& p);

/**
 * @brief All maximal corner-to-corner monotone paths in the (d, n) root
 * grid, each as a list of cells (i, j).
 *
 * Paths run from (1, d) to (d, n-1); depth-first order, increasing i before
 * increasing j.
 */
std::vector<std::vector<std::pair<int, int>>> dyck_paths(int d, int n);

/**
 * @brief Chain polytope of the (d, n) root grid: nonnegative coordinates
 * with sum at most 1 along every maximal path.
 *
 * Integer points are the indicator vectors of grid antichains.
 */
RationalPolytope fflv_polytope(int d, int n);

/// A degeneration body attached to one maximal chain of a lattice.
struct BodyOnChain {
  RationalPolytope polytope;
  /// Indicator vectors of the irreducible supports of all lattice elements,
  /// in chain-position coordinates; ascending lexicographic order.
  std::vector<std::vector<long long>> points;
  Enumeration enumeration;
};

/**
 * @brief Convex body of a maximal chain: the convex hull of the support
 * indicator vectors written in the chain's position coordinates.
 *
 * Also verifies that this hull equals the order polytope of the lattice's
 * irreducible poset in those coordinates; throws std::domain_error if not.
 */
BodyOnChain no_body(const DistributiveLattice& l, const Chain& chain);

/// Integer points of the k-fold dilation, ascending lexicographic order.
std::vector<std::vector<long long>> lattice_points(const RationalPolytope& p,
                                                   long long k);

/// Counts of integer points in dilations 0..upto.
std::vector<long long> ehrhart_counts(const RationalPolytope& p, int upto);

/**
 * @brief Exact coefficients a_0..a_m of the polynomial interpolating
 * counts[k] at k = 0..m.
 */
std::vector<Rational> polynomial_fit(const std::vector<long long>& counts);

/// One simplex of the chain triangulation, tagged by its chain.
struct Simplex {
  Chain chain;
  std::vector<RVector> verts;  // rank+1 points, first is the origin
};

/**
 * @brief Triangulation of the chain body: one simplex per maximal chain,
 * with all vertices written in @p refchain position coordinates.
 */
std::vector<Simplex> triangulate(const DistributiveLattice& l,
                                 const Chain& refchain,
                                 std::size_t cap = 100000);

/// Absolute determinant of the simplex edge matrix.
Rational simplex_det(const Simplex& s);

/**
 * @brief Transfer map between the order polytope and the chain polytope of
 * @p p: subtracts from each coordinate the maximum over upper covers
 * (0 when there are none).
 */
RVector transfer(const Poset& p, const std::vector<int>& coord_of,
                 const RVector& x);

/// Inverse of transfer(), computed from the top of the poset downward.
RVector transfer_inverse(const Poset& p, const std::vector<int>& coord_of,
                         const RVector& y);

}  // namespace hibi
