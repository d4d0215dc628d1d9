#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hibi/qpoly.hpp"
#include "hibi/valuation.hpp"

namespace hibi {

/// A Plücker index: strictly increasing 1-based column tuple of length d.
using Tuple = std::vector<int>;

std::string tuple_label(const Tuple& t, int n);
Tuple tuple_from_label(const std::string& s, int d, int n);

/**
 * @brief The lattice of Plücker indices with componentwise order, bundled
 *        with the tuple codec.
 *
 * Element ids follow the canonical lattice order; `tuples[e]` recovers the
 * index tuple of element e.
 */
struct GrassmannLattice {
  int d = 0, n = 0;
  DistributiveLattice lattice;
  std::vector<Tuple> tuples;

  int index_of_tuple(const Tuple& t) const;
};

/// Builds the tuple lattice; throws when C(n,d) exceeds the element cap.
GrassmannLattice build_idn(int d, int n, std::size_t cap = 64);

/// Join-irreducible taxonomy: a prefix [1..s] followed by one consecutive
/// run starting at t+1. The bottom tuple classifies as (s,t) = (0,0).
struct IrreducibleClass {
  bool irreducible = false;
  int s = 0, t = 0;
};
IrreducibleClass classify_irreducible(const Tuple& t, int d, int n);

/// Coordinate weight: sum of unit vectors picked by the tuple (length n).
std::vector<long long> weight_of(const Tuple& t, int n);

/// Weight of the irreducible support of element e, in the basis of the n-1
/// consecutive root directions (coordinate t counts irreducibles of type t).
std::vector<long long> omega_alpha(const GrassmannLattice& gl, int e);

/// Expands root coordinates into coordinate-weight space: coordinate t maps
/// to eps_{t+1} - eps_t.
std::vector<long long> alpha_to_epsilon(const std::vector<long long>& a,
                                        int n);

/// The d-by-(n-d) grid poset of cells (i, j), 1 <= i <= d <= j <= n-1, with
/// covers (i,j) -> (i+1,j) and (i,j) -> (i,j+1).
Poset root_poset(int d, int n);
int root_index(int d, int n, int i, int j);
std::pair<int, int> root_cell(int d, int n, int idx);

/**
 * @brief Order isomorphism from the proper join-irreducibles of the tuple
 *        lattice onto the root grid: type (s,t) maps to cell
 *        (d-s, d-1+t-s). Verified on construction; throws if the order is
 *        not matched both ways.
 */
std::vector<int> irreducible_to_root(const GrassmannLattice& gl);

/**
 * @brief Quadratic shuffle relations among the Plücker variables
 *        (polynomials in |L| variables indexed by element id).
 *
 * Every candidate is validated by exact minor substitution; a candidate
 * whose expansion does not vanish is rejected rather than emitted, and
 * counted in @p rejected when given.
 */
std::vector<QPoly> plucker_relations(const GrassmannLattice& gl,
                                     int* rejected = nullptr);

/// Substitutes each Plücker variable by its maximal minor and expands.
QPoly expand_in_minors(const GrassmannLattice& gl, const QPoly& p);

struct StraighteningTerm {
  int k1 = 0, k2 = 0;  // element ids, k2 <= k1 in the lattice order
  Rational coeff;
};

/// p_{i1} p_{i2} = sum of coeff * p_{k1} p_{k2} over standard pairs; the
/// leading pair (join, meet) is listed first.
struct StraighteningEntry {
  int i1 = 0, i2 = 0;
  std::vector<StraighteningTerm> terms;
};

/**
 * @brief Straightens one incomparable pair by exact linear solve.
 *
 * Candidates are the standard splits of the combined index multiset
 * sandwiched between the pair's join and meet; coefficients are solved
 * exactly against the minor expansion and the system is required to have a
 * unique solution with zero residual.
 * @throws std::invalid_argument for a comparable pair.
 */
StraighteningEntry straighten(const GrassmannLattice& gl, int i1, int i2);

struct StraighteningTable {
  std::vector<StraighteningEntry> entries;  // all incomparable pairs (i1<i2)
  std::map<std::pair<int, int>, int> index;

  const StraighteningEntry& at(int a, int b) const;
};

StraighteningTable straightening_table(const GrassmannLattice& gl);

/// One checked instance of the domination disjunction.
struct GovernedCase {
  int m1 = -1, m2 = -1;      // lattice ids of the dominated pair
  int rule = 0;              // 1, 2 or 3 in priority order; 0 = failed
  int h = -1, hprime = -1;   // witnesses (lattice ids; -1 = unused)
};

struct GovernedTermReport {
  int k1 = -1, k2 = -1;
  bool pass = true;
  std::vector<GovernedCase> cases;
};

struct GovernedPairReport {
  int i1 = -1, i2 = -1;
  bool leading_ok = false;
  bool pass = false;
  std::vector<GovernedTermReport> terms;
};

struct GovernedReport {
  bool pass = false;
  bool basis_ok = false;  // degree-2 standard monomials linearly independent
  std::vector<GovernedPairReport> pairs;
};

/// Checks every straightening entry for the leading-coefficient condition
/// and the maximal-support domination disjunction, and verifies the
/// degree-2 standard monomials are linearly independent under minor
/// expansion.
GovernedReport governed_check(const GrassmannLattice& gl,
                              const StraighteningTable& table);

/// Exact expansion of an arbitrary product of Plücker variables in the
/// standard basis, by repeated straightening of incomparable adjacent pairs.
std::map<StandardMonomial, Rational> expand_to_standard(
    const GrassmannLattice& gl, const StraighteningTable& table,
    std::vector<int> factors);

/// Graded value of a product of Plücker variables along one chain: the
/// minimum over the standard terms of its expansion.
ValueVector mu_chain(const GrassmannLattice& gl,
                     const StraighteningTable& table, const Chain& c,
                     Family family, const std::vector<int>& factors);

/// Minimum of mu_chain over all maximal chains.
QuasiResult mu_quasi(const GrassmannLattice& gl,
                     const StraighteningTable& table, Family family,
                     const std::vector<int>& factors, int jobs = 1,
                     std::size_t cap = 100000);

/// Strips the last column step of a tuple (the bottom has no image).
Tuple pairing_map(const Tuple& t, int d, int n);

/// Root cells collected along the pairing iteration; always an antichain of
/// the root grid. Cross-checked internally against the support weights.
std::vector<std::pair<int, int>> beta_cells(const GrassmannLattice& gl, int e);

/// 0/1 vector over root-poset indices marking beta_cells(e).
std::vector<long long> beta_chi(const GrassmannLattice& gl, int e);

}  // namespace hibi
