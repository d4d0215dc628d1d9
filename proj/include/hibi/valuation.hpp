#pragma once

#include <optional>
#include <vector>

#include "hibi/chains.hpp"
#include "hibi/monomial.hpp"
#include "hibi/rational.hpp"

namespace hibi {

/// Which antichain of the cover data each matrix column weights.
enum class Family { spec, maxspec, ht };

/// Value-group orders: plain reverse lexicographic on Z^N (highest index
/// most significant), or degree-first followed by reverse lexicographic on
/// the remaining N coordinates (for graded values in Z^{N+1}).
enum class OrderTag { revlex, graded_revlex };

struct ValueVector {
  std::vector<long long> v;
  OrderTag tag = OrderTag::revlex;

  bool operator==(const ValueVector& o) const = default;
};

/// Three-way comparison; throws if tags or lengths differ.
int compare(const ValueVector& a, const ValueVector& b);

/**
 * @brief The linear valuation attached to one maximal chain and one family.
 *
 * Column j of the N-by-N matrix holds the value of the j-th dehomogenized
 * chain variable: the height family gives the identity, the spec family the
 * prefix sums, and the maxspec family the indicator of the maximal
 * irreducibles of the j-th chain element. All three are unitriangular in the
 * chain's enumeration coordinates; the determinant is still verified to be
 * nonzero at construction.
 */
struct ChainValuation {
  const DistributiveLattice* lattice = nullptr;
  Chain chain;
  Enumeration enumeration;      // jposet index added at each position
  std::vector<int> position_of; // inverse of `enumeration`
  Family family = Family::spec;
  OrderTag tag = OrderTag::revlex;
  std::vector<std::vector<long long>> B;  // column-major action on exponents
};

ChainValuation chain_valuation(const DistributiveLattice& l, const Chain& c,
                               Family family,
                               OrderTag tag = OrderTag::revlex);

/**
 * @brief Value of a Laurent monomial given by its y-exponent vector
 *        (length N+1, index 0 = homogenizing variable).
 *
 * The y-exponents are read off in chain-enumeration order, converted to
 * exponents of the chain variables by consecutive differences, and pushed
 * through the matrix. Under the graded tag the degree coordinate is
 * prepended.
 */
ValueVector valuate_laurent(const ChainValuation& cv, const YExp& w);

struct PolyTerm {
  Rational coeff;
  YExp exp;
};

/// Minimum value over the canonicalized terms (like terms combined, zero
/// coefficients dropped). Throws on the zero polynomial.
ValueVector valuate_poly(const ChainValuation& cv, std::vector<PolyTerm> terms);

struct QuasiResult {
  ValueVector value;
  std::vector<Chain> argmin;  // chains attaining the minimum, stream order
};

/// Minimum of the chain valuations over all maximal chains.
QuasiResult quasi_valuation(const DistributiveLattice& l, Family family,
                            const YExp& w, OrderTag tag = OrderTag::revlex,
                            int jobs = 1, std::size_t cap = 100000);

/// Same fold applied to a polynomial.
QuasiResult quasi_valuation_poly(const DistributiveLattice& l, Family family,
                                 std::vector<PolyTerm> terms,
                                 OrderTag tag = OrderTag::revlex, int jobs = 1,
                                 std::size_t cap = 100000);

/// Product in the associated graded algebra: the merged factor multiset when
/// it is again a multichain, and the zero element (nullopt) otherwise.
std::optional<StandardMonomial> graded_product(const DistributiveLattice& l,
                                               const StandardMonomial& a,
                                               const StandardMonomial& b);

}  // namespace hibi
