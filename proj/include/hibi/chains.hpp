#pragma once

#include <functional>
#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

/// A maximal chain: element ids from bottom to top, consecutive covers.
using Chain = std::vector<int>;

/// An order-preserving enumeration of the proper join-irreducibles: position
/// k holds the jposet index added at the k-th cover step of some maximal
/// chain. Every prefix of such an enumeration is an order ideal.
using Enumeration = std::vector<int>;

bool is_maximal_chain(const DistributiveLattice& l, const Chain& c);

/**
 * @brief Streams all maximal chains bottom-to-top in depth-first order,
 *        following upper covers in ascending element-id order.
 * @throws std::domain_error when more than @p cap chains exist.
 */
void for_each_maximal_chain(const DistributiveLattice& l,
                            const std::function<void(const Chain&)>& fn,
                            std::size_t cap = 100000);

/// Materialized maximal chains in the deterministic streaming order.
std::vector<Chain> maximal_chains(const DistributiveLattice& l,
                                  std::size_t cap = 100000);

/// Chain count via the linear-extension dynamic program on the
/// join-irreducible poset (independent of the depth-first stream).
unsigned long long count_maximal_chains(const DistributiveLattice& l);

/// The unique join-irreducible added at each cover step of a maximal chain.
Enumeration chain_to_enumeration(const DistributiveLattice& l, const Chain& c);

/// Inverse: prefix joins of an order-preserving enumeration.
Chain enumeration_to_chain(const DistributiveLattice& l, const Enumeration& e);

}  // namespace hibi
