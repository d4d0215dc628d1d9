#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

/**
 * @brief A finite bounded distributive lattice in its canonical form: the
 *        lattice of all order ideals of the poset of proper join-irreducibles.
 *
 * Internally every element is the bitmask of proper join-irreducibles below
 * it, so join is bitwise-or and meet is bitwise-and. The bottom element is
 * the empty mask. By convention the bottom counts as a join-irreducible, so
 * `irreducibles()` lists it first, followed by the proper ones.
 *
 * Elements are ordered canonically by (height, mask value); this ordering is
 * a linear extension of the lattice order and fixes every enumeration the
 * library emits.
 */
class DistributiveLattice {
 public:
  /// Lattice of all order ideals of an arbitrary finite poset. Labels for the
  /// new elements are synthesized as brace-sets of member labels.
  static DistributiveLattice ideals_of(const Poset& p,
                                       std::size_t cap = 1u << 20);

  /**
   * @brief Builds the canonical form from an abstract order on labeled
   *        elements.
   *
   * Validates that `leq` is a partial order whose every pair has a unique
   * least upper and greatest lower bound, that the lattice is distributive,
   * and that the join-irreducible bitmask map is a bijection onto the ideals
   * of the join-irreducible poset.
   */
  static DistributiveLattice from_order(
      std::vector<std::string> labels,
      const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(elems_.size()); }
  /// Number of proper join-irreducibles.
  int rank() const { return jposet_.size(); }

  /// The poset of proper join-irreducibles, labels matching the lattice's.
  const Poset& jposet() const { return jposet_; }

  const std::string& label(int e) const { return labels_.at(e); }
  int index_of_label(const std::string& label) const;
  Mask mask_of(int e) const { return elems_.at(e); }
  int index_of_mask(Mask m) const;

  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  bool leq(int a, int b) const {
    return (elems_[a] & elems_[b]) == elems_[a];
  }
  int join(int a, int b) const { return index_of_mask(elems_[a] | elems_[b]); }
  int meet(int a, int b) const { return index_of_mask(elems_[a] & elems_[b]); }
  int height(int e) const { return popcount(elems_[e]); }

  std::vector<int> upper_covers(int e) const;
  std::vector<int> lower_covers(int e) const;
  /// All lattice cover pairs (lower, upper), sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Proper join-irreducibles below e, as a bitmask over jposet indices.
  Mask spec_star(int e) const { return elems_[e]; }
  /// Maximal elements of spec_star(e); empty mask exactly for the bottom.
  Mask max_spec_star(int e) const { return jposet_.max_of(elems_[e]); }

  /// Lattice element realizing proper join-irreducible j (principal ideal).
  int irreducible_element(int j) const { return irr_elem_.at(j); }
  /// jposet index of a join-irreducible lattice element (-1 for bottom).
  int irreducible_index(int e) const;
  /// True for the bottom (by convention) and the principal ideals.
  bool is_irreducible(int e) const;
  /// Bottom first, then the proper join-irreducibles in jposet order.
  std::vector<int> irreducibles() const;

 private:
  DistributiveLattice() : jposet_(Poset::from_covers({}, {})) {}
  static DistributiveLattice build(Poset jposet, std::vector<Mask> elems,
                                   std::vector<std::string> labels);

  Poset jposet_;
  std::vector<Mask> elems_;
  std::vector<std::string> labels_;
  std::unordered_map<Mask, int> index_;
  std::vector<int> irr_elem_;
};

}  // namespace hibi
