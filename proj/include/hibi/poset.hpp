#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hibi {

/// Subsets of poset elements are bitmasks, so posets are capped at 64 elements.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/**
 * @brief A finite poset given by labeled elements and an irredundant cover
 *        relation.
 *
 * Construction validates the input: labels must be unique, the cover digraph
 * must be acyclic, and no listed cover pair may be implied by the others
 * (a transitively-implied pair is rejected with an error rather than dropped).
 */
class Poset {
 public:
  /// Builds a poset from covers (pairs of element indices, lower then upper).
  static Poset from_covers(std::vector<std::string> labels,
                           std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(e); }
  int index_of_label(const std::string& label) const;

  /// Irredundant cover pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int a, int b) const { return (up_[a] >> b) & 1; }
  const std::vector<int>& upper_covers(int e) const { return ups_[e]; }
  const std::vector<int>& lower_covers(int e) const { return downs_[e]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Principal filter {b : a <= b} as a bitmask.
  Mask up_set(int a) const { return up_[a]; }
  /// Principal ideal {b : b <= a} as a bitmask.
  Mask down_set(int a) const { return down_[a]; }

  bool is_ideal(Mask m) const;
  bool is_antichain(Mask m) const;
  /// Maximal elements of a subset.
  Mask max_of(Mask m) const;
  /// Downward closure of a subset.
  Mask down_closure(Mask m) const;

  /// One fixed linear extension (indices in a topological order).
  const std::vector<int>& linear_extension() const { return topo_; }

  /**
   * @brief All order ideals, sorted by (popcount, numeric mask value).
   * @throws std::domain_error if more than @p cap ideals exist.
   */
  std::vector<Mask> ideals(std::size_t cap = 1u << 20) const;

  /// Number of linear extensions by dynamic programming over ideals.
  /// Desk-scale counts fit comfortably in 64 bits; callers cap sizes anyway.
  unsigned long long count_linear_extensions() const;

 private:
  Poset() = default;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> ups_, downs_;
  std::vector<Mask> up_, down_;
  std::vector<int> topo_;
};

}  // namespace hibi
