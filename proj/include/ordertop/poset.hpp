#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordertop/bits.hpp"

namespace ordertop {

// Default ceiling on exhaustive lower-set / subset enumerations.  Operations
// that would exceed it throw SizeLimit instead of silently degrading.
inline constexpr std::size_t kEnumerationBudget = std::size_t{1} << 22;

// Finite partial order on labeled elements.  Stores the full reflexive
// relation as per-element up-sets and down-sets.
class FinitePoset {
 public:
  // `up_rows[i]` is the principal filter of element i (must contain i).
  FinitePoset(std::vector<std::string> labels, std::vector<Bits> up_rows);

  // Builds the reflexive-transitive closure of a cover/edge list.  Edges may
  //  be arbitrary comparabilities, not just covers.  Throws CycleDetected,
  // UnknownLabel, or InvalidInput.
  static FinitePoset from_covers(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& down(std::size_t i) const { return down_[i]; }

  Bits lower_closure(const Bits& s) const;
  Bits upper_closure(const Bits& s) const;
  bool is_lower_set(const Bits& s) const;
  bool is_upper_set(const Bits& s) const;
  bool is_chain(const Bits& s) const;
  bool is_antichain(const Bits& s) const;

  // Nonempty and pairwise bounded within s.
  bool is_directed(const Bits& s) const;
  // Greatest element of a directed subset (every finite directed set has
  // one).  Throws NotDirected / InvalidInput.
  std::size_t directed_sup(const Bits& s) const;

  Bits upper_bounds(const Bits& s) const;
  Bits minimal_upper_bounds(const Bits& s) const;

  Bits minimal_of(const Bits& s) const;
  Bits maximal_of(const Bits& s) const;
  Bits minimal_elements() const { return minimal_of(Bits::full(size())); }
  Bits maximal_elements() const { return maximal_of(Bits::full(size())); }
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  // Induced order on the members of s; labels are kept, index order is the
  // member order of s.
  FinitePoset restricted(const Bits& s) const;

  // Dual order.
  FinitePoset opposite() const;

  // Adds a new greatest element.  The label defaults to "top", uniquified
  // with prime marks if taken.
  FinitePoset with_top(std::string label = "") const;

  // Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  // Indices in some order compatible with leq (stable: ties keep index order).
  std::vector<std::size_t> linear_extension() const;

  // All lower sets, sorted by Bits::family_less.  Throws SizeLimit if their
  // number would exceed `budget`.
  std::vector<Bits> lower_sets(std::size_t budget = kEnumerationBudget) const;

  // Visits every directed subset (including singletons) exactly once.
  // Throws SizeLimit after `budget` visited subsets.
  void for_each_directed_subset(const std::function<void(const Bits&)>& f,
                                std::size_t budget = kEnumerationBudget) const;

  bool same_relation(const FinitePoset& o) const;

 private:
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<Bits> up_, down_;
};

// Property m / property M diagnostics: does every finite subset with an
// upper bound have (at least one / finitely many, covering) minimal upper
// bounds?  On finite posets minimal upper bounds always exist below any
// bound, so both properties reduce to a completeness check of mub(A) under
// every bound.  `witness` carries a failing (subset, bound) pair if any.
struct MubReport {
  bool has_m = true;
  bool has_M = true;
  std::optional<std::pair<Bits, std::size_t>> witness;
  std::size_t antichains_checked = 0;
};

// Exhaustive over antichains (upper-bound sets only depend on the maximal
// elements of a subset).  Throws SizeLimit past `budget` antichains.
MubReport property_mM_report(const FinitePoset& p,
                             std::size_t budget = kEnumerationBudget);

}  // namespace ordertop
