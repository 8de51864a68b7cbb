#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ordertop/bits.hpp"
#include "ordertop/poset.hpp"

namespace ordertop {

// A finite family of subsets of a fixed universe, closed under binary union
// and intersection and containing the empty set and the full carrier.
// Members are kept sorted by Bits::family_less, so indices are canonical.
class SetFamily {
 public:
  SetFamily(std::size_t universe, std::vector<Bits> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  const Bits& member(std::size_t i) const { return members_[i]; }
  const std::vector<Bits>& members() const { return members_; }

  std::optional<std::size_t> index_of(const Bits& s) const;
  bool contains(const Bits& s) const { return index_of(s).has_value(); }

  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }

  // Within the family, union and intersection are the lattice operations.
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  // Smallest member containing s (the closure of s within the family).
  std::size_t smallest_containing(const Bits& s) const;

 private:
  std::size_t universe_;
  std::vector<Bits> members_;
  std::unordered_map<Bits, std::size_t, Bits::Hash> index_;
  std::size_t bottom_ = 0, top_ = 0;
};

// The lattice of Scott-closed subsets: on a finite poset these are exactly
// the lower sets.  Throws SizeLimit past `budget` members.
SetFamily scott_closed_family(const FinitePoset& p,
                              std::size_t budget = kEnumerationBudget);

}  // namespace ordertop
