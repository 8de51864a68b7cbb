#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordertop/bits.hpp"
#include "ordertop/family.hpp"
#include "ordertop/poset.hpp"

namespace ordertop {

// Joins and meets are tabulated, so construction is quadratic in space and
// worse in time; refuses lattices larger than this.
inline constexpr std::size_t kLatticeSizeCap = 1024;

// A finite lattice given abstractly by its order.  Every finite lattice is
// complete; bottom and top are required.
class AbstractLattice {
 public:
  // `up_rows[i]` is the principal filter of i.  Throws NotALattice if some
  // pair lacks a least upper or greatest lower bound, SizeLimit past the cap.
  static AbstractLattice from_order(std::vector<Bits> up_rows);
  static AbstractLattice from_family(const SetFamily& fam);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const Bits& up(std::size_t i) const { return up_[i]; }
  const Bits& down(std::size_t i) const { return down_[i]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  // Join over an arbitrary subset; empty join is bottom.
  std::size_t join_of(const Bits& s) const;
  std::size_t meet_of(const Bits& s) const;

  // View as a labeled poset ("L0", "L1", ...) for isomorphism work.
  FinitePoset as_poset() const;

 private:
  std::vector<Bits> up_, down_;
  std::vector<std::uint32_t> join_, meet_;
  std::size_t bottom_ = 0, top_ = 0;
};

// a is irreducible when a = x v y forces a = x or a = y; strongly
// irreducible when a = v(S) over nonempty S forces a in S.  On a finite
// lattice the two agree; they are computed by independent routes (pair scan
// vs. join of the strict down-set) so the report doubles as a consistency
// check of that equivalence.
struct IrredFlags {
  bool irreducible = false;
  bool strongly_irreducible = false;
};
std::vector<IrredFlags> irreducibility_report(const AbstractLattice& l);

// x is beneath y when for every nonempty Scott-closed subset C of L with
// v(C) >= y some c in C has c >= x.  On a finite lattice this fails exactly
// when the elements NOT above x join to something above y, which gives a
// closed form; the subset and lower-set scans below are independent
// brute-force routes kept for cross-validation.
bool beneath(const AbstractLattice& l, std::size_t x, std::size_t y);
bool beneath_by_subset_scan(const AbstractLattice& l, std::size_t x, std::size_t y,
                            std::size_t max_size = 24);
bool beneath_by_lower_set_scan(const AbstractLattice& l, std::size_t x, std::size_t y,
                               std::size_t budget = kEnumerationBudget);

// C-compact elements: x beneath x.  Bottom is always C-compact (no nonempty
// witness family fails it); callers comparing against principal-ideal images
// usually drop it.
Bits c_compact_elements(const AbstractLattice& l);

// a != bottom and a = x v y forces a = x or a = y (join-irreducible in the
// usual finite-lattice sense, i.e. exactly one lower cover).
bool vee_irreducible(const AbstractLattice& l, std::size_t a);
Bits vee_irreducible_elements(const AbstractLattice& l);

// Rebuilds a poset from the join-irreducible elements of a complete lattice
// presumed to be a lower-set lattice; validates the Birkhoff bijection and
// throws NotReconstructible when l is not one.
FinitePoset reconstruct_poset(const AbstractLattice& l);

}  // namespace ordertop
