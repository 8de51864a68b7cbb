#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordertop/bits.hpp"
#include "ordertop/family.hpp"
#include "ordertop/poset.hpp"

namespace ordertop {

// Finite T0 space, represented by its closed-set family.  On a finite
// carrier a valid T0 closed-set family is exactly the family of lower sets
// of the specialization order, so the space carries both views.
class FiniteSpace {
 public:
  // Sigma-P: closed sets are the lower sets of p.
  static FiniteSpace scott_space(const FinitePoset& p,
                                 std::size_t budget = kEnumerationBudget);

  // Validates the family axioms (NotAFamily) and T0 (NotT0).
  static FiniteSpace from_closed_family(std::vector<std::string> labels,
                                        std::vector<Bits> closed);

  std::size_t points() const { return order_.size(); }
  const std::vector<std::string>& labels() const { return order_.labels(); }
  const std::string& label(std::size_t i) const { return order_.label(i); }

  // Sorted by Bits::family_less.
  const std::vector<Bits>& closed_sets() const { return closed_; }
  bool is_closed(const Bits& s) const;
  std::optional<std::size_t> closed_index(const Bits& s) const;

  Bits closure(const Bits& s) const;
  Bits point_closure(std::size_t x) const { return order_.down(x); }

  const FinitePoset& specialization() const { return order_; }

 private:
  FiniteSpace(FinitePoset order, std::vector<Bits> closed);

  FinitePoset order_;
  std::vector<Bits> closed_;  // all lower sets of order_, sorted
};

struct SpaceTraits {
  bool is_t0 = false;
  bool is_td = false;
  bool is_d_space = false;
  std::uint64_t directed_sets_checked = 0;
};

// Classification of a validated space (always T0 by construction).
SpaceTraits classify_space(const FiniteSpace& x,
                           std::size_t budget = kEnumerationBudget);

// Classification of a raw closed-set family that may fail T0: reports
// is_t0=false with the other flags false instead of throwing.  Family axiom
// violations still throw NotAFamily.
SpaceTraits classify_closed_family(std::size_t universe,
                                   const std::vector<Bits>& closed,
                                   std::size_t budget = kEnumerationBudget);

}  // namespace ordertop
