#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordertop/bits.hpp"
#include "ordertop/poset.hpp"
#include "ordertop/space.hpp"

namespace ordertop {

// A ∈ closed_sets(x), nonempty, and not coverable by two closed sets without
// lying inside one.  Decided by the two-cover definition and by the "not a
// union of two proper closed subsets" reformulation; both must agree.
// Throws NotClosed if A is not closed.
bool is_irreducible_closed(const FiniteSpace& x, const Bits& a);

struct IrrStructure {
  std::vector<Bits> irr_sets;         // sorted by Bits::family_less
  FinitePoset inclusion;              // the poset (Irr(X), subset-of)
  std::vector<std::size_t> unit;      // point x -> index of cl({x}) in irr_sets
  // Directed families of irreducible closed sets have sup = closure of their
  // union; checked exhaustively (subject to budget).
  bool directed_sups_validated = false;
  std::uint64_t directed_families_checked = 0;
};
IrrStructure irr_structure(const FiniteSpace& x,
                           std::size_t budget = kEnumerationBudget);

struct SobrietyReport {
  bool is_sober = false;
  bool is_bounded_sober = false;
  // Irreducible closed sets that are not point closures, sorted by size then
  // member order.
  std::vector<Bits> witnesses;
};
SobrietyReport sobriety_report(const FiniteSpace& x);

struct Sobrification {
  FiniteSpace space;                   // carrier: irreducible closed sets
  IrrStructure irr;                    // of the base space
  std::vector<std::size_t> eta;        // base point -> point of `space`
  bool sober_validated = false;        // the result is itself sober
  bool closed_lattice_iso = false;     // h : C(X) -> C(Y) bijective, bi-monotone
  bool specialization_is_inclusion = false;
};
Sobrification hull_kernel_sobrification(const FiniteSpace& x);

// Every Scott-closed family of the irr poset is h(A) for some closed A.
bool is_scott_sobrifiable(const FiniteSpace& x);

struct Fact2Report {
  bool lhs = false;   // sober and T_D
  bool rhs = false;   // every irreducible closed set strongly irreducible in C(X)
  bool agree = false;
};
Fact2Report fact2_check(const FiniteSpace& x);

// Point bijection preserving closed sets in both directions; the
// specialization isomorphism provides the candidate, the closed families are
// then checked explicitly.
std::optional<std::vector<std::size_t>> homeomorphism(const FiniteSpace& x,
                                                      const FiniteSpace& y);

}  // namespace ordertop
