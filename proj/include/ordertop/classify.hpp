#pragma once

#include <cstddef>
#include <vector>

#include "ordertop/bits.hpp"
#include "ordertop/poset.hpp"

namespace ordertop {

struct ElementClassification {
  // per element, indexed like the poset
  std::vector<bool> down_linear;
  std::vector<bool> quasicontinuous_element;
  // per poset
  bool quasicontinuous = false;
  bool dl_sup = false;
  bool thm15_hypotheses = false;
  bool cor16_hypotheses = false;
  bool thm22_hypotheses = false;
};

// The principal ideal of a is totally ordered.
bool is_down_linear(const FinitePoset& p, std::size_t a);

// F way below x, by the finite reduction up(x) ⊆ up(F).  F must be nonempty.
bool way_below_fin(const FinitePoset& p, const Bits& f, std::size_t x);

// Same predicate from the definition: every directed D with x ≤ sup D meets
// up(F).  Exists to validate the reduction, never to replace it.
bool way_below_fin_by_directed_scan(const FinitePoset& p, const Bits& f,
                                    std::size_t x,
                                    std::size_t budget = kEnumerationBudget);

// The ⊆-minimal sets among { up(F) : F nonempty, F way below x }, i.e. the
// compact representation of fin(x).
std::vector<Bits> fin_minimal_upsets(const FinitePoset& p, std::size_t x,
                                     std::size_t budget = kEnumerationBudget);

// Fills down_linear, quasicontinuous_element and the poset-level
// `quasicontinuous` flag (fin(x) directed + separation of pairs x ≰ y).
ElementClassification quasicontinuity_report(
    const FinitePoset& p, std::size_t budget = kEnumerationBudget);

// Literal reading of the quasicontinuity conditions over every nonempty
// subset F of the carrier; exponential, for cross-validation on small posets
// only (SizeLimit past 16 elements).
bool quasicontinuous_by_subset_scan(const FinitePoset& p);

// The restriction of p to the principal ideal of x is quasicontinuous.
bool is_quasicontinuous_element(const FinitePoset& p, std::size_t x,
                                std::size_t budget = kEnumerationBudget);

// Everything in quasicontinuity_report plus the theorem-hypothesis flags:
//   dl_sup  - every proper irreducible Scott-closed set is the sup of a
//             directed family of down-linear elements of the inclusion order
//             on irreducible Scott-closed sets (itself allowed);
//   cor16   - Scott space bounded-sober and every element a directed sup of
//             down-linear elements;
//   thm15   - as cor16 with quasicontinuous elements;
//   thm22   - property M together with the second cor16 condition.
// The "sup of a directed family from W" tests run both from the definition
// (directed-subfamily enumeration, |W| capped at 20) and from the finite
// characterization, and must agree.
ElementClassification hypothesis_check(const FinitePoset& p,
                                       std::size_t budget = kEnumerationBudget);

// The lower sets of the restriction to a nonempty Scott-closed a coincide
// with the lower sets of p contained in a.  Throws NotScottClosed when a is
// empty or not a lower set.
bool restriction_check(const FinitePoset& p, const Bits& a,
                       std::size_t budget = kEnumerationBudget);

}  // namespace ordertop
