#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordertop/poset.hpp"

namespace ordertop {

struct IsoCertificate {
  std::vector<std::size_t> mapping;  // index in P -> index in Q
  bool verified = false;             // re-checked against both relations
};

// Explicit order-isomorphism search, independent of the canonical-form
// machinery.  Deterministic for fixed inputs.
std::optional<IsoCertificate> poset_isomorphism(const FinitePoset& p,
                                                const FinitePoset& q);

// Canonical relabeling: order[pos] = original index.  Computed by iterative
// color refinement followed by backtracking for the lexicographically least
// relation matrix among color-respecting orders.
std::vector<std::size_t> canonical_order(const FinitePoset& p);

// Equal strings iff posets isomorphic (size prefix + packed matrix bits
// under the canonical order).
std::string canonical_form(const FinitePoset& p);
std::string canonical_hex(const FinitePoset& p);

}  // namespace ordertop
