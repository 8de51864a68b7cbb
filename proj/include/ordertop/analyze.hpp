#pragma once

#include <string>

#include "ordertop/poset.hpp"
#include "ordertop/space.hpp"

namespace ordertop {

struct AnalyzeOptions {
  bool canonical = false;  // include the canonical form of the order
  std::size_t budget = kEnumerationBudget;
};

// One JSON object with stable field order: counts, flags, per-element
// classification, optionally the canonical form, and a list of checks that
// were skipped because a size cap was hit (empty when everything ran).
std::string analyze_to_json_text(const FinitePoset& p,
                                 const AnalyzeOptions& opt = {});

// A validated finite T0 space is the Scott space of its specialization
// order, so the space report is the poset report of that order.
std::string analyze_to_json_text(const FiniteSpace& x,
                                 const AnalyzeOptions& opt = {});

}  // namespace ordertop
