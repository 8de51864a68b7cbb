#pragma once

#include <string>
#include <variant>

#include "ordertop/poset.hpp"
#include "ordertop/space.hpp"

namespace ordertop {

// Poset documents: {"elements": ["a","b"], "covers": [["a","b"]]}.
// Space documents: {"points": ["a","b"], "closed": [[], ["a"], ["a","b"]]}
// (an "eta" key, as written by sobrify output, is tolerated and ignored).
// Unknown keys are rejected; labels must be unique strings.  All validation
// failures throw InvalidInput or the structural errors of the constructors.
FinitePoset poset_from_json_text(const std::string& text);
FiniteSpace space_from_json_text(const std::string& text);

using ParsedInput = std::variant<FinitePoset, FiniteSpace>;
// Dispatches on the top-level keys ("elements" vs "points").
ParsedInput input_from_json_text(const std::string& text);

std::string poset_to_json_text(const FinitePoset& p);
std::string space_to_json_text(const FiniteSpace& x);
// The space plus {"eta": {point: sorted members of its closure}}.
std::string sobrify_to_json_text(const FiniteSpace& base, const FiniteSpace& result);

// Hasse diagram in DOT, drawn upward; nodes and edges emitted in canonical
// order so equal posets under relabeling produce structurally equal graphs.
std::string poset_to_dot(const FinitePoset& p, const std::string& graph_name = "poset");

std::string read_text_file(const std::string& path);   // InvalidInput on failure
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ordertop
