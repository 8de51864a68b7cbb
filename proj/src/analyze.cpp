#include "ordertop/analyze.hpp"

#include <functional>
#include <optional>
#include <vector>

#include "ordertop/classify.hpp"
#include "ordertop/errors.hpp"
#include "ordertop/family.hpp"
#include "ordertop/iso.hpp"
#include "ordertop/lattice.hpp"
#include "ordertop/sobriety.hpp"

#include "json.hpp"

namespace ordertop {
namespace {

using ordered_json = nlohmann::ordered_json;

// Runs one sub-report, converting a size-cap overflow into a note so the
// rest of the record still comes out.  The affected fields stay null.
template <typename T>
std::optional<T> guarded(std::vector<std::string>& skipped,
                         const std::string& what,
                         const std::function<T()>& fn) {
  try {
    return fn();
  } catch (const SizeLimit&) {
    skipped.push_back(what);
    return std::nullopt;
  }
}

void put_flag(ordered_json& obj, const std::string& key,
              const std::optional<bool>& value) {
  if (value) {
    obj[key] = *value;
  } else {
    obj[key] = nullptr;
  }
}

}  // namespace

std::string analyze_to_json_text(const FinitePoset& p,
                                 const AnalyzeOptions& opt) {
  std::vector<std::string> skipped;

  const FiniteSpace space = FiniteSpace::scott_space(p, opt.budget);
  const std::size_t closed_count = space.closed_sets().size();

  const auto traits = guarded<SpaceTraits>(skipped, "space classification",
      [&] { return classify_space(space, opt.budget); });
  const auto sob = guarded<SobrietyReport>(skipped, "sobriety",
      [&] { return sobriety_report(space); });
  const auto irr = guarded<std::size_t>(skipped, "irreducible closed sets",
      [&] { return irr_structure(space, opt.budget).irr_sets.size(); });
  const auto classification =
      guarded<ElementClassification>(skipped, "hypothesis check",
          [&] { return hypothesis_check(p, opt.budget); });
  const auto mub = guarded<MubReport>(skipped, "minimal upper bounds",
      [&] { return property_mM_report(p); });
  const auto c_compact = guarded<std::size_t>(skipped, "c-compact elements",
      [&] {
        SetFamily fam(p.size(), p.lower_sets(opt.budget));
        return c_compact_elements(AbstractLattice::from_family(fam)).count();
      });

  ordered_json doc;

  ordered_json counts;
  counts["elements"] = p.size();
  counts["closed_sets"] = closed_count;
  if (irr) {
    counts["irreducible_closed_sets"] = *irr;
  } else {
    counts["irreducible_closed_sets"] = nullptr;
  }
  if (c_compact) {
    counts["c_compact"] = *c_compact;
  } else {
    counts["c_compact"] = nullptr;
  }
  doc["counts"] = counts;

  ordered_json flags;
  put_flag(flags, "sober",
           sob ? std::optional<bool>(sob->is_sober) : std::nullopt);
  put_flag(flags, "bounded_sober",
           sob ? std::optional<bool>(sob->is_bounded_sober) : std::nullopt);
  put_flag(flags, "T_D",
           traits ? std::optional<bool>(traits->is_td) : std::nullopt);
  put_flag(flags, "d_space",
           traits ? std::optional<bool>(traits->is_d_space) : std::nullopt);
  put_flag(flags, "quasicontinuous",
           classification ? std::optional<bool>(classification->quasicontinuous)
                          : std::nullopt);
  put_flag(flags, "dl_sup",
           classification ? std::optional<bool>(classification->dl_sup)
                          : std::nullopt);
  put_flag(flags, "cor16_hypotheses",
           classification
               ? std::optional<bool>(classification->cor16_hypotheses)
               : std::nullopt);
  put_flag(flags, "thm15_hypotheses",
           classification
               ? std::optional<bool>(classification->thm15_hypotheses)
               : std::nullopt);
  put_flag(flags, "thm22_hypotheses",
           classification
               ? std::optional<bool>(classification->thm22_hypotheses)
               : std::nullopt);
  put_flag(flags, "property_M",
           mub ? std::optional<bool>(mub->has_M) : std::nullopt);
  doc["flags"] = flags;

  ordered_json elements;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ordered_json e;
    if (classification) {
      e["down_linear"] = static_cast<bool>(classification->down_linear[i]);
      e["quasicontinuous_element"] =
          static_cast<bool>(classification->quasicontinuous_element[i]);
    } else {
      e["down_linear"] = nullptr;
      e["quasicontinuous_element"] = nullptr;
    }
    elements[p.label(i)] = e;
  }
  doc["elements"] = elements;

  if (opt.canonical) {
    doc["canonical"] = canonical_hex(p);
  }
  doc["skipped_checks"] = skipped;

  return doc.dump(2) + "\n";
}

std::string analyze_to_json_text(const FiniteSpace& x,
                                 const AnalyzeOptions& opt) {
  return analyze_to_json_text(x.specialization(), opt);
}

}  // namespace ordertop
