#include "ordertop/space.hpp"

#include <algorithm>

#include "ordertop/errors.hpp"

namespace ordertop {

namespace {

// Specialization preorder of a closed family: x <= y iff x lies in the
// closure of {y}, i.e. in every closed set containing y.
std::vector<Bits> specialization_rows(std::size_t n, const std::vector<Bits>& closed) {
  std::vector<Bits> cl_of_point(n, Bits::full(n));
  for (std::size_t y = 0; y < n; ++y) {
    Bits acc = Bits::full(n);
    for (const auto& c : closed)
      if (c.test(y)) acc &= c;
    cl_of_point[y] = acc;
  }
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t y = 0; y < n; ++y)
    cl_of_point[y].for_each([&](std::size_t x) { up[x].set(y); });
  return up;
}

}  // namespace

FiniteSpace::FiniteSpace(FinitePoset order, std::vector<Bits> closed)
    : order_(std::move(order)), closed_(std::move(closed)) {
  std::sort(closed_.begin(), closed_.end(), Bits::family_less);
}

FiniteSpace FiniteSpace::scott_space(const FinitePoset& p, std::size_t budget) {
  // On a finite poset the directed-supremum condition is vacuous, so the
  // Scott-closed sets are exactly the lower sets.
  return FiniteSpace(p, p.lower_sets(budget));
}

FiniteSpace FiniteSpace::from_closed_family(std::vector<std::string> labels,
                                            std::vector<Bits> closed) {
  const std::size_t n = labels.size();
  if (closed.size() > 4096)
    throw SizeLimit("closed-set family too large to validate pairwise");
  SetFamily fam(n, closed);  // throws NotAFamily on axiom violations
  auto up = specialization_rows(n, fam.members());
  // T0 means the specialization preorder is antisymmetric.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw NotT0("points " + labels[i] + " and " + labels[j] + " have equal closures");
  FinitePoset order(std::move(labels), std::move(up));
  // A validated T0 family necessarily consists of all lower sets of the
  // specialization order; confirm rather than assume.
  auto lower = order.lower_sets(fam.size());
  if (lower.size() != fam.size())
    throw NotAFamily("closed family does not match the lower sets of its specialization order");
  std::vector<Bits> members = fam.members();
  std::sort(members.begin(), members.end(), Bits::family_less);
  if (lower != members)
    throw NotAFamily("closed family does not match the lower sets of its specialization order");
  return FiniteSpace(std::move(order), std::move(members));
}

bool FiniteSpace::is_closed(const Bits& s) const {
  return closed_index(s).has_value();
}

std::optional<std::size_t> FiniteSpace::closed_index(const Bits& s) const {
  auto it = std::lower_bound(closed_.begin(), closed_.end(), s, Bits::family_less);
  if (it != closed_.end() && *it == s)
    return static_cast<std::size_t>(it - closed_.begin());
  return std::nullopt;
}

Bits FiniteSpace::closure(const Bits& s) const {
  return order_.lower_closure(s);
}

namespace {

SpaceTraits classify_t0(const FinitePoset& order, const std::vector<Bits>& closed,
                        std::size_t budget) {
  SpaceTraits t;
  t.is_t0 = true;

  auto is_member = [&](const Bits& s) {
    auto it = std::lower_bound(closed.begin(), closed.end(), s, Bits::family_less);
    return it != closed.end() && *it == s;
  };

  // T_D: every derived set cl({x}) - {x} is closed.
  t.is_td = true;
  for (std::size_t x = 0; x < order.size(); ++x) {
    Bits derived = order.down(x);
    derived.reset(x);
    if (!is_member(derived)) t.is_td = false;
  }

  // d-space: the specialization poset is directed-complete and every
  // directed set converges to its supremum, i.e. every open set containing
  // sup(D) contains the eventual maximum of D.  The supremum comes from
  // directed_sup and the maximum from an independent scan, so the check does
  // real work as a consistency test instead of comparing a value to itself.
  t.is_d_space = true;
  order.for_each_directed_subset(
      [&](const Bits& d) {
        ++t.directed_sets_checked;
        std::size_t sup = order.directed_sup(d);
        std::size_t max = Bits::npos;
        d.for_each([&](std::size_t i) {
          if (d.subset_of(order.down(i))) max = i;
        });
        if (max == Bits::npos) {
          t.is_d_space = false;  // a directed net with no eventual maximum
          return;
        }
        for (const auto& c : closed)
          if (!c.test(sup) && c.test(max)) t.is_d_space = false;
      },
      budget);
  return t;
}

}  // namespace

SpaceTraits classify_space(const FiniteSpace& x, std::size_t budget) {
  return classify_t0(x.specialization(), x.closed_sets(), budget);
}

SpaceTraits classify_closed_family(std::size_t universe, const std::vector<Bits>& closed,
                                   std::size_t budget) {
  SetFamily fam(universe, closed);
  auto up = specialization_rows(universe, fam.members());
  for (std::size_t i = 0; i < universe; ++i)
    for (std::size_t j = i + 1; j < universe; ++j)
      if (up[i].test(j) && up[j].test(i)) return SpaceTraits{};  // not T0
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < universe; ++i) labels.push_back("p" + std::to_string(i));
  FinitePoset order(std::move(labels), std::move(up));
  std::vector<Bits> sorted = fam.members();
  std::sort(sorted.begin(), sorted.end(), Bits::family_less);
  return classify_t0(order, sorted, budget);
}

}  // namespace ordertop
