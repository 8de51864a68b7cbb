#include "ordertop/family.hpp"

#include <algorithm>

#include "ordertop/errors.hpp"

namespace ordertop {

SetFamily::SetFamily(std::size_t universe, std::vector<Bits> members)
    : universe_(universe), members_(std::move(members)) {
  if (members_.empty()) throw NotAFamily("empty set family");
  std::sort(members_.begin(), members_.end(), Bits::family_less);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].universe() != universe_)
      throw NotAFamily("member has wrong universe");
    if (!index_.emplace(members_[i], i).second)
      throw NotAFamily("duplicate member in set family");
  }
  if (!members_.front().none())
    throw NotAFamily("set family does not contain the empty set");
  if (members_.back().count() != universe_)
    throw NotAFamily("set family does not contain the full carrier");
  bottom_ = 0;
  top_ = members_.size() - 1;
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      if (!index_.count(members_[i] | members_[j]))
        throw NotAFamily("set family is not closed under union");
      if (!index_.count(members_[i] & members_[j]))
        throw NotAFamily("set family is not closed under intersection");
    }
}

std::optional<std::size_t> SetFamily::index_of(const Bits& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SetFamily::join(std::size_t i, std::size_t j) const {
  return *index_of(members_[i] | members_[j]);
}

std::size_t SetFamily::meet(std::size_t i, std::size_t j) const {
  return *index_of(members_[i] & members_[j]);
}

std::size_t SetFamily::smallest_containing(const Bits& s) const {
  Bits acc = Bits::full(universe_);
  for (const auto& m : members_)
    if (s.subset_of(m)) acc &= m;
  auto idx = index_of(acc);
  if (!idx) throw NotAFamily("family is not closed under the needed intersection");
  return *idx;
}

SetFamily scott_closed_family(const FinitePoset& p, std::size_t budget) {
  return SetFamily(p.size(), p.lower_sets(budget));
}

}  // namespace ordertop
