#include "ordertop/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ordertop/errors.hpp"

namespace ordertop {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bits> up_rows)
    : labels_(std::move(labels)), up_(std::move(up_rows)) {
  validate();
  const std::size_t n = size();
  down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
}

void FinitePoset::validate() const {
  const std::size_t n = labels_.size();
  if (up_.size() != n) throw InvalidInput("relation size does not match label count");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidInput("empty element label");
    if (!seen.insert(l).second) throw InvalidInput("duplicate element label: " + l);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i].universe() != n) throw InvalidInput("relation row has wrong universe");
    if (!up_[i].test(i)) throw InvalidInput("relation is not reflexive at " + labels_[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    up_[i].for_each([&](std::size_t j) {
      if (i != j && up_[j].test(i))
        throw CycleDetected("antisymmetry fails between " + labels_[i] + " and " + labels_[j]);
      if (!up_[j].subset_of(up_[i]))
        throw InvalidInput("relation is not transitive at " + labels_[i] + " <= " + labels_[j]);
    });
  }
}

FinitePoset FinitePoset::from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw InvalidInput("empty element label");
    if (!index.emplace(labels[i], i).second)
      throw InvalidInput("duplicate element label: " + labels[i]);
  }
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : edges) {
    auto it = index.find(lo);
    auto jt = index.find(hi);
    if (it == index.end()) throw UnknownLabel("unknown element label: " + lo);
    if (jt == index.end()) throw UnknownLabel("unknown element label: " + hi);
    up[it->second].set(jt->second);
  }
  // Reachability closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw CycleDetected("cycle through " + labels[i] + " and " + labels[j]);
  return FinitePoset(labels, std::move(up));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return FinitePoset(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    up[i].set(i);
  }
  return FinitePoset(std::move(labels), std::move(up));
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw UnknownLabel("unknown element label: " + label);
}

Bits FinitePoset::lower_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](std::size_t i) { r |= down_[i]; });
  return r;
}

Bits FinitePoset::upper_closure(const Bits& s) const {
  Bits r(size());
  s.for_each([&](std::size_t i) { r |= up_[i]; });
  return r;
}

bool FinitePoset::is_lower_set(const Bits& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && down_[i].subset_of(s); });
  return ok;
}

bool FinitePoset::is_upper_set(const Bits& s) const {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && up_[i].subset_of(s); });
  return ok;
}

bool FinitePoset::is_chain(const Bits& s) const {
  auto v = s.to_indices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (!leq(v[a], v[b]) && !leq(v[b], v[a])) return false;
  return true;
}

bool FinitePoset::is_antichain(const Bits& s) const {
  auto v = s.to_indices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (leq(v[a], v[b]) || leq(v[b], v[a])) return false;
  return true;
}

bool FinitePoset::is_directed(const Bits& s) const {
  if (s.none()) return false;
  auto v = s.to_indices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a; b < v.size(); ++b) {
      Bits common = up_[v[a]] & up_[v[b]];
      if (!common.intersects(s)) return false;
    }
  return true;
}

std::size_t FinitePoset::directed_sup(const Bits& s) const {
  if (s.none()) throw InvalidInput("directed_sup of empty set");
  if (!is_directed(s)) throw NotDirected("set is not directed");
  // A finite directed set has a greatest element.
  std::size_t g = Bits::npos;
  s.for_each([&](std::size_t i) {
    if (s.subset_of(down_[i])) g = i;
  });
  if (g == Bits::npos) throw Error("internal: finite directed set without greatest element");
  return g;
}

Bits FinitePoset::upper_bounds(const Bits& s) const {
  Bits r = Bits::full(size());
  s.for_each([&](std::size_t i) { r &= up_[i]; });
  return r;
}

Bits FinitePoset::minimal_upper_bounds(const Bits& s) const {
  return minimal_of(upper_bounds(s));
}

Bits FinitePoset::minimal_of(const Bits& s) const {
  Bits r(size());
  s.for_each([&](std::size_t i) {
    Bits below = down_[i] & s;
    below.reset(i);
    if (below.none()) r.set(i);
  });
  return r;
}

Bits FinitePoset::maximal_of(const Bits& s) const {
  Bits r(size());
  s.for_each([&](std::size_t i) {
    Bits above = up_[i] & s;
    above.reset(i);
    if (above.none()) r.set(i);
  });
  return r;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i].count() == size()) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (down_[i].count() == size()) return i;
  return std::nullopt;
}

FinitePoset FinitePoset::restricted(const Bits& s) const {
  auto members = s.to_indices();
  const std::size_t m = members.size();
  std::vector<std::size_t> pos(size(), Bits::npos);
  for (std::size_t k = 0; k < m; ++k) pos[members[k]] = k;
  std::vector<std::string> labels;
  labels.reserve(m);
  std::vector<Bits> up(m, Bits(m));
  for (std::size_t k = 0; k < m; ++k) {
    labels.push_back(labels_[members[k]]);
    (up_[members[k]] & s).for_each([&](std::size_t j) { up[k].set(pos[j]); });
  }
  return FinitePoset(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::opposite() const {
  return FinitePoset(labels_, down_);
}

FinitePoset FinitePoset::with_top(std::string label) const {
  if (label.empty()) label = "top";
  std::unordered_set<std::string> taken(labels_.begin(), labels_.end());
  while (taken.count(label)) label += "'";
  const std::size_t n = size();
  std::vector<std::string> labels = labels_;
  labels.push_back(label);
  std::vector<Bits> up(n + 1, Bits(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    up_[i].for_each([&](std::size_t j) { up[i].set(j); });
    up[i].set(n);
  }
  up[n].set(n);
  return FinitePoset(std::move(labels), std::move(up));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < size(); ++i) {
    Bits strict_up = up_[i];
    strict_up.reset(i);
    strict_up.for_each([&](std::size_t j) {
      Bits between = strict_up & down_[j];
      between.reset(j);
      if (between.none()) covers.emplace_back(i, j);
    });
  }
  return covers;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> order;
  order.reserve(n);
  Bits placed(n);
  while (order.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed.test(i)) continue;
      Bits need = down_[i];
      need.reset(i);
      if (need.subset_of(placed)) {
        order.push_back(i);
        placed.set(i);
        break;
      }
    }
  }
  return order;
}

std::vector<Bits> FinitePoset::lower_sets(std::size_t budget) const {
  const std::size_t n = size();
  std::vector<Bits> sets{Bits(n)};
  // Grow along a linear extension: a lower set of the extended prefix either
  // omits the new element or contains its strict down-set.
  for (std::size_t e : linear_extension()) {
    Bits need = down_[e];
    need.reset(e);
    const std::size_t old = sets.size();
    for (std::size_t k = 0; k < old; ++k) {
      if (need.subset_of(sets[k])) {
        Bits bigger = sets[k];
        bigger.set(e);
        sets.push_back(std::move(bigger));
        if (sets.size() > budget)
          throw SizeLimit("lower-set family exceeds budget of " + std::to_string(budget));
      }
    }
  }
  std::sort(sets.begin(), sets.end(), Bits::family_less);
  return sets;
}

void FinitePoset::for_each_directed_subset(const std::function<void(const Bits&)>& f,
                                           std::size_t budget) const {
  // A finite directed set is exactly a set with a greatest element, so the
  // directed subsets are the sets {g} + S with S inside the strict down-set
  // of g.  Each is visited once (its greatest element is unique).
  std::size_t visited = 0;
  const std::size_t n = size();
  for (std::size_t g = 0; g < n; ++g) {
    auto below = down_[g].to_indices();
    below.erase(std::find(below.begin(), below.end(), g));
    const std::size_t m = below.size();
    if (m >= 63) throw SizeLimit("directed-subset enumeration: down-set too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (++visited > budget)
        throw SizeLimit("directed-subset enumeration exceeds budget");
      Bits s(n);
      s.set(g);
      for (std::size_t t = 0; t < m; ++t)
        if ((mask >> t) & 1) s.set(below[t]);
      f(s);
    }
  }
}

bool FinitePoset::same_relation(const FinitePoset& o) const {
  return size() == o.size() && up_ == o.up_;
}

MubReport property_mM_report(const FinitePoset& p, std::size_t budget) {
  // ub(A) = ub(max A), so quantifying over antichains covers all subsets.
  MubReport rep;
  const std::size_t n = p.size();
  std::vector<std::size_t> stack;
  Bits current(n);

  auto check = [&](const Bits& a) {
    ++rep.antichains_checked;
    if (rep.antichains_checked > budget)
      throw SizeLimit("antichain enumeration exceeds budget");
    Bits ub = p.upper_bounds(a);
    Bits mub = p.minimal_of(ub);
    if (ub.any() && mub.none()) {
      rep.has_m = false;
      if (!rep.witness) rep.witness = {a, ub.first()};
    }
    bool covered = true;
    std::optional<std::size_t> bad;
    ub.for_each([&](std::size_t x) {
      if (!mub.intersects(p.down(x))) {
        covered = false;
        if (!bad) bad = x;
      }
    });
    if (!covered) {
      rep.has_M = false;
      if (!rep.witness) rep.witness = {a, *bad};
    }
  };

  // Depth-first antichain enumeration in index order.
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    check(current);
    for (std::size_t i = next; i < n; ++i) {
      bool compatible = true;
      current.for_each([&](std::size_t j) {
        if (p.leq(i, j) || p.leq(j, i)) compatible = false;
      });
      if (!compatible) continue;
      current.set(i);
      rec(i + 1);
      current.reset(i);
    }
  };
  rec(0);
  return rep;
}

}  // namespace ordertop
