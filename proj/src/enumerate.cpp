#include "ordertop/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ordertop/errors.hpp"
#include "ordertop/iso.hpp"

namespace ordertop {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
  return labels;
}

// Relabel into canonical order so equal classes become equal objects.
FinitePoset canonicalize(const FinitePoset& p) {
  auto ord = canonical_order(p);          // ord[pos] = original index
  std::vector<std::size_t> pos(p.size()); // original index -> position
  for (std::size_t k = 0; k < ord.size(); ++k) pos[ord[k]] = k;
  std::vector<Bits> up(p.size(), Bits(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) up[pos[i]].set(pos[j]);
  return FinitePoset(default_labels(p.size()), std::move(up));
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  if (n == 0 || n > 7) throw SizeLimit("enumeration supports 1..7 elements");

  std::vector<FinitePoset> level;
  level.push_back(FinitePoset(default_labels(1), {Bits::full(1)}));

  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, FinitePoset> next;
    for (const auto& p : level) {
      // every k-poset is some (k-1)-poset plus a maximal element whose
      // strict ideal is a lower set
      for (const auto& d : p.lower_sets()) {
        std::vector<Bits> up(k, Bits(k));
        for (std::size_t i = 0; i + 1 < k; ++i) {
          p.up(i).for_each([&](std::size_t j) { up[i].set(j); });
          if (d.test(i)) up[i].set(k - 1);
        }
        up[k - 1].set(k - 1);
        FinitePoset q = canonicalize(FinitePoset(default_labels(k), std::move(up)));
        next.try_emplace(canonical_form(q), std::move(q));
      }
    }
    level.clear();
    for (auto& [form, q] : next) level.push_back(std::move(q));
  }

  if (n == 1) return level;
  std::sort(level.begin(), level.end(), [](const FinitePoset& a, const FinitePoset& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return level;
}

BruteForceCount brute_force_poset_count(std::size_t n) {
  if (n == 0 || n > 6) throw SizeLimit("brute-force oracle supports 1..6 elements");

  std::vector<std::pair<std::size_t, std::size_t>> slots;  // i < j index pairs
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::uint64_t total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= 3;

  BruteForceCount out;
  std::vector<std::string> forms;
  std::vector<std::uint8_t> up(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<std::uint8_t>(1u << i);
    for (const auto& [i, j] : slots) {
      switch (c % 3) {
        case 1: up[i] |= std::uint8_t(1u << j); break;  // i < j
        case 2: up[j] |= std::uint8_t(1u << i); break;  // j < i
        default: break;                                 // incomparable
      }
      c /= 3;
    }
    // transitive iff each row absorbs the rows it can see
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      std::uint8_t reach = up[i];
      for (std::size_t j = 0; j < n; ++j)
        if (up[i] & (1u << j)) reach |= up[j];
      transitive = reach == up[i];
    }
    if (!transitive) continue;
    ++out.labeled;

    std::vector<Bits> rows(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (up[i] & (1u << j)) rows[i].set(j);
    forms.push_back(canonical_form(FinitePoset(default_labels(n), std::move(rows))));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  out.classes = forms.size();
  return out;
}

}  // namespace ordertop
