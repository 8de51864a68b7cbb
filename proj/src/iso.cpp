#include "ordertop/iso.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ordertop {

namespace {

// Iterative refinement: recolor by (color, multiset of strict-down colors,
// multiset of strict-up colors) until stable.  Colors are numbered by sorted
// signature, so the numbering is a poset invariant.
std::vector<std::size_t> refine_colors(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<Sig> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> below, above;
      p.down(i).for_each([&](std::size_t j) {
        if (j != i) below.push_back(color[j]);
      });
      p.up(i).for_each([&](std::size_t j) {
        if (j != i) above.push_back(color[j]);
      });
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[i] = {color[i], std::move(below), std::move(above)};
    }
    std::map<Sig, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [k, v] : ids) v = next++;
    std::vector<std::size_t> fresh(n);
    for (std::size_t i = 0; i < n; ++i) fresh[i] = ids.at(sig[i]);
    if (next == classes && fresh == color) break;
    classes = next;
    color = std::move(fresh);
    if (classes == n) break;
  }
  return color;
}

// v and w are twins when transposing them is an automorphism.
bool twins(const FinitePoset& p, std::size_t v, std::size_t w) {
  if (p.leq(v, w) != p.leq(w, v)) return false;
  for (std::size_t u = 0; u < p.size(); ++u) {
    if (u == v || u == w) continue;
    if (p.leq(v, u) != p.leq(w, u)) return false;
    if (p.leq(u, v) != p.leq(u, w)) return false;
  }
  return true;
}

struct CanonSearch {
  const FinitePoset& p;
  std::vector<std::size_t> color;
  std::vector<std::size_t> target;   // required color per position
  std::vector<std::size_t> chosen;   // current order
  std::vector<bool> used;
  std::vector<std::uint8_t> cur;     // current relation bits, 2 per prior element
  std::vector<std::uint8_t> best;
  std::vector<std::size_t> best_order;
  bool have_best = false;

  explicit CanonSearch(const FinitePoset& poset) : p(poset), color(refine_colors(poset)) {
    target = color;
    std::sort(target.begin(), target.end());
    used.assign(p.size(), false);
  }

  void run() { place(0, 0); }

  // cmp: -1 current prefix already beats best, 0 equal so far.
  void place(std::size_t pos, int cmp) {
    const std::size_t n = p.size();
    if (pos == n) {
      if (!have_best || cmp < 0) {
        best = cur;
        best_order = chosen;
        have_best = true;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || color[v] != target[pos]) continue;
      bool pruned = false;
      for (std::size_t u : tried)
        if (twins(p, u, v)) {
          pruned = true;  // same subtree as an already-explored sibling
          break;
        }
      if (pruned) continue;
      tried.push_back(v);

      const std::size_t base = cur.size();
      for (std::size_t q = 0; q < pos; ++q) {
        cur.push_back(p.leq(chosen[q], v) ? 1 : 0);
        cur.push_back(p.leq(v, chosen[q]) ? 1 : 0);
      }
      int next_cmp = cmp;
      if (have_best && next_cmp == 0) {
        for (std::size_t t = base; t < cur.size() && next_cmp == 0; ++t) {
          if (cur[t] < best[t]) next_cmp = -1;
          if (cur[t] > best[t]) next_cmp = 1;
        }
      }
      if (next_cmp <= 0) {
        chosen.push_back(v);
        used[v] = true;
        place(pos + 1, next_cmp);
        used[v] = false;
        chosen.pop_back();
      }
      cur.resize(base);
    }
  }
};

}  // namespace

std::vector<std::size_t> canonical_order(const FinitePoset& p) {
  if (p.size() == 0) return {};
  CanonSearch s(p);
  s.run();
  return s.best_order;
}

std::string canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  auto order = canonical_order(p);
  std::string out;
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((n >> shift) & 0xff));
  std::uint8_t acc = 0;
  int nbits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | (p.leq(order[i], order[j]) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

std::string canonical_hex(const FinitePoset& p) {
  static const char* digits = "0123456789abcdef";
  std::string hex;
  for (unsigned char c : canonical_form(p)) {
    hex.push_back(digits[c >> 4]);
    hex.push_back(digits[c & 0xf]);
  }
  return hex;
}

std::optional<IsoCertificate> poset_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size();
  if (n != q.size()) return std::nullopt;
  // Quick invariant filter: the multisets of (|down|, |up|) must match.
  auto degrees = [](const FinitePoset& r) {
    std::vector<std::pair<std::size_t, std::size_t>> d;
    for (std::size_t i = 0; i < r.size(); ++i)
      d.emplace_back(r.down(i).count(), r.up(i).count());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(p) != degrees(q)) return std::nullopt;

  std::vector<std::size_t> map(n, Bits::npos);
  std::vector<bool> taken(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (taken[v]) continue;
      if (p.down(u).count() != q.down(v).count()) continue;
      if (p.up(u).count() != q.up(v).count()) continue;
      bool ok = true;
      for (std::size_t a = 0; a < u && ok; ++a) {
        if (p.leq(a, u) != q.leq(map[a], v)) ok = false;
        if (p.leq(u, a) != q.leq(v, map[a])) ok = false;
      }
      if (!ok) continue;
      map[u] = v;
      taken[v] = true;
      if (extend(u + 1)) return true;
      taken[v] = false;
      map[u] = Bits::npos;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  IsoCertificate cert;
  cert.mapping = map;
  cert.verified = true;
  for (std::size_t i = 0; i < n && cert.verified; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(i, j) != q.leq(map[i], map[j])) {
        cert.verified = false;
        break;
      }
  if (!cert.verified) return std::nullopt;  // internal inconsistency guard
  return cert;
}

}  // namespace ordertop
