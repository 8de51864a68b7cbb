#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace ordertop {

// Subset of a fixed finite universe {0, ..., n-1}, packed into 64-bit words.
// All binary operations require both operands to share the same universe.
class Bits {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bits() = default;
  explicit Bits(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bits full(std::size_t universe) {
    Bits b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bits single(std::size_t universe, std::size_t i) {
    Bits b(universe);
    b.set(i);
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // Set difference.
  Bits& operator-=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  std::size_t first() const { return next_from(0); }

  // Lowest member >= i, or npos.
  std::size_t next_from(std::size_t i) const {
    if (i >= n_) return npos;
    std::size_t k = i >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == w_.size()) return npos;
      w = w_[k];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> v;
    v.reserve(count());
    for_each([&](std::size_t i) { v.push_back(i); });
    return v;
  }

  // Lexicographic order on the sorted member sequences.  Decided at the
  // lowest index d where membership differs: the set containing d comes
  // first, unless the other set has no members beyond d at all (then it is a
  // proper prefix and comes first).
  static bool member_lex_less(const Bits& a, const Bits& b) {
    assert(a.n_ == b.n_);
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      std::uint64_t d = a.w_[k] ^ b.w_[k];
      if (!d) continue;
      std::uint64_t low = d & (~d + 1);
      const Bits& rest = (a.w_[k] & low) ? b : a;
      bool rest_has_later = (rest.w_[k] & ~((low << 1) - 1)) != 0;
      for (std::size_t t = k + 1; !rest_has_later && t < rest.w_.size(); ++t)
        rest_has_later = rest.w_[t] != 0;
      return (a.w_[k] & low) ? rest_has_later : !rest_has_later;
    }
    return false;
  }

  // Canonical order for set families: by cardinality, then member-lex.
  static bool family_less(const Bits& a, const Bits& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return member_lex_less(a, b);
  }

  struct Hash {
    std::size_t operator()(const Bits& b) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ull ^ b.n_;
      for (auto w : b.w_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0} >> (64 - (n_ & 63)));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ordertop
