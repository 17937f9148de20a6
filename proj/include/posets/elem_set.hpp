#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace posets {

/// Dense element index into a poset's carrier, 0..n-1.
using Elem = std::size_t;

/// Subset of a fixed universe {0..universe-1}, stored as a packed bitset.
///
/// Every ElemSet remembers the size of the universe it lives in; binary
/// operations require both operands to share it.
class ElemSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> members) : ElemSet(universe) {
    for (Elem e : members) insert(e);
  }
  template <typename Range>
  static ElemSet of(std::size_t universe, const Range& members) {
    ElemSet s(universe);
    for (auto e : members) s.insert(static_cast<Elem>(e));
    return s;
  }
  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem e) const { return e < universe_ && ((words_[e / kBits] >> (e % kBits)) & 1U); }
  void insert(Elem e) { words_[e / kBits] |= Word{1} << (e % kBits); }
  void erase(Elem e) { words_[e / kBits] &= ~(Word{1} << (e % kBits)); }
  void set(Elem e, bool v) { v ? insert(e) : erase(e); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }
  ElemSet complement() const { return full(universe_) - *this; }

  /// Least member, or universe() when empty.
  Elem first() const { return next(0); }
  /// Least member >= from, or universe() when there is none.
  Elem next(Elem from) const {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kBits;
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    while (true) {
      if (w) return wi * kBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<Elem>(wi * kBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  const std::vector<Word>& words() const { return words_; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  /// Orders by member lists compared lexicographically (increasing index).
  friend bool operator<(const ElemSet& a, const ElemSet& b) { return a.members() < b.members(); }

 private:
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const ElemSet& s);

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.universe());
    for (auto w : s.words()) h ^= std::hash<ElemSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace posets
