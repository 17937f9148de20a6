#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "posets/poset.hpp"

namespace fixture {

using posets::Elem;
using posets::ElemSet;
using posets::Poset;

inline Poset from_pairs(std::size_t n, std::initializer_list<std::pair<Elem, Elem>> pairs,
                        std::vector<std::string> labels = {}) {
  std::vector<std::pair<Elem, Elem>> v(pairs);
  return posets::poset_from_pairs(n, v, false, {}, std::move(labels));
}

// a0 < a1 < a2
inline Poset chain3() { return from_pairs(3, {{0, 1}, {1, 2}}, {"a0", "a1", "a2"}); }
inline Poset antichain3() { return from_pairs(3, {}, {"a0", "a1", "a2"}); }
// a0, a1 < c
inline Poset vee() { return from_pairs(3, {{0, 2}, {1, 2}}, {"a0", "a1", "c"}); }
// a < c, b < c, b < d, indexed a, b, c, d
inline Poset npos() { return from_pairs(4, {{0, 2}, {1, 2}, {1, 3}}, {"a", "b", "c", "d"}); }

inline ElemSet set(const Poset& p, std::initializer_list<Elem> m) { return ElemSet(p.size(), m); }

inline std::vector<std::vector<Elem>> as_lists(const std::vector<ElemSet>& sets) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

}  // namespace fixture
