#pragma once

// Brute-force reference implementations. They only use Poset::leq and plain
// loops over subsets, so they share no code paths with the library
// algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "posets/elem_set.hpp"
#include "posets/poset.hpp"

namespace oracle {

using posets::Elem;
using posets::ElemSet;
using posets::Poset;
using Mask = std::uint64_t;
using Members = std::vector<Elem>;

inline Members members(Mask m, std::size_t n) {
  Members out;
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1) out.push_back(i);
  return out;
}

inline Mask mask_of(const ElemSet& s) {
  Mask m = 0;
  s.for_each([&](Elem e) { m |= Mask{1} << e; });
  return m;
}

inline ElemSet set_of(Mask m, std::size_t n) {
  ElemSet s(n);
  for (Elem e : members(m, n)) s.insert(e);
  return s;
}

inline bool is_downset(const Poset& p, Mask m) {
  for (std::size_t y = 0; y < p.size(); ++y)
    if ((m >> y) & 1)
      for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, y) && !((m >> x) & 1)) return false;
  return true;
}

/// Every downward-closed subset, as masks, by filtering all 2^n subsets.
inline std::vector<Mask> downsets(const Poset& p) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m)
    if (is_downset(p, m)) out.push_back(m);
  return out;
}

inline std::uint64_t count_downsets(const Poset& p) { return downsets(p).size(); }

/// Downsets of the suborder on `within`, as masks of the ambient poset.
inline std::vector<Mask> downsets_within(const Poset& p, Mask within) {
  std::vector<Mask> out;
  for (Mask m = within;; m = (m - 1) & within) {
    bool ok = true;
    for (std::size_t y = 0; y < p.size() && ok; ++y)
      if ((m >> y) & 1)
        for (std::size_t x = 0; x < p.size() && ok; ++x)
          if (((within >> x) & 1) && p.leq(x, y) && !((m >> x) & 1)) ok = false;
    if (ok) out.push_back(m);
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Mask down_of(const Poset& p, Mask m) {
  Mask out = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (((m >> y) & 1) && p.leq(x, y)) out |= Mask{1} << x;
  return out;
}

inline bool compatible_in(const Poset& p, Elem x, Elem y, Mask within) {
  for (std::size_t z = 0; z < p.size(); ++z)
    if (((within >> z) & 1) && p.leq(x, z) && p.leq(y, z)) return true;
  return false;
}

inline bool is_strong(const Poset& p, Mask m) {
  const Mask all = (Mask{1} << p.size()) - 1;
  const auto ms = members(m, p.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (compatible_in(p, ms[i], ms[j], all)) return false;
  return true;
}

struct StrongResult {
  std::size_t size = 0;
  Mask witness = 0;
};

/// Largest strong antichain over all subsets; ties go to the lexicographically
/// least member list.
inline StrongResult max_strong_antichain(const Poset& p) {
  StrongResult best;
  Members best_members;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    if (!is_strong(p, m)) continue;
    const auto ms = members(m, p.size());
    if (ms.size() > best.size || (ms.size() == best.size && ms < best_members)) {
      best = {ms.size(), m};
      best_members = ms;
    }
  }
  return best;
}

inline std::size_t count_maximal(const Poset& p) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool maximal = true;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (y != x && p.leq(x, y)) maximal = false;
    count += maximal;
  }
  return count;
}

inline bool directed(const Poset& p, Mask a) {
  const auto ms = members(a, p.size());
  for (Elem x : ms)
    for (Elem y : ms)
      if (!compatible_in(p, x, y, a)) return false;
  return true;
}

/// Ideal of the suborder on `within`: downward closed there and directed.
inline bool is_ideal_within(const Poset& p, Mask a, Mask within) {
  const auto ds = downsets_within(p, within);
  return std::binary_search(ds.begin(), ds.end(), a) && directed(p, a);
}

/// Least k such that `target` is a union of k ideals of the suborder on
/// `target`, searching all subfamilies of all ideals found by definition.
inline std::size_t min_ideal_cover(const Poset& p, Mask target) {
  if (target == 0) return 0;
  std::vector<Mask> ideals;
  for (Mask a : downsets_within(p, target))
    if (a != 0 && directed(p, a)) ideals.push_back(a);
  for (std::size_t k = 1; k <= ideals.size(); ++k) {
    std::vector<bool> pick(ideals.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      Mask u = 0;
      for (std::size_t i = 0; i < ideals.size(); ++i)
        if (pick[i]) u |= ideals[i];
      if (u == target) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SIZE_MAX;
}

/// Minimum union-preserving subfamily, lex-least index list among minima.
inline std::vector<std::size_t> min_subfamily(const std::vector<Mask>& family) {
  Mask full = 0;
  for (Mask m : family) full |= m;
  std::vector<std::size_t> best;
  bool found = false;
  for (Mask pick = 0; pick < (Mask{1} << family.size()); ++pick) {
    Mask u = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < family.size(); ++i)
      if ((pick >> i) & 1) {
        u |= family[i];
        idx.push_back(i);
      }
    if (u != full) continue;
    if (!found || idx.size() < best.size() || (idx.size() == best.size() && idx < best)) {
      best = idx;
      found = true;
    }
  }
  return best;
}

/// Random poset from a random relation: a random linear order of n points
/// plus random pairs along it, closed by Warshall. Deliberately different
/// from the library generator.
inline Poset random_poset(std::size_t n, std::mt19937_64& rng, double density) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  posets::Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[order[i]][order[i]] = true;
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) rel[order[i]][order[j]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  return posets::make_poset(rel);
}

}  // namespace oracle
