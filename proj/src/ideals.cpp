#include "posets/ideals.hpp"

#include <algorithm>
#include <numeric>

#include "posets/antichains.hpp"

namespace posets {

bool is_ideal(const Poset& p, const ElemSet& a) {
  if (!is_initial_interval(p, a)) return false;
  const auto members = a.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!compatible(p, members[i], members[j], a)) return false;
  return true;
}

ElemSet compatibility_class(const Poset& p, Elem z) {
  if (z >= p.size()) throw PreconditionError("compatibility_class: element not in carrier");
  return down_closure(p, p.up(z));
}

IdealCover et_decompose(const Poset& p) {
  IdealCover cover{p.carrier(), {}, p.none()};
  const auto s = max_strong_antichain(p);
  cover.witness = s.witness;
  ElemSet covered = p.none();
  s.witness.for_each([&](Elem z) {
    ElemSet part = compatibility_class(p, z);
    if (!is_ideal(p, part)) throw InvariantViolation("et_decompose: compatibility class is not an ideal");
    covered |= part;
    cover.parts.push_back(std::move(part));
  });
  if (covered != cover.target) throw InvariantViolation("et_decompose: parts do not cover the carrier");
  return cover;
}

IdealCover decompose_interval(const Poset& p, const ElemSet& i) {
  if (!is_initial_interval(p, i)) throw PreconditionError("decompose_interval: set is not an initial interval");
  const Poset sub = restrict(p, i);
  const IdealCover inner = et_decompose(sub);
  IdealCover out{i, {}, lift(p, i, inner.witness)};
  for (const auto& part : inner.parts) out.parts.push_back(lift(p, i, part));
  return out;
}

namespace {

ElemSet union_of(const std::vector<ElemSet>& family, const std::vector<std::size_t>& idx, std::size_t universe) {
  ElemSet u(universe);
  for (auto i : idx) u |= family[i];
  return u;
}

}  // namespace

std::vector<std::size_t> essential_reduce_indices(const std::vector<ElemSet>& family) {
  if (family.empty()) return {};
  const std::size_t universe = family.front().universe();
  for (const auto& s : family)
    if (s.universe() != universe) throw PreconditionError("essential_reduce: sets over different universes");
  std::vector<std::size_t> all(family.size());
  std::iota(all.begin(), all.end(), 0);
  const ElemSet total = union_of(family, all, universe);
  if (total.empty()) return {};

  // Combinations of each size in lexicographic order; the first hit is the
  // lexicographically least minimum subfamily.
  const std::size_t m = family.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (union_of(family, idx, universe) == total) return idx;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InvariantViolation("essential_reduce: full family does not reproduce its own union");
}

std::vector<ElemSet> essential_reduce(const std::vector<ElemSet>& family) {
  std::vector<ElemSet> out;
  for (auto i : essential_reduce_indices(family)) out.push_back(family[i]);
  return out;
}

bool is_essential(const std::vector<ElemSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    ElemSet others(family[i].universe());
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) others |= family[j];
    if (family[i].subset_of(others)) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  std::vector<ElemSet> cones;
  std::size_t best;

  void run(const ElemSet& uncovered, std::size_t used) {
    if (uncovered.empty()) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    // Branch on the uncovered element with the fewest candidate cones.
    Elem pick = uncovered.universe();
    std::size_t fewest = SIZE_MAX;
    uncovered.for_each([&](Elem e) {
      std::size_t options = 0;
      for (const auto& c : cones) options += c.contains(e);
      if (options < fewest) {
        fewest = options;
        pick = e;
      }
    });
    for (const auto& c : cones)
      if (c.contains(pick)) run(uncovered - c, used + 1);
  }
};

}  // namespace

std::size_t min_ideal_cover(const Poset& p, const ElemSet& target) {
  if (!is_initial_interval(p, target)) throw PreconditionError("min_ideal_cover: target is not an initial interval");
  CoverSearch search;
  target.for_each([&](Elem x) { search.cones.push_back(p.down(x)); });
  search.best = search.cones.size();
  search.run(target, 0);
  return search.best;
}

}  // namespace posets
