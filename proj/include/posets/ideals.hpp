#pragma once

#include <cstddef>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// A finite covering of `target` by ideals. `witness` is the strong
/// antichain the parts were generated from (empty when not applicable).
struct IdealCover {
  ElemSet target;
  std::vector<ElemSet> parts;
  ElemSet witness;
};

/// Initial interval whose members are pairwise compatible inside it.
bool is_ideal(const Poset& p, const ElemSet& a);

/// {x : x and z have a common upper bound in p}. Always an initial interval.
ElemSet compatibility_class(const Poset& p, Elem z);

/// Decomposes the whole carrier into compatibility classes A_z, one per
/// member z of a maximum strong antichain. Every part is checked to be an
/// ideal; a failure throws InvariantViolation.
IdealCover et_decompose(const Poset& p);

/// et_decompose on restrict(p, i), parts lifted back into p.
IdealCover decompose_interval(const Poset& p, const ElemSet& i);

/// Indices of a minimum-cardinality subfamily with the same union. Among
/// subfamilies of that size the lexicographically least index list wins.
/// A minimum subfamily is automatically essential: no member is covered by
/// the union of the others.
std::vector<std::size_t> essential_reduce_indices(const std::vector<ElemSet>& family);
std::vector<ElemSet> essential_reduce(const std::vector<ElemSet>& family);

/// True iff every member owns a point outside the union of the others.
bool is_essential(const std::vector<ElemSet>& family);

/// Least k such that `target` is a union of k ideals of restrict(p, target).
///
/// On a finite poset every nonempty ideal A is principal: A is finite and
/// directed, so folding pairwise upper bounds over its members yields a
/// single top t in A, and then A = down(t). The search therefore runs over
/// the cones down(x), x in target, as an exact branch-and-bound set cover.
std::size_t min_ideal_cover(const Poset& p, const ElemSet& target);

}  // namespace posets
