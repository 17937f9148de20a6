#pragma once

#include <cstddef>

#include "posets/interval_tree.hpp"
#include "posets/poset.hpp"

namespace posets {

/// Down(a). Requires that no member of b lies below a member of a; the
/// least offending pair is reported otherwise.
ElemSet separate_down(const Poset& p, const ElemSet& a, const ElemSet& b);

/// Depth-k member of the separation tree, built from what is revealed by
/// stage k: sigma(x) = 1 iff x is in P and x <= y for some y in a with
/// id(y) < k. Membership of a (resp. b) is revealed for ids below k, the
/// finite analogue of a bounded existential search. The result is checked
/// against T(P) and both separation clauses before it is returned.
ApproxSeq separation_tree(const Poset& p, const ElemSet& a, const ElemSet& b, std::size_t k);

/// Down(d) for a maximal antichain d, computed both as {x : x <= some d} and
/// as {x : no d < x}; the two descriptions must agree.
ElemSet maximal_antichain_interval(const Poset& p, const ElemSet& d);

struct AntichainSeparation {
  ElemSet interval;
  std::size_t certificate;  ///< min_ideal_cover of `interval`
};

/// Initial interval containing the antichain d and nothing strictly above
/// any member of d. Distinct members of d are incompatible inside it, so it
/// needs at least |d| ideals; `certificate` is the exact minimum.
AntichainSeparation antichain_separator(const Poset& p, const ElemSet& d);

/// Int(restrict(p, q)) == {J n q : J in Int(p)}, by enumerating both sides.
bool restriction_identity_check(const Poset& p, const ElemSet& q);

}  // namespace posets
