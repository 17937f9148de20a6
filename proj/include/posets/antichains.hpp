#pragma once

#include <cstddef>

#include "posets/poset.hpp"

namespace posets {

bool is_antichain(const Poset& p, const ElemSet& d);

/// Pairwise incompatible in the whole poset: no two members share an upper bound.
bool is_strong_antichain(const Poset& p, const ElemSet& s);

/// True iff no element outside `d` can be added while keeping an antichain.
bool is_maximal_antichain(const Poset& p, const ElemSet& d);
bool is_maximal_strong_antichain(const Poset& p, const ElemSet& s);

/// Greedy scan by increasing index: x is kept iff d, the elements already
/// kept and x together still form an antichain.
ElemSet extend_maximal_antichain(const Poset& p, const ElemSet& d);

/// Same greedy scan, keeping x iff the result stays a strong antichain.
ElemSet extend_maximal_strong_antichain(const Poset& p, const ElemSet& s);

struct StrongAntichain {
  std::size_t size;
  ElemSet witness;
};

/// Largest strong antichain. In a finite poset distinct maximal elements are
/// pairwise incompatible, and every strong antichain maps injectively to
/// maximal elements above its members, so the maximal elements are a witness.
StrongAntichain max_strong_antichain(const Poset& p);

struct ConeRefinement {
  Elem u;
  ElemSet v;
};

/// Pigeonhole step used when pushing large strong antichains into one cone.
/// `s` must be a maximal strong antichain and `t` a strong antichain with
/// |t| = |s| * k. Each y in t is sent to its least pair (u(y), v(y)),
/// ordered by u then v, with u(y) in s and u(y), y <= v(y). Returns the least
/// u hit at least k times together with {v(y) : u(y) = u}.
ConeRefinement refine_cone(const Poset& p, const ElemSet& s, const ElemSet& t);

}  // namespace posets
