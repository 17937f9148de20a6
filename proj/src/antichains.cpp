#include "posets/antichains.hpp"

#include <vector>

namespace posets {

bool is_antichain(const Poset& p, const ElemSet& d) {
  bool ok = true;
  d.for_each([&](Elem x) {
    ElemSet others = d;
    others.erase(x);
    ok = ok && !others.intersects(p.up(x));
  });
  return ok;
}

bool is_strong_antichain(const Poset& p, const ElemSet& s) {
  // x and y are compatible iff up(x) meets up(y); accumulate the union of
  // up-sets seen so far and test each new member against it.
  ElemSet seen_up = p.none();
  bool ok = true;
  s.for_each([&](Elem x) {
    ok = ok && !p.up(x).intersects(seen_up);
    seen_up |= p.up(x);
  });
  return ok;
}

bool is_maximal_antichain(const Poset& p, const ElemSet& d) {
  if (!is_antichain(p, d)) return false;
  for (Elem x = 0; x < p.size(); ++x) {
    if (d.contains(x)) continue;
    ElemSet grown = d;
    grown.insert(x);
    if (is_antichain(p, grown)) return false;
  }
  return true;
}

bool is_maximal_strong_antichain(const Poset& p, const ElemSet& s) {
  if (!is_strong_antichain(p, s)) return false;
  for (Elem x = 0; x < p.size(); ++x) {
    if (s.contains(x)) continue;
    ElemSet grown = s;
    grown.insert(x);
    if (is_strong_antichain(p, grown)) return false;
  }
  return true;
}

ElemSet extend_maximal_antichain(const Poset& p, const ElemSet& d) {
  if (!is_antichain(p, d)) throw PreconditionError("extend_maximal_antichain: input is not an antichain");
  ElemSet kept = d;
  ElemSet blocked = up_closure(p, d) | down_closure(p, d);
  for (Elem x = 0; x < p.size(); ++x) {
    if (kept.contains(x) || blocked.contains(x)) continue;
    kept.insert(x);
    blocked |= p.up(x);
    blocked |= p.down(x);
  }
  return kept;
}

ElemSet extend_maximal_strong_antichain(const Poset& p, const ElemSet& s) {
  if (!is_strong_antichain(p, s))
    throw PreconditionError("extend_maximal_strong_antichain: input is not a strong antichain");
  ElemSet kept = s;
  ElemSet kept_up = up_closure(p, s);
  for (Elem x = 0; x < p.size(); ++x) {
    if (kept.contains(x) || p.up(x).intersects(kept_up)) continue;
    kept.insert(x);
    kept_up |= p.up(x);
  }
  return kept;
}

StrongAntichain max_strong_antichain(const Poset& p) {
  ElemSet witness = ElemSet::of(p.size(), maximal_elements(p));
  return {witness.count(), witness};
}

ConeRefinement refine_cone(const Poset& p, const ElemSet& s, const ElemSet& t) {
  if (!is_maximal_strong_antichain(p, s))
    throw PreconditionError("refine_cone: first set is not a maximal strong antichain");
  if (!is_strong_antichain(p, t)) throw PreconditionError("refine_cone: second set is not a strong antichain");
  const std::size_t n = s.count();
  if (n == 0 || t.count() == 0 || t.count() % n != 0)
    throw PreconditionError("refine_cone: |T| must be a positive multiple of |S|");
  const std::size_t k = t.count() / n;

  std::vector<ElemSet> v_by_u(p.size(), p.none());
  t.for_each([&](Elem y) {
    bool found = false;
    s.for_each([&](Elem u) {
      if (found) return;
      ElemSet common = p.up(u) & p.up(y);
      if (common.empty()) return;
      v_by_u[u].insert(common.first());
      found = true;
    });
    if (!found) throw InvariantViolation("refine_cone: element compatible with no member of a maximal strong antichain");
  });
  for (Elem u = s.first(); u < p.size(); u = s.next(u + 1))
    if (v_by_u[u].count() >= k) return {u, v_by_u[u]};
  throw InvariantViolation("refine_cone: pigeonhole produced no cone with k elements");
}

}  // namespace posets
