#include "posets/separation.hpp"

#include <unordered_set>

#include "posets/antichains.hpp"
#include "posets/ideals.hpp"

namespace posets {

namespace {

void check_separable(const Poset& p, const ElemSet& a, const ElemSet& b) {
  for (Elem x = a.first(); x < p.size(); x = a.next(x + 1)) {
    ElemSet below = p.down(x) & b;
    if (!below.empty())
      throw PreconditionError("separation precondition violated: " + p.name(below.first()) + " <= " + p.name(x));
  }
}

}  // namespace

ElemSet separate_down(const Poset& p, const ElemSet& a, const ElemSet& b) {
  check_separable(p, a, b);
  ElemSet i = down_closure(p, a);
  if (!a.subset_of(i) || i.intersects(b) || !is_initial_interval(p, i))
    throw InvariantViolation("separate_down: postcondition failed");
  return i;
}

ApproxSeq separation_tree(const Poset& p, const ElemSet& a, const ElemSet& b, std::size_t k) {
  check_separable(p, a, b);
  ApproxSeq sigma{std::vector<std::uint8_t>(k, 0)};
  a.for_each([&](Elem y) {
    if (p.id(y) >= k) return;
    p.down(y).for_each([&](Elem x) {
      if (p.id(x) < k) sigma.bits[p.id(x)] = 1;
    });
  });
  if (!tp_member(p, sigma)) throw InvariantViolation("separation_tree: sequence left T(P)");
  for (Elem x = 0; x < p.size() && p.id(x) < k; ++x) {
    if (a.contains(x) && !sigma.at(p.id(x))) throw InvariantViolation("separation_tree: revealed member of A dropped");
    if (b.contains(x) && sigma.at(p.id(x))) throw InvariantViolation("separation_tree: revealed member of B kept");
  }
  return sigma;
}

ElemSet maximal_antichain_interval(const Poset& p, const ElemSet& d) {
  if (!is_maximal_antichain(p, d)) throw PreconditionError("maximal_antichain_interval: not a maximal antichain");
  const ElemSet below = down_closure(p, d);
  ElemSet strictly_above = p.none();
  d.for_each([&](Elem e) { strictly_above |= cones(p, e).strict_up; });
  const ElemSet not_above = p.carrier() - strictly_above;
  if (below != not_above) throw InvariantViolation("maximal_antichain_interval: the two descriptions disagree");
  return below;
}

AntichainSeparation antichain_separator(const Poset& p, const ElemSet& d) {
  if (!is_antichain(p, d)) throw PreconditionError("antichain_separator: not an antichain");
  if (d.count() < 2) throw PreconditionError("antichain_separator: need at least two elements");
  ElemSet strictly_above = p.none();
  d.for_each([&](Elem e) { strictly_above |= cones(p, e).strict_up; });
  ElemSet i = down_closure(p, d) - strictly_above;
  if (!is_initial_interval(p, i)) throw InvariantViolation("antichain_separator: result is not initial");
  return {i, min_ideal_cover(p, i)};
}

bool restriction_identity_check(const Poset& p, const ElemSet& q) {
  using SetOfSets = std::unordered_set<ElemSet, ElemSetHash>;
  SetOfSets inner, traces;
  const Poset sub = restrict(p, q);
  for_each_interval(sub, [&](const ElemSet& i) {
    inner.insert(lift(p, q, i));
    return true;
  });
  for_each_interval(p, [&](const ElemSet& j) {
    traces.insert(j & q);
    return true;
  });
  return inner == traces;
}

}  // namespace posets
