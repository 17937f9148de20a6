#include "posets/interval_tree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace posets {

bool ApproxSeq::prefix_of(const ApproxSeq& other) const {
  return bits.size() <= other.bits.size() && std::equal(bits.begin(), bits.end(), other.bits.begin());
}

bool incompatible(const ApproxSeq& a, const ApproxSeq& b) { return !a.prefix_of(b) && !b.prefix_of(a); }

bool tp_member(const Poset& p, const ApproxSeq& sigma) {
  const std::size_t len = sigma.length();
  for (std::size_t pos = 0; pos < len; ++pos) {
    if (!sigma.at(pos)) continue;
    auto y = p.index_of(pos);
    if (!y) return false;
    bool ok = true;
    p.down(*y).for_each([&](Elem x) {
      if (p.id(x) < len && !sigma.at(p.id(x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

ApproxSeq characteristic(const Poset& p, const ElemSet& i, std::size_t length) {
  ApproxSeq s{std::vector<std::uint8_t>(length, 0)};
  i.for_each([&](Elem e) {
    if (p.id(e) < length) s.bits[p.id(e)] = 1;
  });
  return s;
}

ElemSet ones(const Poset& p, const ApproxSeq& sigma) {
  ElemSet out = p.none();
  for (std::size_t pos = 0; pos < sigma.length(); ++pos)
    if (sigma.at(pos))
      if (auto e = p.index_of(pos)) out.insert(*e);
  return out;
}

namespace {

// Ids are increasing in the internal index, so walking indices in order is
// the same as walking the decided positions of T(P) in order; positions
// outside the carrier are forced to 0 and contribute no branching.
struct IntervalWalk {
  const Poset& p;
  const std::function<bool(const ElemSet&)>& visit;
  std::size_t cap;
  std::size_t produced = 0;
  ElemSet in;
  ElemSet out;

  bool step(Elem x) {
    if (x == p.size()) {
      if (++produced > cap) throw CapExceeded("interval enumeration exceeded cap of " + std::to_string(cap));
      return visit(in);
    }
    if (!p.up(x).intersects(in)) {
      out.insert(x);
      bool go = step(x + 1);
      out.erase(x);
      if (!go) return false;
    }
    if (!p.down(x).intersects(out)) {
      in.insert(x);
      bool go = step(x + 1);
      in.erase(x);
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_interval(const Poset& p, const std::function<bool(const ElemSet&)>& visit, std::size_t cap) {
  IntervalWalk walk{p, visit, cap, 0, p.none(), p.none()};
  walk.step(0);
}

std::vector<ElemSet> enumerate_intervals(const Poset& p, std::size_t cap) {
  std::vector<ElemSet> out;
  for_each_interval(
      p,
      [&](const ElemSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

std::uint64_t count_intervals(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Sorting by down-set size gives a linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return p.down(a).count() < p.down(b).count(); });

  ElemSet undecided = p.carrier();
  std::unordered_map<ElemSet, std::uint64_t, ElemSetHash> states{{p.none(), 1}};
  for (Elem x : order) {
    undecided.erase(x);
    std::unordered_map<ElemSet, std::uint64_t, ElemSetHash> next;
    auto add = [&](ElemSet frontier, std::uint64_t ways) {
      ElemSet pruned = frontier;
      frontier.for_each([&](Elem e) {
        if (!p.up(e).intersects(undecided)) pruned.erase(e);
      });
      auto& slot = next[pruned];
      if (__builtin_add_overflow(slot, ways, &slot)) throw CapExceeded("interval count exceeds 64 bits");
    };
    for (const auto& [frontier, ways] : states) {
      ElemSet left_out = frontier;
      left_out.insert(x);
      add(left_out, ways);
      if (!p.down(x).intersects(frontier)) add(frontier, ways);
    }
    states = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [frontier, ways] : states)
    if (__builtin_add_overflow(total, ways, &total)) throw CapExceeded("interval count exceeds 64 bits");
  return total;
}

bool free_for(const Poset& p, const ApproxSeq& tau, Elem x) {
  if (!tp_member(p, tau)) throw PreconditionError("free_for: sequence is not in T(P)");
  if (x >= p.size()) throw PreconditionError("free_for: element not in carrier");
  for (Elem y = 0; y < p.size() && p.id(y) < tau.length(); ++y) {
    if (tau.at(p.id(y)) ? p.leq(x, y) : p.leq(y, x)) return false;
  }
  return true;
}

namespace {

// Value forced on an undecided carrier element by tau, if any.
std::optional<bool> forced_value(const Poset& p, const ApproxSeq& tau, Elem x) {
  for (Elem y = 0; y < p.size() && p.id(y) < tau.length(); ++y) {
    if (!tau.at(p.id(y)) && p.leq(y, x)) return false;
    if (tau.at(p.id(y)) && p.leq(x, y)) return true;
  }
  return std::nullopt;
}

ApproxSeq fill_branch(const Poset& p, const ApproxSeq& tau, std::size_t length, Elem a_prime, Elem b_prime) {
  ApproxSeq out{std::vector<std::uint8_t>(length, 0)};
  std::copy(tau.bits.begin(), tau.bits.end(), out.bits.begin());
  for (Elem x = 0; x < p.size() && p.id(x) < length; ++x) {
    if (p.id(x) < tau.length()) continue;
    if (auto forced = forced_value(p, tau, x)) {
      out.bits[p.id(x)] = *forced;
      continue;
    }
    if (p.less(x, a_prime))
      out.bits[p.id(x)] = 1;
    else if (p.less(b_prime, x))
      out.bits[p.id(x)] = 0;
    else
      out.bits[p.id(x)] = 0;
  }
  return out;
}

SplitBranch make_branch(const Poset& p, const ApproxSeq& tau, const ElemSet& q, Elem lo, Elem hi, Elem b, bool value) {
  const std::size_t length = p.id(b) + 1;
  std::vector<Elem> candidates;
  q.for_each([&](Elem e) {
    if (p.id(e) > p.id(b) && p.less(lo, e) && p.less(e, hi)) candidates.push_back(e);
  });
  // candidates are in increasing id order, so the first admissible pair is
  // least by (id(a'), id(b')).
  for (Elem a_prime : candidates)
    for (Elem b_prime : candidates) {
      if (!p.less(a_prime, b_prime)) continue;
      bool gap = true;
      for (Elem x = 0; x < p.size() && p.id(x) < length && gap; ++x)
        if (p.less(a_prime, x) && p.less(x, b_prime)) gap = false;
      if (!gap) continue;
      ApproxSeq branch = fill_branch(p, tau, length, a_prime, b_prime);
      if (branch.at(p.id(b)) != value) continue;
      if (!free_for(p, branch, a_prime) || !free_for(p, branch, b_prime)) continue;
      if (!tp_member(p, branch)) throw InvariantViolation("split: constructed branch left T(P)");
      return {std::move(branch), a_prime, b_prime};
    }
  throw PreconditionError("split: chain has no admissible pair between " + p.name(lo) + " and " + p.name(hi) +
                          " beyond id " + std::to_string(p.id(b)));
}

}  // namespace

Split split(const Poset& p, const ApproxSeq& tau, Elem a, Elem b, Elem c, const ElemSet& q) {
  if (!tp_member(p, tau)) throw PreconditionError("split: sequence is not in T(P)");
  if (!is_chain(p, q)) throw PreconditionError("split: reference set is not a chain");
  if (!q.contains(a) || !q.contains(b) || !q.contains(c)) throw PreconditionError("split: a, b, c must lie in the chain");
  if (!p.less(a, b) || !p.less(b, c)) throw PreconditionError("split: need a < b < c");
  if (!free_for(p, tau, a) || !free_for(p, tau, b) || !free_for(p, tau, c))
    throw PreconditionError("split: a, b, c must be free for the sequence");
  return {make_branch(p, tau, q, a, b, b, false), make_branch(p, tau, q, b, c, b, true)};
}

ElemSet cone_restrict(const Poset& p, const ElemSet& f, const ElemSet& g, const ElemSet& h) {
  ElemSet out = p.carrier();
  f.for_each([&](Elem x) { out &= cones(p, x).strict_down; });
  g.for_each([&](Elem x) { out &= cones(p, x).strict_up; });
  h.for_each([&](Elem x) { out &= cones(p, x).inc; });
  return out;
}

namespace {

using SetOfSets = std::unordered_set<ElemSet, ElemSetHash>;

std::vector<ElemSet> lifted_intervals(const Poset& p, const ElemSet& region) {
  std::vector<ElemSet> out;
  const Poset sub = restrict(p, region);
  for_each_interval(sub, [&](const ElemSet& s) {
    out.push_back(lift(p, region, s));
    return true;
  });
  return out;
}

}  // namespace

FactorizationReport factorization_report(const Poset& p, Elem x) {
  const Cones c = cones(p, x);
  SetOfSets excluded, included;
  for_each_interval(p, [&](const ElemSet& i) {
    (i.contains(x) ? included : excluded).insert(i);
    return true;
  });

  const auto below = lifted_intervals(p, c.strict_down);
  const auto above = lifted_intervals(p, c.strict_up);
  const auto side = lifted_intervals(p, c.inc);

  SetOfSets excluded_rhs, included_rhs;
  for (const auto& j : side) {
    const ElemSet down_j = down_closure(p, j);
    for (const auto& i : below) excluded_rhs.insert(i | down_j);
    for (const auto& i : above) {
      ElemSet gen = i | j;
      gen.insert(x);
      included_rhs.insert(down_closure(p, gen));
    }
  }
  return {excluded == excluded_rhs, included == included_rhs};
}

bool factorization_check(const Poset& p, Elem x) {
  if (x >= p.size()) throw PreconditionError("factorization_check: element not in carrier");
  return factorization_report(p, x).ok();
}

}  // namespace posets
