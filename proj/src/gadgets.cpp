#include "posets/gadgets.hpp"

#include <algorithm>
#include <cctype>

#include "posets/antichains.hpp"

namespace posets {

FnTable::FnTable(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  std::vector<std::uint64_t> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("function table is not one-to-one");
}

NatSet FnTable::range(std::size_t len) const {
  NatSet out;
  for (std::size_t i = 0; i < values_.size() && i < len; ++i) out.insert(values_[i]);
  return out;
}

std::optional<std::size_t> FnTable::preimage(std::uint64_t v) const {
  auto it = std::find(values_.begin(), values_.end(), v);
  if (it == values_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

void check_disjoint(const FnTable& f, const FnTable& g) {
  for (auto v : f.values())
    if (g.preimage(v)) throw PreconditionError("f and g ranges are not disjoint (shared value " + std::to_string(v) + ")");
}

std::optional<Elem> GadgetInstance::find(const std::string& label) const {
  auto it = roles.find(label);
  if (it == roles.end()) return std::nullopt;
  return it->second;
}

Elem GadgetInstance::role(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw PreconditionError("gadget has no element '" + label + "'");
}

ElemSet GadgetInstance::family_of(char prefix) const {
  ElemSet out = poset.none();
  for (const auto& [label, e] : roles) {
    if (label.size() < 2 || label[0] != prefix) continue;
    if (std::all_of(label.begin() + 1, label.end(), [](unsigned char ch) { return std::isdigit(ch); })) out.insert(e);
  }
  return out;
}

GadgetInstance gadget_from_poset(std::string family, Poset p, std::size_t horizon) {
  GadgetInstance inst{std::move(family), std::move(p), {}, horizon};
  for (Elem e = 0; e < inst.poset.size(); ++e) {
    const auto& label = inst.poset.label(e);
    if (label.empty()) throw SchemaError("gadget element without a role label");
    if (!inst.roles.emplace(label, e).second) throw SchemaError("duplicate role label '" + label + "'");
  }
  return inst;
}

std::size_t default_horizon(const FnTable& f, const FnTable* g) {
  std::size_t n = f.size();
  for (auto v : f.values()) n = std::max<std::size_t>(n, v + 1);
  if (g) {
    n = std::max(n, g->size());
    for (auto v : g->values()) n = std::max<std::size_t>(n, v + 1);
  }
  return n;
}

std::vector<Stage> classify_stages(const FnTable& f) {
  std::vector<Stage> out(f.size(), Stage::kTrueSoFar);
  // Scan right to left keeping the minimum of the suffix.
  std::uint64_t suffix_min = UINT64_MAX;
  for (std::size_t n = f.size(); n-- > 0;) {
    if (suffix_min < f(n)) out[n] = Stage::kFalse;
    suffix_min = std::min(suffix_min, f(n));
  }
  return out;
}

NatSet false_stages(const FnTable& f) {
  NatSet out;
  const auto stages = classify_stages(f);
  for (std::size_t n = 0; n < stages.size(); ++n)
    if (stages[n] == Stage::kFalse) out.insert(n);
  return out;
}

namespace {

// Collects labelled elements and strict pairs, then validates the relation
// exactly as given (closed = true), so each builder's transitivity is
// checked rather than repaired.
class GadgetBuilder {
 public:
  Elem add(const std::string& label) {
    index_.emplace(label, labels_.size());
    labels_.push_back(label);
    return labels_.size() - 1;
  }
  Elem operator[](const std::string& label) const { return index_.at(label); }
  void below(Elem a, Elem b) { pairs_.emplace_back(a, b); }

  GadgetInstance finish(std::string family, std::size_t horizon) {
    Poset p = poset_from_pairs(labels_.size(), pairs_, true, {}, labels_);
    return {std::move(family), std::move(p), std::move(index_), horizon};
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Elem> index_;
  std::vector<std::pair<Elem, Elem>> pairs_;
};

std::string lbl(char c, std::uint64_t n) { return std::string(1, c) + std::to_string(n); }

std::size_t resolve_horizon(std::size_t horizon, const FnTable& f, const FnTable* g = nullptr) {
  if (horizon == 0) return default_horizon(f, g);
  if (f.size() > horizon || (g && g->size() > horizon))
    throw PreconditionError("function table is longer than the horizon");
  return horizon;
}

std::size_t resolve_stage_horizon(std::size_t horizon, const FnTable& f) {
  if (horizon == 0) return f.size();
  if (horizon > f.size()) throw PreconditionError("stage gadgets need f defined on every index below the horizon");
  return horizon;
}

// f(k) < f(n) for some n < k <= m, k < limit.
bool known_false_by(const FnTable& f, std::size_t n, std::size_t m, std::size_t limit) {
  for (std::size_t k = n + 1; k <= m && k < limit; ++k)
    if (f(k) < f(n)) return true;
  return false;
}

const IdealCover& checked(const GadgetInstance& inst, const IdealCover& cover) {
  check_essential_ideal_cover(inst.poset, cover);
  return cover;
}

const ElemSet* part_with_all(const IdealCover& cover, const ElemSet& members) {
  for (const auto& part : cover.parts)
    if (members.subset_of(part)) return &part;
  return nullptr;
}

NatSet indices_in(const GadgetInstance& inst, char prefix, const ElemSet& s, bool want_in) {
  NatSet out;
  for (std::size_t n = 0; n < inst.horizon; ++n)
    if (auto e = inst.find(lbl(prefix, n)); e && s.contains(*e) == want_in) out.insert(n);
  return out;
}

}  // namespace

void check_essential_ideal_cover(const Poset& p, const IdealCover& cover) {
  ElemSet covered = p.none();
  for (const auto& part : cover.parts) {
    if (part.universe() != p.size()) throw PreconditionError("cover part belongs to a different poset");
    if (!is_ideal(p, part)) throw PreconditionError("cover part is not an ideal");
    covered |= part;
  }
  if (covered != p.carrier()) throw PreconditionError("cover does not cover the carrier");
  if (!is_essential(cover.parts)) throw PreconditionError("cover is not essential");
}

IdealCover essential_decomposition(const Poset& p) {
  IdealCover cover = et_decompose(p);
  cover.parts = essential_reduce(cover.parts);
  return cover;
}

GadgetInstance g_range_strong(const FnTable& f, std::size_t horizon) {
  const std::size_t n_max = resolve_horizon(horizon, f);
  GadgetBuilder b;
  for (char c : {'a', 'b', 'c'})
    for (std::size_t n = 0; n < n_max; ++n) b.add(lbl(c, n));
  for (std::size_t m = 0; m < f.size(); ++m) {
    if (f(m) >= n_max) continue;
    b.below(b[lbl('a', f(m))], b[lbl('c', m)]);
    b.below(b[lbl('b', f(m))], b[lbl('c', m)]);
  }
  return b.finish("range-strong", n_max);
}

NatSet decode_range_strong(const GadgetInstance& inst, const ElemSet& s) {
  if (!is_maximal_strong_antichain(inst.poset, s))
    throw PreconditionError("decode_range_strong: set is not a maximal strong antichain");
  NatSet out = indices_in(inst, 'a', s, false);
  out.merge(indices_in(inst, 'b', s, false));
  return out;
}

GadgetInstance g_sep(const FnTable& f, const FnTable& g, std::size_t horizon) {
  check_disjoint(f, g);
  const std::size_t n_max = resolve_horizon(horizon, f, &g);
  GadgetBuilder b;
  for (char c : {'a', 'b', 'c'})
    for (std::size_t n = 0; n < n_max; ++n) b.add(lbl(c, n));
  for (std::size_t m = 0; m < f.size(); ++m)
    if (f(m) < n_max) b.below(b[lbl('c', f(m))], b[lbl('a', m)]);
  for (std::size_t m = 0; m < g.size(); ++m)
    if (g(m) < n_max) b.below(b[lbl('b', m)], b[lbl('c', g(m))]);
  return b.finish("sep", n_max);
}

NatSet decode_sep(const GadgetInstance& inst, const ElemSet& i) {
  if (!is_initial_interval(inst.poset, i)) throw PreconditionError("decode_sep: not an initial interval");
  if (!inst.family_of('a').subset_of(i)) throw PreconditionError("decode_sep: interval misses some a_n");
  if (inst.family_of('b').intersects(i)) throw PreconditionError("decode_sep: interval contains some b_n");
  return indices_in(inst, 'c', i, true);
}

GadgetInstance g_two_chain(const FnTable& f, std::size_t horizon) {
  const std::size_t n_max = resolve_horizon(horizon, f);
  GadgetBuilder b;
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('a', n));
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('b', n));
  const Elem top = b.add("c");
  for (std::size_t n = 0; n < n_max; ++n) b.below(b[lbl('a', n)], top);
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t m = n + 1; m < n_max; ++m) b.below(b[lbl('b', n)], b[lbl('b', m)]);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(i) >= n_max) continue;
    for (std::size_t m = i + 1; m < n_max; ++m) b.below(b[lbl('a', f(i))], b[lbl('b', m)]);
  }
  auto inst = b.finish("two-chain", n_max);
  if (max_strong_antichain(inst.poset).size > 2)
    throw InvariantViolation("g_two_chain: strong antichain with more than two elements");
  return inst;
}

NatSet decode_two_chain(const GadgetInstance& inst, const IdealCover& cover) {
  const ElemSet bs = inst.family_of('b');
  if (bs.empty()) return {};
  const ElemSet* part = part_with_all(checked(inst, cover), bs);
  if (!part) throw PreconditionError("decode_two_chain: no part contains every b_m");
  return indices_in(inst, 'a', *part, true);
}

GadgetInstance g_truefalse(const FnTable& f, bool copies, std::size_t horizon) {
  const std::size_t n_max = resolve_stage_horizon(horizon, f);
  GadgetBuilder b;
  for (std::size_t n = 0; n < n_max; ++n) {
    if (copies)
      for (std::size_t i = 0; i <= n; ++i) b.add(lbl('a', n) + "_" + std::to_string(i));
    else
      b.add(lbl('a', n));
  }
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('b', n));
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t m = n + 1; m < n_max; ++m) b.below(b[lbl('b', n)], b[lbl('b', m)]);
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t m = n + 1; m < n_max; ++m) {
      if (!known_false_by(f, n, m, n_max)) continue;
      if (copies)
        for (std::size_t i = 0; i <= n; ++i) b.below(b[lbl('a', n) + "_" + std::to_string(i)], b[lbl('b', m)]);
      else
        b.below(b[lbl('a', n)], b[lbl('b', m)]);
    }
  return b.finish(copies ? "truefalse-copies" : "truefalse", n_max);
}

ElemSet truefalse_strong_antichain(const GadgetInstance& inst, const FnTable& f) {
  ElemSet out = inst.poset.none();
  if (inst.horizon == 0) return out;
  const FnTable prefix(std::vector<std::uint64_t>(f.values().begin(), f.values().begin() + inst.horizon));
  const auto stages = classify_stages(prefix);
  if (inst.find("a0_0")) {
    std::size_t last = inst.horizon;
    for (std::size_t n = 0; n < inst.horizon; ++n)
      if (stages[n] == Stage::kTrueSoFar) last = n;
    for (std::size_t i = 0; i <= last; ++i) out.insert(inst.role(lbl('a', last) + "_" + std::to_string(i)));
  } else {
    for (std::size_t n = 0; n < inst.horizon; ++n)
      if (stages[n] == Stage::kTrueSoFar) out.insert(inst.role(lbl('a', n)));
    out.insert(inst.role(lbl('b', inst.horizon - 1)));
  }
  if (!is_strong_antichain(inst.poset, out)) throw InvariantViolation("truefalse_strong_antichain: not strong");
  return out;
}

GadgetInstance g_omega_omegastar(const FnTable& f, std::size_t horizon) {
  const std::size_t n_max = resolve_stage_horizon(horizon, f);
  GadgetBuilder b;
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('a', n));
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('b', n));
  for (std::size_t n = 0; n < n_max; ++n)
    for (std::size_t m = n + 1; m < n_max; ++m) {
      b.below(b[lbl('b', n)], b[lbl('b', m)]);
      if (known_false_by(f, n, m, n_max)) {
        b.below(b[lbl('a', n)], b[lbl('a', m)]);
        b.below(b[lbl('a', n)], b[lbl('b', m)]);
      } else {
        b.below(b[lbl('a', m)], b[lbl('a', n)]);
      }
    }
  return b.finish("omega-omegastar", n_max);
}

NatSet decode_wpo(const GadgetInstance& inst, const IdealCover& cover) {
  const ElemSet bs = inst.family_of('b');
  if (bs.empty()) return {};
  const ElemSet* part = part_with_all(checked(inst, cover), bs);
  if (!part) throw PreconditionError("decode_wpo: no part contains every b_m");
  return indices_in(inst, 'a', *part, true);
}

GadgetInstance g_antichain_ext(const FnTable& f, std::size_t horizon) {
  const std::size_t n_max = resolve_horizon(horizon, f);
  GadgetBuilder b;
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('a', n));
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('b', n));
  for (std::size_t m = 0; m < f.size(); ++m)
    if (f(m) < n_max) b.below(b[lbl('b', m)], b[lbl('a', f(m))]);
  return b.finish("antichain-ext", n_max);
}

NatSet decode_ext(const GadgetInstance& inst, const ElemSet& e) {
  if (!is_maximal_antichain(inst.poset, e)) throw PreconditionError("decode_ext: not a maximal antichain");
  if (!inst.family_of('b').subset_of(e)) throw PreconditionError("decode_ext: antichain misses some b_m");
  return indices_in(inst, 'a', e, false);
}

GadgetInstance g_wkl(const FnTable& f, const FnTable& g, std::size_t horizon) {
  check_disjoint(f, g);
  const std::size_t n_max = resolve_horizon(horizon, f, &g);
  GadgetBuilder b;
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('a', n));
  for (std::size_t n = 0; n < n_max; ++n) b.add(lbl('b', n));
  for (std::size_t n = 0; n < g.size() && n < n_max; ++n)
    if (g(n) < n_max) b.below(b[lbl('a', n)], b[lbl('b', g(n))]);
  for (std::size_t n = 0; n < g.size() && n < n_max; ++n)
    for (std::size_t i = 0; i < f.size() && i < n && i < g(n); ++i)
      if (f(i) < n_max) b.below(b[lbl('b', f(i))], b[lbl('a', n)]);
  for (std::size_t m = 0; m < n_max; ++m)
    for (std::size_t i = 0; i < f.size() && i < m; ++i) {
      if (f(i) == m) break;  // m entered the range at i: later i fail the "for all j < i" clause
      if (f(i) < n_max && f(i) != m) b.below(b[lbl('b', f(i))], b[lbl('b', m)]);
    }
  return b.finish("wkl", n_max);
}

WklDecoding decode_wkl(const GadgetInstance& inst, const ElemSet& i) {
  const Poset& p = inst.poset;
  if (!is_initial_interval(p, i)) throw PreconditionError("decode_wkl: not an initial interval");
  const ElemSet as = inst.family_of('a');
  ElemSet strictly_above = p.none();
  as.for_each([&](Elem a) { strictly_above |= cones(p, a).strict_up; });
  if (i.intersects(strictly_above)) throw PreconditionError("decode_wkl: interval holds an element above some a_n");
  std::size_t n0 = inst.horizon;
  while (n0 > 0 && i.contains(inst.role(lbl('a', n0 - 1)))) --n0;
  if (inst.horizon > 0 && n0 == inst.horizon) throw PreconditionError("decode_wkl: interval holds no tail of the a_n");
  return {indices_in(inst, 'b', i, true), n0};
}

}  // namespace posets
