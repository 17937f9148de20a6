#include "posets/poset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace posets {

std::ostream& operator<<(std::ostream& os, const ElemSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  return os << '}';
}

class PosetBuilder {
 public:
  static Poset build(const Relation& rel, std::vector<Id> ids, std::vector<std::string> labels) {
    const std::size_t n = rel.size();
    Poset p;
    p.ids_ = std::move(ids);
    p.labels_ = std::move(labels);
    p.up_.assign(n, ElemSet(n));
    p.down_.assign(n, ElemSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) {
          p.up_[i].insert(j);
          p.down_[j].insert(i);
        }
    return p;
  }
};

namespace {

void normalize_dressing(std::size_t n, std::vector<Id>& ids, std::vector<std::string>& labels) {
  if (ids.empty() && n > 0) {
    ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  }
  if (ids.size() != n) throw PreconditionError("id list length does not match relation size");
  for (std::size_t i = 1; i < n; ++i)
    if (ids[i] <= ids[i - 1]) throw PreconditionError("element ids must be strictly increasing");
  if (labels.empty()) labels.assign(n, "");
  if (labels.size() != n) throw PreconditionError("label list length does not match relation size");
}

}  // namespace

std::string Poset::name(Elem e) const {
  return labels_[e].empty() ? std::to_string(ids_[e]) : labels_[e];
}

std::optional<Elem> Poset::index_of(Id id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Elem>(it - ids_.begin());
}

Elem Poset::at(Id id) const {
  if (auto e = index_of(id)) return *e;
  throw PreconditionError("id " + std::to_string(id) + " is not in the carrier");
}

Elem Poset::by_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PreconditionError("no element labelled '" + label + "'");
  return static_cast<Elem>(it - labels_.begin());
}

Relation Poset::relation() const {
  Relation r(size(), std::vector<bool>(size(), false));
  for (Elem i = 0; i < size(); ++i) up_[i].for_each([&](Elem j) { r[i][j] = true; });
  return r;
}

std::string Violation::message() const {
  std::ostringstream os;
  switch (axiom) {
    case Axiom::kReflexivity:
      os << "reflexivity violated at " << witness[0];
      break;
    case Axiom::kAntisymmetry:
      os << "antisymmetry violated by (" << witness[0] << ',' << witness[1] << ')';
      break;
    case Axiom::kTransitivity:
      os << "transitivity violated by (" << witness[0] << ',' << witness[1] << ',' << witness[2] << ')';
      break;
  }
  return os.str();
}

Validation validate(const Relation& rel, std::vector<Id> ids, std::vector<std::string> labels) {
  const std::size_t n = rel.size();
  for (const auto& row : rel)
    if (row.size() != n) throw PreconditionError("relation is not square");
  normalize_dressing(n, ids, labels);

  for (std::size_t i = 0; i < n; ++i)
    if (!rel[i][i]) return Validation(Violation{Axiom::kReflexivity, {i}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i]) return Validation(Violation{Axiom::kAntisymmetry, {i, j}});

  // Bit rows make the transitivity scan O(n^2 * n/64); the least witness is
  // recovered only once a failing (i, j) pair is found.
  std::vector<ElemSet> up(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) up[i].insert(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      ElemSet missing = up[j] - up[i];
      if (!missing.empty()) return Validation(Violation{Axiom::kTransitivity, {i, j, missing.first()}});
    }
  return Validation(PosetBuilder::build(rel, std::move(ids), std::move(labels)));
}

Poset make_poset(const Relation& rel, std::vector<Id> ids, std::vector<std::string> labels) {
  auto v = validate(rel, std::move(ids), std::move(labels));
  if (!v) throw ValidationError(v.violation().message());
  return std::move(v).poset();
}

Relation transitive_closure(Relation rel) {
  const std::size_t n = rel.size();
  std::vector<ElemSet> up(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    up[i].insert(i);
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) up[i].insert(j);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = up[i].contains(j);
  return rel;
}

Poset poset_from_pairs(std::size_t n, std::span<const std::pair<Elem, Elem>> pairs, bool closed,
                       std::vector<Id> ids, std::vector<std::string> labels) {
  Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw PreconditionError("pair refers to an element outside the carrier");
    rel[a][b] = true;
  }
  if (!closed) rel = transitive_closure(std::move(rel));
  return make_poset(rel, std::move(ids), std::move(labels));
}

Poset chain(std::size_t n) {
  Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rel[i][j] = true;
  return make_poset(rel);
}

Poset antichain(std::size_t n) {
  Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  return make_poset(rel);
}

namespace {

void check_elem(const Poset& p, Elem x) {
  if (x >= p.size()) throw PreconditionError("element " + std::to_string(x) + " is not in the carrier");
}

void check_subset(const Poset& p, const ElemSet& s) {
  if (s.universe() != p.size()) throw PreconditionError("set does not belong to this poset");
}

}  // namespace

Cones cones(const Poset& p, Elem x) {
  check_elem(p, x);
  Cones c;
  c.up = p.up(x);
  c.down = p.down(x);
  c.strict_up = c.up;
  c.strict_up.erase(x);
  c.strict_down = c.down;
  c.strict_down.erase(x);
  c.inc = p.carrier() - (c.up | c.down);
  return c;
}

ElemSet down_closure(const Poset& p, const ElemSet& x) {
  check_subset(p, x);
  ElemSet out = p.none();
  x.for_each([&](Elem e) { out |= p.down(e); });
  return out;
}

ElemSet up_closure(const Poset& p, const ElemSet& x) {
  check_subset(p, x);
  ElemSet out = p.none();
  x.for_each([&](Elem e) { out |= p.up(e); });
  return out;
}

bool compatible(const Poset& p, Elem x, Elem y, const ElemSet& within) {
  check_subset(p, within);
  if (!within.contains(x) || !within.contains(y))
    throw PreconditionError("compatible: both elements must belong to the reference set");
  return (p.up(x) & p.up(y)).intersects(within);
}

bool is_initial_interval(const Poset& p, const ElemSet& i) {
  check_subset(p, i);
  bool ok = true;
  i.for_each([&](Elem y) { ok = ok && p.down(y).subset_of(i); });
  return ok;
}

Poset restrict(const Poset& p, const ElemSet& x) {
  check_subset(p, x);
  const auto members = x.members();
  const std::size_t k = members.size();
  Relation rel(k, std::vector<bool>(k, false));
  std::vector<Id> ids(k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    ids[a] = p.id(members[a]);
    labels[a] = p.label(members[a]);
    for (std::size_t b = 0; b < k; ++b) rel[a][b] = p.leq(members[a], members[b]);
  }
  return make_poset(rel, std::move(ids), std::move(labels));
}

ElemSet lift(const Poset& p, const ElemSet& x, const ElemSet& sub) {
  check_subset(p, x);
  const auto members = x.members();
  if (sub.universe() != members.size()) throw PreconditionError("lift: subset universe mismatch");
  ElemSet out = p.none();
  sub.for_each([&](Elem e) { out.insert(members[e]); });
  return out;
}

Poset lex_sum(const Poset& p, std::span<const Poset> parts) {
  if (parts.size() != p.size())
    throw PreconditionError("lex_sum: missing part for element " + std::to_string(parts.size()));
  std::vector<Elem> offset(p.size() + 1, 0);
  for (Elem x = 0; x < p.size(); ++x) offset[x + 1] = offset[x] + parts[x].size();
  const std::size_t n = offset.back();
  Relation rel(n, std::vector<bool>(n, false));
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < parts[x].size(); ++y) {
      const Elem a = offset[x] + y;
      labels[a] = "(" + p.name(x) + "," + parts[x].name(y) + ")";
      for (Elem x2 = 0; x2 < p.size(); ++x2)
        for (Elem y2 = 0; y2 < parts[x2].size(); ++y2)
          rel[a][offset[x2] + y2] = p.less(x, x2) || (x == x2 && parts[x].leq(y, y2));
    }
  return make_poset(rel, {}, std::move(labels));
}

bool is_chain(const Poset& p, const ElemSet& q) {
  check_subset(p, q);
  bool ok = true;
  q.for_each([&](Elem a) {
    ElemSet incomparable = q - (p.up(a) | p.down(a));
    ok = ok && incomparable.empty();
  });
  return ok;
}

std::size_t density_defect(const Poset& p, const ElemSet& q) {
  if (!is_chain(p, q)) throw PreconditionError("density_defect: set is not a chain");
  std::size_t defect = 0;
  q.for_each([&](Elem x) {
    q.for_each([&](Elem y) {
      if (!p.less(x, y)) return;
      ElemSet between = q & p.up(x) & p.down(y);
      if (between.count() == 2) ++defect;
    });
  });
  return defect;
}

std::vector<Elem> maximal_elements(const Poset& p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < p.size(); ++x)
    if (p.up(x).count() == 1) out.push_back(x);
  return out;
}

std::vector<Elem> minimal_elements(const Poset& p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < p.size(); ++x)
    if (p.down(x).count() == 1) out.push_back(x);
  return out;
}

std::vector<std::pair<Elem, Elem>> covers(const Poset& p) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](Elem b) {
      if (a == b) return;
      if ((p.up(a) & p.down(b)).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

}  // namespace posets
