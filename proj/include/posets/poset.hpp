#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "posets/elem_set.hpp"
#include "posets/errors.hpp"

namespace posets {

/// External element identifier (a natural number). Ids of a poset are
/// strictly increasing in internal index, so the two orders agree.
using Id = std::uint64_t;

/// Square boolean matrix; rel[i][j] means element i is below element j.
using Relation = std::vector<std::vector<bool>>;

/// Finite partial order over dense indices 0..n-1.
///
/// Each element carries an external id and an optional role label. The
/// relation is stored twice, as up-sets and down-sets, so cone queries are
/// a single bitset lookup. Instances are immutable once built; the only way
/// to obtain one is through validate() or the factory helpers, all of which
/// check the axioms.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  Id id(Elem e) const { return ids_[e]; }
  const std::vector<Id>& ids() const { return ids_; }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label when present, otherwise the decimal id.
  std::string name(Elem e) const;

  std::optional<Elem> index_of(Id id) const;
  /// index_of that throws PreconditionError for ids outside the carrier.
  Elem at(Id id) const;
  /// Index of the element labelled `label`; throws when absent.
  Elem by_label(const std::string& label) const;

  bool leq(Elem a, Elem b) const { return up_[a].contains(b); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  const ElemSet& up(Elem e) const { return up_[e]; }
  const ElemSet& down(Elem e) const { return down_[e]; }

  ElemSet carrier() const { return ElemSet::full(size()); }
  ElemSet none() const { return ElemSet(size()); }
  ElemSet set_of(std::initializer_list<Elem> members) const { return ElemSet(size(), members); }

  Relation relation() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.ids_ == b.ids_ && a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  friend class PosetBuilder;
  std::vector<Id> ids_;
  std::vector<std::string> labels_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
};

enum class Axiom { kReflexivity, kAntisymmetry, kTransitivity };

/// First violated axiom with its least-index witness: (i) for reflexivity,
/// (i, j) for antisymmetry, (i, j, k) for transitivity.
struct Violation {
  Axiom axiom;
  std::vector<Elem> witness;

  std::string message() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class Validation {
 public:
  explicit Validation(Poset p) : result_(std::move(p)) {}
  explicit Validation(Violation v) : result_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<Poset>(result_); }
  explicit operator bool() const { return ok(); }
  const Poset& poset() const& { return std::get<Poset>(result_); }
  Poset poset() && { return std::get<Poset>(std::move(result_)); }
  const Violation& violation() const { return std::get<Violation>(result_); }

 private:
  std::variant<Poset, Violation> result_;
};

/// Checks reflexivity, antisymmetry and transitivity, in that order.
/// Ids default to 0..n-1 and must be strictly increasing; labels default to "".
Validation validate(const Relation& rel, std::vector<Id> ids = {}, std::vector<std::string> labels = {});

/// validate() that throws ValidationError on failure.
Poset make_poset(const Relation& rel, std::vector<Id> ids = {}, std::vector<std::string> labels = {});

/// Builds from explicit strict pairs (a below b), given as element indices.
/// When `closed` is false the pairs are generating (e.g. Hasse covers) and
/// the reflexive-transitive closure is taken first; when true they must
/// already form the full order. Reflexive pairs are implicit either way.
Poset poset_from_pairs(std::size_t n, std::span<const std::pair<Elem, Elem>> pairs, bool closed,
                       std::vector<Id> ids = {}, std::vector<std::string> labels = {});

/// Reflexive-transitive closure (Warshall on bit rows).
Relation transitive_closure(Relation rel);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

struct Cones {
  ElemSet up, strict_up, down, strict_down, inc;
};

Cones cones(const Poset& p, Elem x);

ElemSet down_closure(const Poset& p, const ElemSet& x);
ElemSet up_closure(const Poset& p, const ElemSet& x);

/// True iff some z in `within` lies above both x and y. Compatibility is
/// always relative to a subset: two elements compatible in P can fail to be
/// compatible inside a smaller set containing them.
bool compatible(const Poset& p, Elem x, Elem y, const ElemSet& within);

bool is_initial_interval(const Poset& p, const ElemSet& i);

/// Induced suborder on `x`, keeping ids and labels.
Poset restrict(const Poset& p, const ElemSet& x);

/// Maps a subset of restrict(p, x) back to the index space of p.
ElemSet lift(const Poset& p, const ElemSet& x, const ElemSet& sub);

/// Lexicographic sum of parts[i] along p: (x, y) <= (x', y') iff x < x' in p,
/// or x = x' and y <= y' in parts[x]. Elements are numbered block by block.
Poset lex_sum(const Poset& p, std::span<const Poset> parts);

/// Number of adjacent pairs x < y in the chain q (no z in q strictly
/// between). Throws PreconditionError if q is not a chain.
std::size_t density_defect(const Poset& p, const ElemSet& q);

bool is_chain(const Poset& p, const ElemSet& q);

std::vector<Elem> maximal_elements(const Poset& p);
std::vector<Elem> minimal_elements(const Poset& p);

/// Hasse diagram edges (a covered by b), sorted by (a, b).
std::vector<std::pair<Elem, Elem>> covers(const Poset& p);

}  // namespace posets
