#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posets/ideals.hpp"
#include "posets/poset.hpp"

namespace posets {

using NatSet = std::set<std::uint64_t>;

/// Finite prefix f(0..len-1) of a one-to-one function on the naturals.
class FnTable {
 public:
  FnTable() = default;
  /// Throws PreconditionError if the values repeat.
  explicit FnTable(std::vector<std::uint64_t> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::uint64_t operator()(std::size_t i) const { return values_[i]; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  /// Values taken at arguments below `len`.
  NatSet range(std::size_t len = SIZE_MAX) const;
  /// Argument i with f(i) = v, if any.
  std::optional<std::size_t> preimage(std::uint64_t v) const;

 private:
  std::vector<std::uint64_t> values_;
};

/// Throws PreconditionError unless f and g have disjoint ranges.
void check_disjoint(const FnTable& f, const FnTable& g);

/// Finite slice of a reversal construction. Every element carries a role
/// label ("a3", "b0", "c", "a4_2" for the copy a_4^2) and `roles` maps each
/// label back to its element.
struct GadgetInstance {
  std::string family;
  Poset poset;
  std::map<std::string, Elem> roles;
  std::size_t horizon = 0;

  std::optional<Elem> find(const std::string& label) const;
  Elem role(const std::string& label) const;
  /// Elements whose label is `prefix` followed by digits only.
  ElemSet family_of(char prefix) const;
};

/// Rebuilds the role map from a poset whose labels follow the gadget naming
/// scheme (e.g. a poset read back from a JSON document).
GadgetInstance gadget_from_poset(std::string family, Poset p, std::size_t horizon);

/// Horizon used when none is given: large enough that every argument and
/// every value of f (and g) names an element.
std::size_t default_horizon(const FnTable& f, const FnTable* g = nullptr);

enum class Stage { kFalse, kTrueSoFar };

/// n is false once some later k in the table has f(k) < f(n). A false label
/// never changes when the table grows; a true-so-far label may still flip.
std::vector<Stage> classify_stages(const FnTable& f);
NatSet false_stages(const FnTable& f);

// Range encoding through maximal strong antichains. Elements a_n, b_n, c_n
// for n < N; a_n, b_n <= c_m iff f(m) = n.
GadgetInstance g_range_strong(const FnTable& f, std::size_t horizon = 0);
/// {n : a_n not in S or b_n not in S} for a maximal strong antichain S.
NatSet decode_range_strong(const GadgetInstance& inst, const ElemSet& s);

// Separating two disjoint ranges. c_n <= a_m iff f(m) = n and b_m <= c_n iff
// g(m) = n.
GadgetInstance g_sep(const FnTable& f, const FnTable& g, std::size_t horizon = 0);
/// {n : c_n in I} for an initial interval containing every a_n and no b_n.
NatSet decode_sep(const GadgetInstance& inst, const ElemSet& i);

// Two chains and a top. a_n <= c for all n; b_n <= b_m for n <= m; a_n <= b_m
// iff f(i) = n for some i < m. Within horizon N the b-chain ends at b_{N-1},
// so only values f(i) with i < N - 1 are visible.
GadgetInstance g_two_chain(const FnTable& f, std::size_t horizon = 0);
/// Reads the part of an essential ideal cover that holds every b_m and
/// returns {n : a_n in that part}.
NatSet decode_two_chain(const GadgetInstance& inst, const IdealCover& cover);

// True/false stages. b_n <= b_m for n < m; a_n <= b_m iff f(k) < f(n) for
// some n < k <= m. With `copies` each a_n becomes a_n^0..a_n^n.
// Stage gadgets use the first N arguments of f, so N <= |f|.
GadgetInstance g_truefalse(const FnTable& f, bool copies, std::size_t horizon = 0);
/// {a_n^i : i <= n} for the largest true-so-far n (the copies variant), or
/// the true-so-far a_n's together with b_{N-1} (the plain variant). Either
/// way a strong antichain.
ElemSet truefalse_strong_antichain(const GadgetInstance& inst, const FnTable& f);

// omega + omega* on the a's next to an omega-chain of b's. For n < m:
// a_n <= a_m and a_n <= b_m when f(k) < f(n) for some n < k <= m; otherwise
// a_m <= a_n. b_i <= b_j iff i <= j.
GadgetInstance g_omega_omegastar(const FnTable& f, std::size_t horizon = 0);
/// {n : a_n in the part holding every b_m} = false stages within horizon.
NatSet decode_wpo(const GadgetInstance& inst, const IdealCover& cover);

// Extending an antichain. b_m <= a_n iff f(m) = n.
GadgetInstance g_antichain_ext(const FnTable& f, std::size_t horizon = 0);
/// {n : a_n not in E} for a maximal antichain E containing every b_m.
NatSet decode_ext(const GadgetInstance& inst, const ElemSet& e);

// The antichain {a_n} with b's wired in by the enumeration of f and g:
//   a_n <= b_m iff m = g(n);
//   b_k <= a_n iff f(i) = k for some i < n with i < g(n);
//   b_k <= b_m iff f(i) = k for some i < m with f(j) != m for all j < i.
// Arguments n >= |g| have no g(n) and get no edges of the first two kinds.
GadgetInstance g_wkl(const FnTable& f, const FnTable& g, std::size_t horizon = 0);

struct WklDecoding {
  NatSet set;       ///< {k : b_k in I}
  std::size_t n0;   ///< least n0 with a_n in I for every n0 <= n < N
};
/// Requires I initial, nothing in I strictly above any a_n, and a tail
/// a_{n0}..a_{N-1} inside I. The decoded set avoids range(g) and holds every
/// f(i) for which some n >= n0 has i < n and i < g(n).
WklDecoding decode_wkl(const GadgetInstance& inst, const ElemSet& i);

/// Throws PreconditionError unless `cover` is an essential cover of the
/// whole carrier by ideals.
void check_essential_ideal_cover(const Poset& p, const IdealCover& cover);

/// Library pipeline used by the two cover decoders: et_decompose followed by
/// essential_reduce.
IdealCover essential_decomposition(const Poset& p);

}  // namespace posets
