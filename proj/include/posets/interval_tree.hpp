#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// Finite binary sequence approximating the characteristic function of an
/// initial interval. Positions are external ids; positions that are not in
/// the carrier must carry 0 for the sequence to lie in T(P).
struct ApproxSeq {
  std::vector<std::uint8_t> bits;

  std::size_t length() const { return bits.size(); }
  bool at(std::size_t pos) const { return bits[pos] != 0; }
  /// True iff `other` extends this sequence (equality included).
  bool prefix_of(const ApproxSeq& other) const;
  friend bool operator==(const ApproxSeq&, const ApproxSeq&) = default;
  friend auto operator<=>(const ApproxSeq&, const ApproxSeq&) = default;
};

/// Neither sequence extends the other.
bool incompatible(const ApproxSeq& a, const ApproxSeq& b);

/// Membership in T(P): for all x, y below the length, sigma(x) = 1 implies
/// x is in P, and sigma(y) = 1 with x <= y implies sigma(x) = 1.
bool tp_member(const Poset& p, const ApproxSeq& sigma);

/// Characteristic sequence of `i` over ids 0..length-1.
ApproxSeq characteristic(const Poset& p, const ElemSet& i, std::size_t length);

/// Members of the carrier whose id is a position set to 1.
ElemSet ones(const Poset& p, const ApproxSeq& sigma);

/// Default cap on enumerate_intervals output.
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

/// Streams every initial interval of p in the order of a depth-first walk of
/// T(P) truncated at max id + 1, 0-branch before 1-branch. Returning false
/// from the visitor stops the walk. Throws CapExceeded once more than `cap`
/// intervals have been produced.
void for_each_interval(const Poset& p, const std::function<bool(const ElemSet&)>& visit,
                       std::size_t cap = kDefaultEnumerationCap);
std::vector<ElemSet> enumerate_intervals(const Poset& p, std::size_t cap = kDefaultEnumerationCap);

/// Number of initial intervals, by a dynamic program along a linear
/// extension. The state is the set of already-decided elements left out of
/// the interval that still have an undecided element above them. Throws
/// CapExceeded if the count does not fit in 64 bits.
std::uint64_t count_intervals(const Poset& p);

/// x can still go either way: for every decided position y, tau(y) = 1
/// forbids x <= y and tau(y) = 0 forbids y <= x. Requires tau in T(P).
bool free_for(const Poset& p, const ApproxSeq& tau, Elem x);

struct SplitBranch {
  ApproxSeq tau;
  Elem lo;  ///< first member of the fresh free pair
  Elem hi;  ///< second member of the fresh free pair
};

struct Split {
  SplitBranch zero;
  SplitBranch one;
};

/// Splits tau into two incompatible extensions in T(P), both of length
/// id(b) + 1, disagreeing at b.
///
/// Requires a < b < c in the chain q, all free for tau. For the 0-branch a
/// fresh pair a < a' < b' < b is chosen in q with ids above id(b) and no
/// element of id <= id(b) strictly between a' and b'; the 1-branch does the
/// same inside (b, c). Free positions are then set to 1 below a', 0 above
/// b', and 0 otherwise, while positions already forced by tau keep their
/// forced value. The fresh pair is least by (id(a'), id(b')). Throws
/// PreconditionError when q is too sparse to supply a pair.
Split split(const Poset& p, const ApproxSeq& tau, Elem a, Elem b, Elem c, const ElemSet& q);

/// P_{F,G,H}: intersection of strict_down(x) for x in f, strict_up(x) for x in
/// g and inc(x) for x in h. Empty index sets contribute the whole carrier.
ElemSet cone_restrict(const Poset& p, const ElemSet& f, const ElemSet& g, const ElemSet& h);

struct FactorizationReport {
  bool excluded_holds;  ///< {I : x not in I} = {I' u Down J}
  bool included_holds;  ///< {I : x in I} = {Down({x} u I' u J)}
  bool ok() const { return excluded_holds && included_holds; }
};

/// Checks both product descriptions of Int(P) split by membership of x, as
/// exact equalities of sets of sets. I' ranges over Int(strict_down x) for the
/// first identity and Int(strict_up x) for the second; J over Int(inc x).
FactorizationReport factorization_report(const Poset& p, Elem x);
bool factorization_check(const Poset& p, Elem x);

}  // namespace posets
