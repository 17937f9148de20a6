#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

namespace posets {

using NatSeq = std::vector<std::uint64_t>;

/// Kleene-Brouwer order: sigma < tau iff sigma properly extends tau, or
/// sigma(i) < tau(i) at the first index where they differ.
std::strong_ordering kb_compare(const NatSeq& sigma, const NatSeq& tau);

struct KbLess {
  bool operator()(const NatSeq& a, const NatSeq& b) const { return kb_compare(a, b) < 0; }
};

/// True iff `prefix` is an initial segment of `seq` (equality included).
bool is_prefix(const NatSeq& prefix, const NatSeq& seq);

/// Finite tree of natural-number sequences, closed under initial segments.
class FiniteTree {
 public:
  FiniteTree() = default;
  /// Throws PreconditionError unless the nodes are closed under prefixes.
  /// An empty node list gives the empty tree.
  explicit FiniteTree(std::set<NatSeq> nodes);

  bool contains(const NatSeq& s) const { return nodes_.count(s) != 0; }
  const std::set<NatSeq>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::set<NatSeq> nodes_;
};

/// Slice of the decomposition X + sum over omega* of Y_n along a designated
/// path of length `depth`. All node lists are sorted by the KB order.
struct KbDecomposition {
  std::vector<NatSeq> x;               ///< below path|n for every n <= depth, not extending path|depth
  std::vector<std::vector<NatSeq>> y;  ///< y[n] = (path|n+1, path|n] in KB order, n < depth
  std::vector<NatSeq> remainder;       ///< path|depth and its extensions: the unsliced tail
};

/// Decomposes the tree along `path`. Each y[n] is computed from the
/// definition and again from the closed form
///   {s : path|n is a proper prefix of s and path(n) < s(n)} u {path|n};
/// the two must agree and the pieces must partition the tree, otherwise
/// InvariantViolation is thrown.
KbDecomposition kb_decompose(const FiniteTree& t, const NatSeq& path);

/// Closed form of y[n] alone.
std::vector<NatSeq> kb_closed_form_y(const FiniteTree& t, const NatSeq& path, std::size_t n);

}  // namespace posets
