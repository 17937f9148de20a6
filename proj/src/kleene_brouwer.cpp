#include "posets/kleene_brouwer.hpp"

#include <algorithm>

#include "posets/errors.hpp"

namespace posets {

std::strong_ordering kb_compare(const NatSeq& sigma, const NatSeq& tau) {
  const std::size_t common = std::min(sigma.size(), tau.size());
  for (std::size_t i = 0; i < common; ++i)
    if (sigma[i] != tau[i]) return sigma[i] <=> tau[i];
  // One extends the other; the longer one is smaller.
  return tau.size() <=> sigma.size();
}

bool is_prefix(const NatSeq& prefix, const NatSeq& seq) {
  return prefix.size() <= seq.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

FiniteTree::FiniteTree(std::set<NatSeq> nodes) : nodes_(std::move(nodes)) {
  for (const auto& s : nodes_)
    if (!s.empty() && !nodes_.count(NatSeq(s.begin(), s.end() - 1)))
      throw PreconditionError("tree is not closed under initial segments");
}

namespace {

NatSeq prefix(const NatSeq& s, std::size_t n) { return NatSeq(s.begin(), s.begin() + static_cast<long>(n)); }

void kb_sort(std::vector<NatSeq>& v) { std::sort(v.begin(), v.end(), KbLess{}); }

}  // namespace

std::vector<NatSeq> kb_closed_form_y(const FiniteTree& t, const NatSeq& path, std::size_t n) {
  const NatSeq head = prefix(path, n);
  std::vector<NatSeq> out{head};
  for (const auto& s : t.nodes())
    if (s.size() > n && is_prefix(head, s) && path[n] < s[n]) out.push_back(s);
  kb_sort(out);
  return out;
}

KbDecomposition kb_decompose(const FiniteTree& t, const NatSeq& path) {
  const std::size_t depth = path.size();
  for (std::size_t n = 0; n <= depth; ++n)
    if (!t.contains(prefix(path, n))) throw PreconditionError("kb_decompose: path leaves the tree");

  KbDecomposition d;
  d.y.resize(depth);
  std::vector<NatSeq> heads;
  for (std::size_t n = 0; n <= depth; ++n) heads.push_back(prefix(path, n));

  for (const auto& s : t.nodes()) {
    if (is_prefix(heads[depth], s)) {
      d.remainder.push_back(s);
      continue;
    }
    bool below_all = std::all_of(heads.begin(), heads.end(), [&](const NatSeq& h) { return kb_compare(s, h) < 0; });
    std::size_t placed = 0;
    if (below_all) {
      d.x.push_back(s);
      ++placed;
    }
    for (std::size_t n = 0; n < depth; ++n)
      if (kb_compare(heads[n + 1], s) < 0 && kb_compare(s, heads[n]) <= 0) {
        d.y[n].push_back(s);
        ++placed;
      }
    if (placed != 1) throw InvariantViolation("kb_decompose: node not placed in exactly one piece");
  }
  kb_sort(d.x);
  kb_sort(d.remainder);
  for (std::size_t n = 0; n < depth; ++n) {
    kb_sort(d.y[n]);
    if (d.y[n] != kb_closed_form_y(t, path, n))
      throw InvariantViolation("kb_decompose: closed form of a Y piece disagrees with its definition");
  }
  return d;
}

}  // namespace posets
