#include "posets/census.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "posets/antichains.hpp"
#include "posets/errors.hpp"
#include "posets/ideals.hpp"
#include "posets/interval_tree.hpp"
#include "posets/separation.hpp"

namespace posets {

namespace {

std::vector<std::pair<Elem, Elem>> strict_pairs(const Poset& p) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](Elem b) {
      if (a != b) out.emplace_back(a, b);
    });
  return out;
}

unsigned worker_count(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kCensusMaxSize) throw PreconditionError("canonical_code supports at most 8 elements");
  const auto pairs = strict_pairs(p);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const auto& [a, b] : pairs) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset poset_from_code(std::size_t n, std::uint64_t code) {
  if (n > kCensusMaxSize) throw PreconditionError("poset_from_code supports at most 8 elements");
  Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = i == j || ((code >> (i * n + j)) & 1);
  return make_poset(rel);
}

std::vector<Poset> posets_up_to_iso(std::size_t n, unsigned threads) {
  if (n > kCensusMaxSize) throw PreconditionError("census supports at most 8 elements");
  if (n == 0) return {Poset{}};
  std::vector<Poset> layer = {antichain(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    // Every poset on m elements is a poset on m-1 elements plus one new
    // maximal element sitting above some initial interval.
    auto extend = [m](const Poset& parent) {
      std::set<std::uint64_t> codes;
      for (const ElemSet& below : enumerate_intervals(parent)) {
        Relation rel = parent.relation();
        for (auto& row : rel) row.push_back(false);
        rel.emplace_back(m, false);
        rel[m - 1][m - 1] = true;
        below.for_each([&](Elem e) { rel[e][m - 1] = true; });
        codes.insert(canonical_code(make_poset(rel)));
      }
      return codes;
    };
    const unsigned workers = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(layer.size()));
    std::vector<std::future<std::set<std::uint64_t>>> jobs;
    for (unsigned w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        std::set<std::uint64_t> mine;
        for (std::size_t i = w; i < layer.size(); i += workers) mine.merge(extend(layer[i]));
        return mine;
      }));
    std::set<std::uint64_t> all;
    for (auto& job : jobs) all.merge(job.get());
    std::vector<Poset> next;
    next.reserve(all.size());
    for (std::uint64_t code : all) next.push_back(poset_from_code(m, code));
    layer = std::move(next);
  }
  return layer;
}

Poset random_poset(std::size_t n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution edge(density);
  Relation rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) rel[i][j] = edge(rng);
  }
  return make_poset(transitive_closure(std::move(rel)));
}

std::vector<IdentityFailure> check_identities(const Poset& p, std::size_t restriction_limit) {
  std::vector<IdentityFailure> out;
  const std::size_t parts = et_decompose(p).parts.size();
  const std::size_t strong = max_strong_antichain(p).size;
  const std::size_t maximal = maximal_elements(p).size();
  const std::size_t cover = min_ideal_cover(p, p.carrier());
  if (parts != strong || strong != maximal || maximal != cover) {
    std::ostringstream os;
    os << "parts=" << parts << " strong=" << strong << " maximal=" << maximal << " cover=" << cover;
    out.push_back({"erdos-tarski", os.str()});
  }
  for (Elem x = 0; x < p.size(); ++x)
    if (!factorization_check(p, x)) out.push_back({"factorization", "x=" + p.name(x)});
  if (p.size() <= restriction_limit) {
    const std::uint64_t subsets = std::uint64_t{1} << p.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      ElemSet q = p.none();
      for (Elem e = 0; e < p.size(); ++e)
        if ((mask >> e) & 1) q.insert(e);
      if (!restriction_identity_check(p, q)) {
        std::ostringstream os;
        os << "Q=" << q;
        out.push_back({"restriction", os.str()});
      }
    }
  }
  return out;
}

std::size_t CensusReport::violations() const {
  std::size_t total = 0;
  for (const auto& row : rows) total += row.violations;
  return total;
}

CensusReport run_census(std::size_t max_n, unsigned threads, std::size_t restriction_limit) {
  constexpr std::size_t kKeptFailures = 16;
  CensusReport report;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto classes = posets_up_to_iso(n, threads);
    const unsigned workers = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(classes.size()));
    std::vector<std::future<std::vector<IdentityFailure>>> jobs;
    for (unsigned w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        std::vector<IdentityFailure> mine;
        for (std::size_t i = w; i < classes.size(); i += workers)
          for (auto& f : check_identities(classes[i], restriction_limit)) {
            f.detail = "n=" + std::to_string(n) + " class " + std::to_string(i) + ": " + f.detail;
            mine.push_back(std::move(f));
          }
        return mine;
      }));
    std::vector<IdentityFailure> found;
    for (auto& job : jobs)
      for (auto& f : job.get()) found.push_back(std::move(f));
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.detail < b.detail; });
    report.rows.push_back({n, classes.size(), found.size()});
    for (auto& f : found)
      if (report.failures.size() < kKeptFailures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace posets
