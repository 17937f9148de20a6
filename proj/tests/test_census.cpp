#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "posets/census.hpp"
#include "posets/errors.hpp"

using namespace posets;

TEST_CASE("isomorphism class counts") {
  const std::vector<std::size_t> known = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n < known.size(); ++n) CHECK(posets_up_to_iso(n, 2).size() == known[n]);
}

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 50; ++round) {
    const Poset p = random_poset(1 + round % 7, rng, 0.4);
    std::vector<std::size_t> perm(p.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Relation r(p.size(), std::vector<bool>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) r[perm[i]][perm[j]] = p.leq(i, j);
    const Poset relabeled = make_poset(r);
    CHECK(canonical_code(p) == canonical_code(relabeled));
    CHECK(canonical_code(poset_from_code(p.size(), canonical_code(p))) == canonical_code(p));
  }
  CHECK_THROWS_AS(canonical_code(antichain(9)), PreconditionError);
}

TEST_CASE("census reports no identity violations") {
  const auto report = run_census(5, 2);
  CHECK(report.violations() == 0);
  CHECK(report.rows.size() == 5);
  CHECK(report.rows.back().classes == 63);
}

TEST_CASE("random posets are valid and reproducible") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) CHECK(random_poset(9, a) == random_poset(9, b));
}
