#include <random>

#include "doctest.h"
#include "posets/errors.hpp"
#include "posets/kleene_brouwer.hpp"

using namespace posets;

TEST_CASE("kb_compare") {
  CHECK(kb_compare({0}, {}) < 0);
  CHECK(kb_compare({1}, {0, 5}) > 0);
  CHECK(kb_compare({2, 1}, {2, 1}) == 0);
  CHECK(kb_compare({}, {3, 4}) > 0);
}

TEST_CASE("FiniteTree requires prefix closure") {
  CHECK_THROWS_AS(FiniteTree(std::set<NatSeq>{{}, {0, 1}}), PreconditionError);
  CHECK_NOTHROW(FiniteTree(std::set<NatSeq>{{}, {0}, {0, 1}}));
}

TEST_CASE("kb_decompose examples") {
  SUBCASE("root only, depth 0") {
    const auto d = kb_decompose(FiniteTree(std::set<NatSeq>{NatSeq{}}), {});
    CHECK(d.x.empty());
    CHECK(d.y.empty());
    CHECK(d.remainder == std::vector<NatSeq>{{}});
  }
  SUBCASE("two leaves along <0>") {
    const auto d = kb_decompose(FiniteTree(std::set<NatSeq>{{}, {0}, {1}}), {0});
    CHECK(d.x.empty());
    REQUIRE(d.y.size() == 1);
    CHECK(d.y[0] == std::vector<NatSeq>{{1}, {}});
    CHECK(d.remainder == std::vector<NatSeq>{{0}});
  }
  SUBCASE("path must lie in the tree") {
    CHECK_THROWS_AS(kb_decompose(FiniteTree(std::set<NatSeq>{{}, {0}}), {1}), PreconditionError);
  }
}

TEST_CASE("kb order and decomposition on random trees") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 100; ++round) {
    std::set<NatSeq> nodes = {{}};
    std::vector<NatSeq> frontier = {{}};
    while (!frontier.empty()) {
      NatSeq s = frontier.back();
      frontier.pop_back();
      if (s.size() >= 5) continue;
      const auto kids = rng() % 4;
      for (std::uint64_t k = 0; k < kids; ++k) {
        NatSeq t = s;
        t.push_back(k);
        nodes.insert(t);
        frontier.push_back(t);
      }
    }
    NatSeq path;
    while (nodes.count([&] { NatSeq t = path; t.push_back(0); return t; }()) && rng() % 4) path.push_back(0);
    const FiniteTree t(nodes);
    for (const auto& a : nodes)
      for (const auto& b : nodes) {
        CHECK((kb_compare(a, b) == 0) == (a == b));
        CHECK((kb_compare(a, b) < 0) == (kb_compare(b, a) > 0));
        for (const auto& c : nodes)
          if (kb_compare(a, b) < 0 && kb_compare(b, c) < 0) CHECK(kb_compare(a, c) < 0);
      }
    const auto d = kb_decompose(t, path);
    for (std::size_t n = 0; n < path.size(); ++n) CHECK(d.y[n] == kb_closed_form_y(t, path, n));
  }
}
