#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posets/antichains.hpp"
#include "posets/errors.hpp"
#include "posets/ideals.hpp"
#include "posets/separation.hpp"

using namespace posets;
using namespace fixture;

TEST_CASE("separate_down") {
  const Poset c = chain3();
  CHECK(separate_down(c, c.none(), set(c, {2})).empty());
  CHECK(separate_down(c, set(c, {1}), set(c, {2})) == set(c, {0, 1}));
  const Poset a = antichain(2);
  CHECK(separate_down(a, set(a, {0}), set(a, {1})) == set(a, {0}));
  CHECK_THROWS_AS(separate_down(c, set(c, {2}), set(c, {1})), PreconditionError);
}

TEST_CASE("separation_tree") {
  const Poset c = chain3();
  CHECK(separation_tree(c, set(c, {1}), set(c, {2}), 0).length() == 0);
  const ApproxSeq s = separation_tree(c, set(c, {1}), set(c, {2}), 3);
  CHECK(s.bits == std::vector<std::uint8_t>{1, 1, 0});
  const ApproxSeq z = separation_tree(c, c.none(), c.none(), 5);
  CHECK(z.bits == std::vector<std::uint8_t>(5, 0));
}

TEST_CASE("maximal_antichain_interval") {
  CHECK(maximal_antichain_interval(antichain3(), antichain3().carrier()) == antichain3().carrier());
  CHECK(maximal_antichain_interval(chain3(), set(chain3(), {1})) == set(chain3(), {0, 1}));
  CHECK(maximal_antichain_interval(vee(), set(vee(), {0, 1})) == set(vee(), {0, 1}));
  CHECK_THROWS_AS(maximal_antichain_interval(vee(), set(vee(), {0})), PreconditionError);
}

TEST_CASE("antichain_separator") {
  const auto two = antichain_separator(antichain(2), antichain(2).carrier());
  CHECK(two.interval == antichain(2).carrier());
  CHECK(two.certificate == 2);
  const auto v = antichain_separator(vee(), set(vee(), {0, 1}));
  CHECK(v.interval == set(vee(), {0, 1}));
  CHECK(v.certificate == 2);
  const Poset fan = from_pairs(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  const auto f = antichain_separator(fan, set(fan, {0, 1, 2, 3}));
  CHECK(f.interval == set(fan, {0, 1, 2, 3}));
  CHECK(f.certificate == 4);
  CHECK_THROWS_AS(antichain_separator(chain3(), set(chain3(), {0, 1})), PreconditionError);
}

TEST_CASE("restriction_identity_check") {
  const Poset c = chain3();
  CHECK(restriction_identity_check(c, c.carrier()));
  CHECK(restriction_identity_check(c, c.none()));
  CHECK(restriction_identity_check(c, set(c, {0, 2})));
}

TEST_CASE("separation properties on small random posets") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    const Poset p = oracle::random_poset(1 + round % 6, rng, 0.3);
    const std::size_t n = p.size();
    const oracle::Mask full = (oracle::Mask{1} << n) - 1;
    for (oracle::Mask a = 0; a <= full; ++a)
      for (oracle::Mask b = 0; b <= full; ++b) {
        if (a & b) continue;
        const ElemSet sa = oracle::set_of(a, n);
        const ElemSet sb = oracle::set_of(b, n);
        if ((oracle::down_of(p, a) & b) != 0) {
          CHECK_THROWS_AS(separate_down(p, sa, sb), PreconditionError);
          continue;
        }
        const ElemSet i = separate_down(p, sa, sb);
        CHECK(sa.subset_of(i));
        CHECK_FALSE(i.intersects(sb));
        CHECK(is_initial_interval(p, i));
        CHECK(separation_tree(p, sa, sb, n).bits == characteristic(p, i, n).bits);
      }
    for (oracle::Mask q = 0; q <= full; ++q) CHECK(restriction_identity_check(p, oracle::set_of(q, n)));
  }
}
