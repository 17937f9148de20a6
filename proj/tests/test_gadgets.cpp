#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "posets/antichains.hpp"
#include "posets/errors.hpp"
#include "posets/gadgets.hpp"
#include "posets/ideals.hpp"
#include "posets/separation.hpp"

using namespace posets;

namespace {

NatSet range_below(const FnTable& f, std::size_t args, std::size_t values) {
  NatSet out;
  for (std::size_t i = 0; i < f.size() && i < args; ++i)
    if (f(i) < values) out.insert(f(i));
  return out;
}

FnTable random_injective(std::mt19937_64& rng, std::size_t len, std::uint64_t bound) {
  std::vector<std::uint64_t> pool(bound);
  for (std::uint64_t v = 0; v < bound; ++v) pool[v] = v;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(len, bound));
  return FnTable(pool);
}

}  // namespace

TEST_CASE("FnTable rejects repeated values and overlapping pairs") {
  CHECK_THROWS_AS(FnTable({1, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(check_disjoint(FnTable({1, 2}), FnTable({3, 2})), PreconditionError);
  CHECK_NOTHROW(check_disjoint(FnTable({1, 2}), FnTable({0, 3})));
}

TEST_CASE("classify_stages") {
  using S = Stage;
  CHECK(classify_stages(FnTable({1, 2, 5})) == std::vector<S>{S::kTrueSoFar, S::kTrueSoFar, S::kTrueSoFar});
  CHECK(classify_stages(FnTable({5, 2, 1})) == std::vector<S>{S::kFalse, S::kFalse, S::kTrueSoFar});
  CHECK(classify_stages(FnTable({3, 1, 4, 0, 5})) ==
        std::vector<S>{S::kFalse, S::kFalse, S::kFalse, S::kTrueSoFar, S::kTrueSoFar});
}

TEST_CASE("false labels survive longer horizons") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    const FnTable f = random_injective(rng, 10, 20);
    const auto full = classify_stages(f);
    for (std::size_t len = 0; len <= f.size(); ++len) {
      std::vector<std::uint64_t> prefix(f.values().begin(), f.values().begin() + static_cast<long>(len));
      const auto part = classify_stages(FnTable(prefix));
      for (std::size_t n = 0; n < len; ++n)
        if (part[n] == Stage::kFalse) CHECK(full[n] == Stage::kFalse);
    }
  }
}

TEST_CASE("range-strong gadget") {
  const auto empty = g_range_strong(FnTable(), 3);
  CHECK(is_antichain(empty.poset, empty.poset.carrier()));
  const ElemSet all = extend_maximal_strong_antichain(empty.poset, empty.poset.none());
  CHECK(all == empty.poset.carrier());
  CHECK(decode_range_strong(empty, all).empty());

  const auto two = g_range_strong(FnTable({2}));
  CHECK(two.poset.leq(two.role("a2"), two.role("c0")));
  CHECK(two.poset.leq(two.role("b2"), two.role("c0")));
  CHECK(decode_range_strong(two, extend_maximal_strong_antichain(two.poset, two.poset.none())) == NatSet{2});

  const auto both = g_range_strong(FnTable({0, 1}), 2);
  CHECK(decode_range_strong(both, extend_maximal_strong_antichain(both.poset, both.poset.none())) == NatSet{0, 1});
  CHECK_THROWS_AS(decode_range_strong(both, both.poset.none()), PreconditionError);
}

TEST_CASE("sep gadget") {
  auto run = [](const FnTable& f, const FnTable& g) {
    const auto inst = g_sep(f, g);
    return decode_sep(inst, separate_down(inst.poset, inst.family_of('a'), inst.family_of('b')));
  };
  const NatSet d = run(FnTable({0}), FnTable({1}));
  CHECK(d.count(0) == 1);
  CHECK(d.count(1) == 0);
  const NatSet swapped = run(FnTable({1}), FnTable({0}));
  CHECK(swapped.count(1) == 1);
  CHECK(swapped.count(0) == 0);
  const auto e = g_sep(FnTable(), FnTable(), 2);
  CHECK(decode_sep(e, e.family_of('a')).empty());
  CHECK(decode_sep(e, e.family_of('a') | e.family_of('c')) == NatSet{0, 1});
  CHECK_THROWS_AS(decode_sep(e, e.family_of('b')), PreconditionError);
}

TEST_CASE("two-chain gadget") {
  const auto empty = g_two_chain(FnTable(), 4);
  CHECK(decode_two_chain(empty, essential_decomposition(empty.poset)).empty());
  CHECK(empty.poset.leq(empty.role("a3"), empty.role("c")));

  const auto five = g_two_chain(FnTable({5}), 8);
  CHECK_FALSE(five.poset.leq(five.role("a5"), five.role("b0")));
  CHECK(five.poset.leq(five.role("a5"), five.role("b1")));
  CHECK(decode_two_chain(five, essential_decomposition(five.poset)) == NatSet{5});

  IdealCover bogus{five.poset.carrier(), {five.poset.carrier()}, five.poset.none()};
  CHECK_THROWS_AS(decode_two_chain(five, bogus), PreconditionError);
}

TEST_CASE("two-chain strong antichains stay small") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    const FnTable f = random_injective(rng, 1 + round % 4, 5);
    const auto inst = g_two_chain(f, f.size() + round % 3);
    CHECK(oracle::max_strong_antichain(inst.poset).size <= 2);
  }
}

TEST_CASE("truefalse gadget") {
  const auto inc = g_truefalse(FnTable({1, 2, 3, 4}), true);
  CHECK_FALSE(inc.family_of('a').intersects(down_closure(inc.poset, inc.family_of('b')) - inc.family_of('b')));
  const ElemSet big = truefalse_strong_antichain(inc, FnTable({1, 2, 3, 4}));
  CHECK(big.count() == 4);
  CHECK(is_strong_antichain(inc.poset, big));

  const auto flip = g_truefalse(FnTable({1, 0}), false, 2);
  CHECK(flip.poset.leq(flip.role("a0"), flip.role("b1")));
  CHECK_FALSE(flip.poset.leq(flip.role("a1"), flip.role("b1")));
  CHECK_THROWS_AS(g_truefalse(FnTable({1, 0}), false, 3), PreconditionError);

  std::mt19937_64 rng(47);
  for (int round = 0; round < 100; ++round) {
    const FnTable f = random_injective(rng, 1 + round % 6, 12);
    for (bool copies : {false, true}) {
      const auto inst = g_truefalse(f, copies);
      CHECK(validate(inst.poset.relation()).ok());
      CHECK(is_strong_antichain(inst.poset, truefalse_strong_antichain(inst, f)));
    }
  }
}

TEST_CASE("omega + omega* gadget") {
  const auto inc = g_omega_omegastar(FnTable({0, 1, 2, 3}));
  CHECK(decode_wpo(inc, essential_decomposition(inc.poset)).empty());
  CHECK(inc.poset.leq(inc.role("a3"), inc.role("a0")));

  const FnTable f({3, 1, 4, 0, 5});
  const auto inst = g_omega_omegastar(f, 5);
  CHECK(decode_wpo(inst, essential_decomposition(inst.poset)) == NatSet{0, 1, 2});
  CHECK(false_stages(f) == NatSet{0, 1, 2});

  std::mt19937_64 rng(53);
  for (int round = 0; round < 100; ++round) {
    const FnTable g = random_injective(rng, 1 + round % 12, 30);
    const auto r = g_omega_omegastar(g);
    CHECK(validate(r.poset.relation()).ok());
    CHECK(decode_wpo(r, essential_decomposition(r.poset)) == false_stages(g));
  }
}

TEST_CASE("antichain extension gadget") {
  const auto empty = g_antichain_ext(FnTable(), 3);
  const ElemSet all = extend_maximal_antichain(empty.poset, empty.family_of('b'));
  CHECK(empty.family_of('a').subset_of(all));
  CHECK(decode_ext(empty, all).empty());

  const auto four = g_antichain_ext(FnTable({4}));
  CHECK(decode_ext(four, extend_maximal_antichain(four.poset, four.family_of('b'))) == NatSet{4});

  std::mt19937_64 rng(59);
  for (int round = 0; round < 100; ++round) {
    const FnTable f = random_injective(rng, 1 + round % 10, 10);
    const auto inst = g_antichain_ext(f, 10);
    CHECK(decode_ext(inst, extend_maximal_antichain(inst.poset, inst.family_of('b'))) == range_below(f, 10, 10));
  }
}

TEST_CASE("wkl gadget") {
  const auto empty = g_wkl(FnTable(), FnTable(), 3);
  CHECK(is_antichain(empty.poset, empty.poset.carrier()));

  const FnTable f({0});
  const FnTable g({1, 2, 3, 4, 5});
  const auto inst = g_wkl(f, g);
  CHECK(inst.poset.leq(inst.role("b0"), inst.role("a1")));
  CHECK_FALSE(inst.poset.leq(inst.role("b0"), inst.role("a0")));
  CHECK(inst.poset.leq(inst.role("a2"), inst.role("b3")));
  const auto d = decode_wkl(inst, down_closure(inst.poset, inst.family_of('a')));
  CHECK(d.set.count(0) == 1);
  CHECK(d.n0 == 0);
  for (auto v : g.values()) CHECK(d.set.count(v) == 0);
  CHECK_THROWS_AS(decode_wkl(inst, inst.poset.carrier()), PreconditionError);

  std::mt19937_64 rng(61);
  for (int round = 0; round < 100; ++round) {
    const FnTable both = random_injective(rng, 24, 24);
    std::vector<std::uint64_t> fv(both.values().begin(), both.values().begin() + 1 + round % 11);
    std::vector<std::uint64_t> gv(both.values().begin() + 12, both.values().begin() + 13 + round % 11);
    const auto r = g_wkl(FnTable(fv), FnTable(gv));
    CHECK(validate(r.poset.relation()).ok());
  }
}

TEST_CASE("gadget roles round-trip through labels") {
  const auto inst = g_truefalse(FnTable({2, 0, 1}), true);
  const auto back = gadget_from_poset(inst.family, inst.poset, inst.horizon);
  CHECK(back.roles == inst.roles);
  CHECK(inst.role("a2_1") == inst.poset.by_label("a2_1"));
}
