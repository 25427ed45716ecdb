#include "doctest.h"

#include "geodual/errors.hpp"
#include "geodual/generators.hpp"
#include "geodual/oracle.hpp"
#include "geodual/ranking.hpp"
#include "instances.hpp"
#include "reference.hpp"

using namespace geodual;
using fixtures::set;

namespace {

RankFunction ranked(const ImplicationalBase& base) {
  auto result = compute_rank(base);
  REQUIRE(std::holds_alternative<RankFunction>(result));
  return std::get<RankFunction>(result);
}

}  // namespace

TEST_CASE("rank examples") {
  const auto f3 = fixtures::ranked6();
  const RankFunction rho = ranked(f3);
  CHECK(rho.ranks() == std::vector<std::uint32_t>{2, 2, 2, 1, 1, 0});
  CHECK(rho.max_rank() == 2);
  CHECK(rho.level(1) == set(f3.ground(), "4 5"));

  const auto conflict = compute_rank(fixtures::unranked5());
  REQUIRE(std::holds_alternative<RankConflict>(conflict));
  const auto& c = std::get<RankConflict>(conflict);
  CHECK(c.first_rank != c.second_rank);

  CHECK(ranked(fixtures::empty_base({"a"})).ranks() == std::vector<std::uint32_t>{0});
  CHECK(std::holds_alternative<RankConflict>(compute_rank(fixtures::skew5())));
}

TEST_CASE("conflict witnesses force the two ranks") {
  for (const auto& base : {fixtures::unranked5(), fixtures::skew5()}) {
    const auto c = std::get<RankConflict>(compute_rank(base));
    // second witness: source and element are on opposite sides of the rule
    const auto& w = c.second_witness;
    const bool source_above = w.premise.contains(c.second_source) && w.conclusion == c.element;
    const bool source_below = w.conclusion == c.second_source && w.premise.contains(c.element);
    CHECK((source_above || source_below));
    if (c.first_witness) {
      const auto& f = *c.first_witness;
      CHECK((f.conclusion == c.element || f.premise.contains(c.element)));
    }
    CHECK(describe(base, c).find("needs rank") != std::string::npos);
  }
}

TEST_CASE("validate_rank examples") {
  const auto f3 = fixtures::ranked6();
  CHECK(validate_rank(f3, RankFunction({2, 2, 2, 1, 1, 0})));
  CHECK_FALSE(validate_rank(f3, RankFunction({2, 2, 1, 1, 1, 0})));
  CHECK(validate_rank(fixtures::empty_base({"1", "2"}), RankFunction({7, 3})));
  CHECK_FALSE(validate_rank(f3, RankFunction({0, 0})));
}

TEST_CASE("isolated elements and separate components start at rank 0") {
  const GroundSet g({"a", "b", "c", "d", "e"});
  const ImplicationalBase base(g, {{set(g, "a"), 1}, {set(g, "b"), 2}, {set(g, "d"), 4}});
  CHECK(ranked(base).ranks() == std::vector<std::uint32_t>{2, 1, 0, 1, 0});
}

TEST_CASE("unranked certificate examples") {
  const auto f1 = fixtures::unranked5();
  const MeetFamily m1(f1.ground(), oracle::meets_brute(f1));
  CHECK(check_unranked_certificate(m1, {f1.implications()}));

  const GroundSet abc({"a", "b", "c"});
  const ImplicationalBase ac(abc, {{set(abc, "a"), 2}});
  const MeetFamily mac(abc, oracle::meets_brute(ac));
  CHECK_FALSE(check_unranked_certificate(mac, {{{set(abc, "a b"), 2}}}));

  const auto f3 = fixtures::ranked6();
  const MeetFamily m3(f3.ground(), oracle::meets_brute(f3));
  CHECK_FALSE(check_unranked_certificate(m3, {{{set(f3.ground(), "4 5"), 5}}}));

  // a redundant generator is not critical: 3 4 -> j
  CHECK_FALSE(check_unranked_certificate(m3, {{{set(f3.ground(), "3 4"), 5}}}));
  CHECK_FALSE(check_unranked_certificate(m3, {}));
}

TEST_CASE("computed ranks validate and are unique per component") {
  gen::Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto base = gen::random_ranked_base(rng, {1 + static_cast<std::size_t>(round % 10), 14, 3, 4});
    const RankFunction rho = ranked(base);
    CHECK(validate_rank(base, rho));
    CHECK(is_acyclic(base));

    const auto other = ref::find_rank(ref::to_system(base));
    REQUIRE(other);
    for (const auto& imp : base.implications()) {
      const int shift = (*other)[imp.conclusion] - static_cast<int>(rho[imp.conclusion]);
      imp.premise.for_each([&](Element a) { CHECK((*other)[a] - static_cast<int>(rho[a]) == shift); });
    }
  }
}

TEST_CASE("conflicts are confirmed by exhaustive rank search") {
  gen::Rng rng(32);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 2 + round % 6;
    const auto base = instances::unrank(rng, gen::random_ranked_base(rng, {n, 6, 2, 3}));
    REQUIRE(std::holds_alternative<RankConflict>(compute_rank(base)));
    CHECK_FALSE(ref::rank_exists(ref::to_system(base)));
  }
  for (int round = 0; round < 200; ++round) {
    const auto base = gen::random_base(rng, {2 + static_cast<std::size_t>(round % 6), 6, 2, 0});
    CHECK(std::holds_alternative<RankFunction>(compute_rank(base)) == ref::rank_exists(ref::to_system(base)));
  }
}
