#include "doctest.h"

#include <cstdlib>

#include "geodual/errors.hpp"
#include "geodual/generators.hpp"
#include "geodual/oracle.hpp"
#include "reference.hpp"

using namespace geodual;
using fixtures::family;
using fixtures::set;

TEST_CASE("closed set examples") {
  const auto f1 = fixtures::unranked5();
  const auto& g = f1.ground();
  CHECK(oracle::all_closed_sets(f1) == family(g, {"", "1", "2", "1 2", "1 4", "2 5", "1 2 3", "1 2 4", "1 2 5",
                                                  "1 2 3 4", "1 2 3 5", "1 2 3 4 5"}));
  CHECK(oracle::all_closed_sets(fixtures::empty_base({"a", "b", "c"})).size() == 8);
  const auto chain = fixtures::chain();
  CHECK(oracle::all_closed_sets(chain) == family(chain.ground(), {"", "2", "1 2"}));
}

TEST_CASE("meet examples") {
  const auto f1 = fixtures::unranked5();
  CHECK(oracle::meets_brute(f1) == family(f1.ground(), {"1 4", "2 5", "1 2 4", "1 2 5", "1 2 3 4", "1 2 3 5"}));
  const auto chain = fixtures::chain();
  CHECK(oracle::meets_brute(chain) == family(chain.ground(), {"", "2"}));
  const auto boolean = fixtures::empty_base({"1", "2"});
  CHECK(oracle::meets_brute(boolean) == family(boolean.ground(), {"1", "2"}));
}

TEST_CASE("join examples") {
  const auto f1 = fixtures::unranked5();
  CHECK(oracle::joins_brute(f1) == family(f1.ground(), {"1", "2", "1 2 3", "1 4", "2 5"}));
  const auto boolean = fixtures::empty_base({"1", "2", "3"});
  CHECK(oracle::joins_brute(boolean) == family(boolean.ground(), {"1", "2", "3"}));
  const auto chain = fixtures::chain();
  CHECK(oracle::joins_brute(chain) == family(chain.ground(), {"2", "1 2"}));

  const GroundSet g({"1", "2"});
  CHECK_THROWS_AS(oracle::joins_brute(ImplicationalBase(g, {{set(g, "1"), 1}, {set(g, "2"), 0}})), PreconditionError);
}

TEST_CASE("minimal generator examples") {
  const auto f3 = fixtures::ranked6();
  CHECK(oracle::mingens_brute(f3, f3.ground().at("j")) == family(f3.ground(), {"4 5", "3 4", "1 2 3", "1 2 5"}));
  const auto f1 = fixtures::unranked5();
  CHECK(oracle::mingens_brute(f1, f1.ground().at("3")) == family(f1.ground(), {"4 5"}));
  const auto chain = fixtures::chain();
  CHECK(oracle::mingens_brute(chain, 1) == family(chain.ground(), {"1"}));
}

TEST_CASE("transversal oracle examples") {
  const GroundSet g({"1", "2", "3", "4", "5"});
  CHECK(oracle::transversals_brute(Hypergraph(set(g, "4 5"), family(g, {"4", "5"}))) == family(g, {"4 5"}));
  CHECK(oracle::transversals_brute(Hypergraph(set(g, "1 2"), {})) == family(g, {""}));
  CHECK(oracle::transversals_brute(Hypergraph(set(g, "1 2"), family(g, {"", "1"}))).empty());
}

TEST_CASE("size guards") {
  const auto big = fixtures::empty_base([] {
    std::vector<std::string> labels;
    for (int i = 0; i < 21; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
  }());
  unsetenv("GEODUAL_GUARD_OVERRIDE");
  CHECK_FALSE(oracle::guards_overridden());
  CHECK_THROWS_AS(oracle::all_closed_sets(big), PreconditionError);
  const GroundSet g17 = gen::numbered_ground(17);
  CHECK_THROWS_AS(oracle::transversals_brute(Hypergraph(g17.full_set(), {})), PreconditionError);
  setenv("GEODUAL_GUARD_OVERRIDE", "1", 1);
  CHECK(oracle::guards_overridden());
  CHECK(oracle::transversals_brute(Hypergraph(g17.full_set(), {})) == SetFamily{g17.empty_set()});
  unsetenv("GEODUAL_GUARD_OVERRIDE");
}

TEST_CASE("oracles agree with the naive reference") {
  gen::Rng rng(81);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + round % 9;
    const auto base = round % 3 == 0 ? gen::random_base(rng, {n, 8, 3, 0}) : gen::random_acyclic_base(rng, {n, 10, 3, 0});
    const auto sys = ref::to_system(base);
    CHECK(ref::to_masks(oracle::all_closed_sets(base)) == ref::closed_sets(sys));
    CHECK(ref::to_masks(oracle::meets_brute(base)) == ref::meets(sys));
    for (Element b = 0; b < n; ++b) {
      CHECK(ref::to_masks(oracle::mingens_brute(base, b)) == ref::minimal_generators(sys, b));
      CHECK(ref::to_masks(oracle::maximal_avoiding_brute(base, ElementSet(n, {b}))) ==
            ref::maximal_avoiding(sys, ref::Mask{1} << b));
    }
    if (is_standard(base)) {
      SetFamily singles;
      for (Element j = 0; j < n; ++j) singles.push_back(base.closure(ElementSet(n, {j})));
      CHECK(oracle::joins_brute(base) == normalized(singles));
    } else {
      CHECK_THROWS_AS(oracle::joins_brute(base), PreconditionError);
    }
  }
}
