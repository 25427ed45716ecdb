#include "doctest.h"

#include "geodual/critical_base.hpp"
#include "geodual/errors.hpp"
#include "geodual/generators.hpp"
#include "geodual/oracle.hpp"
#include "geodual/ranking.hpp"
#include "reference.hpp"

using namespace geodual;
using fixtures::set;

namespace {

// An equivalent acyclic base: entailed implications added, order shuffled.
ImplicationalBase perturb(gen::Rng& rng, const ImplicationalBase& base) {
  const std::size_t n = base.ground().size();
  auto rules = base.implications();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < 4; ++k) {
    ElementSet premise(n);
    premise.insert(static_cast<Element>(pick(rng)));
    premise.insert(static_cast<Element>(pick(rng)));
    const ElementSet hull = base.closure(premise);
    for (Element b = 0; b < n; ++b) {
      if (!hull.contains(b) || premise.contains(b)) continue;
      rules.push_back({premise, b});
      if (!is_acyclic(ImplicationalBase(base.ground(), rules))) rules.pop_back();
      break;
    }
  }
  std::shuffle(rules.begin(), rules.end(), rng);
  return ImplicationalBase(base.ground(), rules);
}

}  // namespace

TEST_CASE("redundancy examples") {
  const auto f3 = fixtures::ranked6();
  const auto& g = f3.ground();
  const Element j = g.at("j");
  CHECK(is_redundant(f3, {set(g, "3 4"), j}));
  CHECK_FALSE(is_redundant(f3, {set(g, "4 5"), j}));
  CHECK(is_redundant(f3, {set(g, "1 2 3"), j}));
  CHECK(is_redundant(f3, {set(g, "1 2 5"), j}));

  const auto chain = fixtures::chain();
  CHECK_FALSE(is_redundant(chain, {set(chain.ground(), "1"), 1}));

  const GroundSet g2({"1", "2"});
  const ImplicationalBase cycle(g2, {{set(g2, "1"), 1}, {set(g2, "2"), 0}});
  CHECK_THROWS_AS(is_redundant(cycle, {set(g2, "1"), 1}), PreconditionError);
  CHECK_THROWS_AS(is_redundant(f3, {set(g, "3 4 5"), j}), InputError);
}

TEST_CASE("minimal generators inside a premise") {
  const auto f3 = fixtures::ranked6();
  const auto& g = f3.ground();
  CHECK(minimal_generators_within(f3, g.full_set().without(g.at("j")), g.at("j")) ==
        fixtures::family(g, {"4 5", "3 4", "1 2 3", "1 2 5"}));
  CHECK(minimal_generators_within(f3, set(g, "1 2 3"), g.at("j")) == fixtures::family(g, {"1 2 3"}));
  CHECK(minimal_generators_within(f3, set(g, "1 3"), g.at("j")).empty());
}

TEST_CASE("critical base examples") {
  const auto f1 = fixtures::unranked5();
  CHECK(critical_base(f1).same_implications(f1));

  const GroundSet abc({"a", "b", "c"});
  const ImplicationalBase redundant(abc, {{set(abc, "a"), 2}, {set(abc, "b"), 2}, {set(abc, "a b"), 2}});
  const ImplicationalBase expected(abc, {{set(abc, "a"), 2}, {set(abc, "b"), 2}});
  CHECK(critical_base(redundant).implications() == expected.implications());

  const auto f3 = fixtures::ranked6();
  CHECK(critical_base(f3).implications() == f3.implications());

  const ImplicationalBase cycle(abc, {{set(abc, "a"), 1}, {set(abc, "b"), 0}});
  CHECK_THROWS_AS(critical_base(cycle), PreconditionError);
}

TEST_CASE("ranked geometry examples") {
  CHECK_FALSE(is_ranked_geometry(fixtures::unranked5()));
  CHECK(is_ranked_geometry(fixtures::ranked6()));
  CHECK_FALSE(is_ranked_geometry(fixtures::skew5()));
}

TEST_CASE("critical base properties on random acyclic bases") {
  gen::Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    const auto base = gen::random_acyclic_base(rng, {2 + static_cast<std::size_t>(round % 8), 12, 3, 0});
    const auto sys = ref::to_system(base);
    const auto crit = critical_base(base);

    CHECK(ref::rules_of(crit) == ref::critical_rules(sys));
    CHECK(equivalent(crit, base));
    for (std::size_t i = 0; i < crit.size(); ++i) {
      auto rest = crit.implications();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(equivalent(ImplicationalBase(base.ground(), rest), base));
    }
    for (const auto& imp : crit.implications()) {
      const MinimalGenerator mg{imp.premise, imp.conclusion};
      CHECK(is_minimal_generator(base, mg));
      CHECK_FALSE(is_redundant(base, mg));
      const bool covered = std::any_of(base.implications().begin(), base.implications().end(), [&](const Implication& c) {
        return c.conclusion == imp.conclusion && imp.premise.is_subset_of(c.premise);
      });
      CHECK(covered);
    }
    CHECK(critical_base(perturb(rng, base)).implications() == crit.implications());
    CHECK(is_ranked_geometry(base) == std::holds_alternative<RankFunction>(compute_rank(crit)));
  }
}

TEST_CASE("redundancy agrees with the closure-contains-another-generator rule") {
  gen::Rng rng(42);
  for (int round = 0; round < 120; ++round) {
    const auto base = gen::random_acyclic_base(rng, {2 + static_cast<std::size_t>(round % 7), 10, 3, 0});
    const auto sys = ref::to_system(base);
    const std::size_t n = base.ground().size();
    for (Element b = 0; b < n; ++b) {
      const auto gens = ref::minimal_generators(sys, b);
      CHECK(ref::to_masks(oracle::mingens_brute(base, b)) == gens);
      for (ref::Mask a : gens) {
        const ref::Mask hull = ref::closure(sys, a);
        const bool expected =
            std::any_of(gens.begin(), gens.end(), [&](ref::Mask o) { return o != a && (o & hull) == o; });
        CHECK(is_redundant(base, {ref::to_set(n, a), b}) == expected);
      }
    }
  }
}
