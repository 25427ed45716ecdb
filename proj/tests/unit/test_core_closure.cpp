#include "doctest.h"

#include "geodual/generators.hpp"
#include "geodual/implicational_base.hpp"
#include "geodual/errors.hpp"
#include "reference.hpp"

using namespace geodual;
using fixtures::set;

TEST_CASE("element set algebra") {
  const ElementSet s(70, {0, 3, 65});
  const ElementSet t(70, {3, 4, 69});
  CHECK(((s | t) & s) == s);
  CHECK(s.complement().complement() == s);
  CHECK((s & t) == ElementSet(70, {3}));
  CHECK((s - t) == ElementSet(70, {0, 65}));
  CHECK(s.size() == 3);
  CHECK(s.elements() == std::vector<Element>{0, 3, 65});
  CHECK(s.next_after(3) == Element{65});
  CHECK(ElementSet::full(70).complement().empty());
  CHECK_THROWS_AS((void)(s | ElementSet(71)), InputError);
}

TEST_CASE("lex order on member sequences") {
  const GroundSet g({"1", "2", "3"});
  SetFamily f = {set(g, "2"), set(g, "1 3"), set(g, "1 2 3"), set(g, ""), set(g, "1 2"), set(g, "1 2")};
  normalize_family(f);
  CHECK(f == SetFamily{set(g, ""), set(g, "1 2"), set(g, "1 2 3"), set(g, "1 3"), set(g, "2")});
}

TEST_CASE("ground set labels") {
  const GroundSet g({"a", "b"});
  CHECK(g.at("b") == 1);
  CHECK_FALSE(g.find("c"));
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(GroundSet({"a", ""}), InputError);
  CHECK(g.format(g.empty_set()) == ".");
  CHECK(g.format(g.full_set()) == "a b");
}

TEST_CASE("implication invariants") {
  const GroundSet g({"1", "2"});
  CHECK_THROWS_AS(ImplicationalBase(g, {{g.empty_set(), 0}}), InputError);
  CHECK_THROWS_AS(ImplicationalBase(g, {{set(g, "1"), 0}}), InputError);
  const ImplicationalBase dup(g, {{set(g, "1"), 1}, {set(g, "1"), 1}});
  CHECK(dup.size() == 1);
  CHECK(dup.warnings().size() == 1);
  CHECK(fixtures::unranked5().dimension() == 2);
}

TEST_CASE("closure examples") {
  const auto f1 = fixtures::unranked5();
  const auto& g1 = f1.ground();
  CHECK(closure(f1, set(g1, "4 5")) == set(g1, "1 2 3 4 5"));

  const auto empty = fixtures::empty_base({"1", "2", "3"});
  CHECK(closure(empty, set(empty.ground(), "1 3")) == set(empty.ground(), "1 3"));

  const auto f3 = fixtures::ranked6();
  CHECK(closure(f3, set(f3.ground(), "3 4")) == set(f3.ground(), "3 4 5 j"));

  CHECK_THROWS_AS(closure(f1, ElementSet(4)), InputError);
}

TEST_CASE("is_closed examples") {
  const auto f1 = fixtures::unranked5();
  const auto& g = f1.ground();
  CHECK(is_closed(f1, set(g, "1 4")));
  CHECK_FALSE(is_closed(f1, set(g, "4")));
  CHECK(is_closed(f1, g.full_set()));
  CHECK(is_closed(fixtures::ranked6(), fixtures::ranked6().ground().full_set()));
}

TEST_CASE("implication graph examples") {
  const GroundSet g({"1", "2", "3"});
  const ImplicationalBase path(g, {{set(g, "1"), 1}, {set(g, "2"), 2}});
  using Arcs = std::vector<std::pair<Element, Element>>;
  CHECK(implication_graph(path).arcs == Arcs{{0, 1}, {1, 2}});

  // labels 1..5 sit at indices 0..4
  CHECK(implication_graph(fixtures::unranked5()).arcs == Arcs{{2, 0}, {2, 1}, {3, 0}, {3, 2}, {4, 1}, {4, 2}});
  CHECK(implication_graph(fixtures::empty_base({"1"})).arcs.empty());
  CHECK(implication_graph(path).successors(1) == std::vector<Element>{2});
  CHECK(implication_graph(path).predecessors(1) == std::vector<Element>{0});
}

TEST_CASE("acyclicity and standardness examples") {
  const GroundSet g({"1", "2"});
  const ImplicationalBase cycle(g, {{set(g, "1"), 1}, {set(g, "2"), 0}});
  CHECK(is_acyclic(fixtures::unranked5()));
  CHECK_FALSE(is_acyclic(cycle));
  CHECK(is_acyclic(fixtures::empty_base({"1", "2"})));

  CHECK(is_standard(fixtures::unranked5()));
  CHECK_FALSE(is_standard(cycle));
  CHECK(is_standard(fixtures::empty_base({"1", "2"})));
}

TEST_CASE("equivalence examples") {
  const auto f1 = fixtures::unranked5();
  auto reversed = f1.implications();
  std::reverse(reversed.begin(), reversed.end());
  CHECK(equivalent(f1, ImplicationalBase(f1.ground(), reversed)));

  const GroundSet abc({"a", "b", "c"});
  const ImplicationalBase with(abc, {{set(abc, "a b"), 2}, {set(abc, "a"), 2}});
  const ImplicationalBase without(abc, {{set(abc, "a"), 2}});
  CHECK(equivalent(with, without));

  CHECK_FALSE(equivalent(fixtures::chain(), fixtures::empty_base({"1", "2"})));
  CHECK_THROWS_AS(equivalent(fixtures::chain(), fixtures::empty_base({"1", "3"})), InputError);
}

TEST_CASE("closure operator axioms on random bases") {
  gen::Rng rng(11);
  for (int round = 0; round < 120; ++round) {
    gen::BaseShape shape{2 + static_cast<std::size_t>(round % 9), 10, 3, 3};
    const auto base = gen::random_base(rng, shape);
    const auto sys = ref::to_system(base);
    const std::size_t n = base.ground().size();
    std::vector<ref::Mask> closed_family;
    for (ref::Mask s = 0; s <= sys.full(); ++s) {
      const ElementSet es = ref::to_set(n, s);
      const ElementSet c = closure(base, es);
      REQUIRE(ref::to_mask(c) == ref::closure(sys, s));
      CHECK(es.is_subset_of(c));
      CHECK(closure(base, c) == c);
      CHECK(is_closed(base, es) == (c == es));
      if (c == es) closed_family.push_back(s);
      for (ref::Mask t = s; t <= sys.full(); t = (t + 1) | s) {
        CHECK(c.is_subset_of(closure(base, ref::to_set(n, t))));
        if (t == sys.full()) break;
      }
    }
    CHECK(closed_family.back() == sys.full());
    for (ref::Mask a : closed_family) {
      for (ref::Mask b : closed_family) CHECK(std::binary_search(closed_family.begin(), closed_family.end(), a & b));
    }
  }
}

TEST_CASE("acyclic nonempty-premise bases are standard") {
  gen::Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    const auto base = gen::random_acyclic_base(rng, {8, 12, 3, 0});
    CHECK(is_acyclic(base));
    CHECK(is_standard(base));
  }
}
