#include "geodual/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace geodual::gen {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Nonempty random subset of `pool` with at most `cap` members.
ElementSet random_premise(Rng& rng, std::size_t n, std::vector<Element> pool, std::size_t cap) {
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t size = uniform(rng, 1, std::min(cap, pool.size()));
  ElementSet s(n);
  for (std::size_t i = 0; i < size; ++i) s.insert(pool[i]);
  return s;
}

}  // namespace

GroundSet numbered_ground(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

ImplicationalBase random_ranked_base(Rng& rng, const BaseShape& shape) {
  const std::size_t n = shape.elements;
  const std::size_t top = n < 2 ? 0 : uniform(rng, 1, std::min(shape.max_rank, n - 1));
  std::vector<std::vector<Element>> levels(top + 1);
  for (Element e = 0; e < n; ++e) levels[uniform(rng, 0, top)].push_back(e);

  std::vector<std::size_t> usable;  // levels i with i and i + 1 populated
  for (std::size_t i = 0; i < top; ++i) {
    if (!levels[i].empty() && !levels[i + 1].empty()) usable.push_back(i);
  }
  std::vector<Implication> rules;
  if (!usable.empty()) {
    const std::size_t count = uniform(rng, 0, shape.max_implications);
    for (std::size_t r = 0; r < count; ++r) {
      const std::size_t i = usable[uniform(rng, 0, usable.size() - 1)];
      const Element b = levels[i][uniform(rng, 0, levels[i].size() - 1)];
      rules.push_back({random_premise(rng, n, levels[i + 1], shape.max_premise), b});
    }
  }
  return ImplicationalBase(numbered_ground(n), std::move(rules));
}

ImplicationalBase random_acyclic_base(Rng& rng, const BaseShape& shape) {
  const std::size_t n = shape.elements;
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Implication> rules;
  if (n >= 2) {
    const std::size_t count = uniform(rng, 0, shape.max_implications);
    for (std::size_t r = 0; r < count; ++r) {
      const std::size_t p = uniform(rng, 1, n - 1);
      std::vector<Element> before(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(p));
      rules.push_back({random_premise(rng, n, before, shape.max_premise), order[p]});
    }
  }
  return ImplicationalBase(numbered_ground(n), std::move(rules));
}

ImplicationalBase random_distributive_base(Rng& rng, const BaseShape& shape) {
  BaseShape unit = shape;
  unit.max_premise = 1;
  return random_acyclic_base(rng, unit);
}

ImplicationalBase random_base(Rng& rng, const BaseShape& shape) {
  const std::size_t n = shape.elements;
  std::vector<Implication> rules;
  if (n >= 2) {
    const std::size_t count = uniform(rng, 0, shape.max_implications);
    for (std::size_t r = 0; r < count; ++r) {
      const Element b = static_cast<Element>(uniform(rng, 0, n - 1));
      std::vector<Element> others;
      for (Element e = 0; e < n; ++e) {
        if (e != b) others.push_back(e);
      }
      rules.push_back({random_premise(rng, n, others, shape.max_premise), b});
    }
  }
  return ImplicationalBase(numbered_ground(n), std::move(rules));
}

Hypergraph random_hypergraph(Rng& rng, std::size_t vertices, std::size_t max_edges, double density) {
  std::bernoulli_distribution member(density);
  SetFamily edges;
  const std::size_t count = uniform(rng, 0, max_edges);
  for (std::size_t i = 0; i < count; ++i) {
    ElementSet e(vertices);
    for (Element v = 0; v < vertices; ++v) {
      if (member(rng)) e.insert(v);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(ElementSet::full(vertices), std::move(edges));
}

}  // namespace geodual::gen
