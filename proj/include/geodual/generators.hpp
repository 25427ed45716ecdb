#pragma once

#include <cstddef>
#include <random>

#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"

// Random instances for property tests and the CLI generator. Elements are
// labelled "1".."n".
namespace geodual::gen {

using Rng = std::mt19937_64;

struct BaseShape {
  std::size_t elements = 8;
  std::size_t max_implications = 12;
  std::size_t max_premise = 3;
  std::size_t max_rank = 4;  // ranked bases only
};

GroundSet numbered_ground(std::size_t n);

/// Elements are spread over rank levels 0..k; every implication has its
/// conclusion on some level i and its premise inside level i + 1.
ImplicationalBase random_ranked_base(Rng& rng, const BaseShape& shape);

/// Premises drawn from the elements preceding the conclusion in a random
/// topological order.
ImplicationalBase random_acyclic_base(Rng& rng, const BaseShape& shape);

/// Acyclic with single-element premises (distributive closure lattice).
ImplicationalBase random_distributive_base(Rng& rng, const BaseShape& shape);

/// Unconstrained: may be cyclic and non-standard.
ImplicationalBase random_base(Rng& rng, const BaseShape& shape);

/// Each vertex joins each edge with probability `density`.
Hypergraph random_hypergraph(Rng& rng, std::size_t vertices, std::size_t max_edges, double density = 0.35);

}  // namespace geodual::gen
