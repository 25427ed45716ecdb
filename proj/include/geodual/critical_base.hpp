#pragma once

#include "geodual/implicational_base.hpp"

namespace geodual {

/// A is a minimal generator of b: b not in A, b in phi(A), and b not in
/// phi(A \ {x}) for any x in A.
struct MinimalGenerator {
  ElementSet generator;
  Element target = 0;
};

bool is_minimal_generator(const ImplicationalBase& base, const MinimalGenerator& gen);

/// A minimal generator A of b is redundant iff some a in A has
/// b in phi(phi(A) \ {a, b}). Requires an acyclic base (PreconditionError)
/// and a genuine minimal generator (InputError).
bool is_redundant(const ImplicationalBase& base, const MinimalGenerator& gen);

/// All minimal generators of b contained in `within`, lex ordered. Explores
/// generating subsets top-down, removing elements in decreasing index order;
/// non-generating sets are never expanded.
SetFamily minimal_generators_within(const ImplicationalBase& base, const ElementSet& within, Element b);

/// The unique irredundant base of critical minimal generators of an acyclic
/// closure space, sorted by conclusion then lex premise. Every critical
/// generator of b sits inside the premise of some C -> b of the input, so
/// only those premises are searched.
ImplicationalBase critical_base(const ImplicationalBase& base);

/// Whether the critical base admits a rank function.
bool is_ranked_geometry(const ImplicationalBase& base);

}  // namespace geodual
