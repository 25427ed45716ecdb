#pragma once

#include <cstddef>

#include "geodual/element_set.hpp"
#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"

// Exhaustive reference implementations. They share nothing with the
// forward-chaining closure or the dualization backends: closed sets are
// found by filtering every subset through the implications, and closures
// are taken inside the resulting lattice.
namespace geodual::oracle {

inline constexpr std::size_t kMaxGroundSize = 20;
inline constexpr std::size_t kMaxHypergraphVertices = 16;

/// True when GEODUAL_GUARD_OVERRIDE=1 lifts the size guards. Exceeding a
/// guard throws PreconditionError.
bool guards_overridden();

/// Every closed set, lex ordered. Guarded by kMaxGroundSize.
SetFamily all_closed_sets(const ImplicationalBase& base);

/// Closed sets other than X with exactly one upper cover.
SetFamily meets_brute(const ImplicationalBase& base);

/// { phi(j) : j in X }, lex ordered. Throws PreconditionError if these are
/// not pairwise distinct or differ from the closed sets with a unique lower
/// cover (both hold exactly for standard bases).
SetFamily joins_brute(const ImplicationalBase& base);

/// Every inclusion-minimal A with b not in A and b in phi(A).
SetFamily mingens_brute(const ImplicationalBase& base, Element b);

/// Max{ C closed : C & B = empty }.
SetFamily maximal_avoiding_brute(const ImplicationalBase& base, const ElementSet& b);

/// Every inclusion-minimal transversal. Guarded by kMaxHypergraphVertices.
SetFamily transversals_brute(const Hypergraph& h);

}  // namespace geodual::oracle
