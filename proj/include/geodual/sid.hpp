#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geodual/errors.hpp"
#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"
#include "geodual/meet_family.hpp"

namespace geodual {

/// Raised when a meet family cannot come from a convex geometry: some meet
/// M has zero or several elements j with M + j closed.
class NotGeometryError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// j-up families indexed by element: result[j] holds every meet M for which
/// j is the unique element with M + j closed. Each family is lex ordered.
std::vector<SetFamily> partition_meets(const MeetFamily& m);

/// Elements of the critical minimal generators of j:
/// { a != j : some M in j_up misses a and M + {a, j} is closed }.
/// An empty j_up yields the empty set.
ElementSet pred(const MeetFamily& m, Element j, const SetFamily& j_up);

/// H_j with j removed: vertices X \ (intersection of j_up) \ {j}, one edge
/// X \ M \ {j} per M in j_up. Throws InputError if j_up is empty.
Hypergraph hyper_hj(const MeetFamily& m, Element j, const SetFamily& j_up);

/// Tr(H_j[pred(j)]), the premises of the critical implications into j, in
/// lex order. Empty when j_up is empty.
SetFamily critical_premises(const MeetFamily& m, Element j, const SetFamily& j_up,
                            const DualizationBackend& backend = default_backend());

/// Each meet is meet-irreducible in the intersection closure of the family:
/// it differs from the intersection of the members strictly above it.
bool is_meet_irreducible_family(const MeetFamily& m);

struct SidOptions {
  /// Recompute the meets of the result and compare with the input
  /// (VerificationError on mismatch).
  bool verify = false;
  /// Check is_meet_irreducible_family before running (NotGeometryError).
  bool strict = false;
  const DualizationBackend* backend = nullptr;
};

/// Calls `sink` for each critical implication A -> j as soon as the
/// transversals of H_j[pred(j)] are available, j in index order and premises
/// in lex order. Notes (elements without generators) go to `notes` if given.
void structure_identification_stream(const MeetFamily& m, const std::function<void(const Implication&)>& sink,
                                     const SidOptions& options = {}, std::vector<std::string>* notes = nullptr);

/// Critical base of the ranked convex geometry whose meets are m.
ImplicationalBase structure_identification(const MeetFamily& m, const SidOptions& options = {},
                                           std::vector<std::string>* notes = nullptr);

/// Throws VerificationError unless the meets of `base` (computed by rec_enum)
/// equal m.
void verify_meets(const ImplicationalBase& base, const MeetFamily& m);

}  // namespace geodual
