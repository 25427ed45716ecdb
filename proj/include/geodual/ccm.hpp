#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geodual/errors.hpp"
#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"
#include "geodual/ranking.hpp"

namespace geodual {

/// A set whose members all share one rank. The rank is stored explicitly so
/// that it stays defined when the set is empty.
struct RankedSet {
  ElementSet members;
  std::uint32_t rank = 0;
};

/// Raised when a ranked base is required but the base admits no rank.
class NotRankedError : public PreconditionError {
 public:
  NotRankedError(std::string message, RankConflict conflict)
      : PreconditionError(std::move(message)), conflict_(std::move(conflict)) {}
  const RankConflict& conflict() const noexcept { return conflict_; }

 private:
  RankConflict conflict_;
};

/// H_B: vertices are the elements of rank rho(B) + 1, edges are the premises
/// of the implications concluding some b in B (in base order).
/// Throws PreconditionError if rho is not a rank function of the base, and
/// InputError if B is not ranked at b.rank.
Hypergraph hyper_hb(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b);

/// Depth-first enumeration of the sets output by RecENUM(Sigma, B, C).
///
/// Each stack frame owns the MIS family of its H_B and a cursor into it; the
/// frame for rank k emits its C. Called with the initial C of
/// initial_context(), the stream yields exactly
/// Max{ C closed : C & B = empty }, each set once. The stream keeps a
/// reference to the base, which must outlive it.
class RecEnumStream {
 public:
  RecEnumStream(const ImplicationalBase& base, RankFunction rho, RankedSet b, ElementSet c,
                const DualizationBackend& backend = default_backend());

  std::optional<ElementSet> next();
  SetFamily collect();

 private:
  struct Frame {
    RankedSet b;
    ElementSet c;
    SetFamily mis;
    std::size_t cursor = 0;
    bool expanded = false;
  };

  const ImplicationalBase* base_;
  const DualizationBackend* backend_;
  RankFunction rho_;
  std::uint32_t top_rank_ = 0;
  std::vector<ElementSet> levels_;
  std::vector<Frame> stack_;
};

/// Starting context for rec_enum: {x : rho(x) <= rho(B), x not in B}.
ElementSet initial_context(const RankFunction& rho, const RankedSet& b);

RecEnumStream rec_enum(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b,
                       const ElementSet& c, const DualizationBackend& backend = default_backend());

/// Max{ C closed : C & B = empty } via rec_enum from the initial context.
SetFamily maximal_avoiding(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b,
                           const DualizationBackend& backend = default_backend());

struct MeetRecord {
  Element element;  // the j with meet in j-up
  ElementSet meet;
};

/// Streams every meet-irreducible closed set exactly once, grouped by the
/// unique j whose j-up family contains it, j in index order.
class MeetIrreducibleStream {
 public:
  /// Throws NotRankedError when the base admits no rank function.
  explicit MeetIrreducibleStream(const ImplicationalBase& base,
                                 const DualizationBackend& backend = default_backend());

  std::optional<MeetRecord> next();
  std::vector<MeetRecord> collect();
  const RankFunction& rank() const noexcept { return rho_; }

 private:
  const ImplicationalBase* base_;
  const DualizationBackend* backend_;
  RankFunction rho_;
  Element next_element_ = 0;
  std::optional<RecEnumStream> current_;
  Element current_element_ = 0;
};

MeetIrreducibleStream meet_irreducibles(const ImplicationalBase& base,
                                        const DualizationBackend& backend = default_backend());

/// Meets of one j: Max{ C closed : j not in C }.
SetFamily meets_of_element(const ImplicationalBase& base, const RankFunction& rho, Element j,
                           const DualizationBackend& backend = default_backend());

/// Rank function of a ranked base, or NotRankedError.
RankFunction require_rank(const ImplicationalBase& base);

}  // namespace geodual
