#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <string_view>

#include "geodual/element_set.hpp"

namespace geodual {

/// A vertex set together with a family of edges, each a subset of the
/// vertices. The raw edge list is kept as given; reduced_edges() is the
/// deduplicated, absorption-minimal view used for dualization.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(ElementSet vertices, SetFamily edges);

  std::size_t universe() const noexcept { return vertices_.universe(); }
  const ElementSet& vertices() const noexcept { return vertices_; }
  const SetFamily& edges() const noexcept { return edges_; }
  SetFamily reduced_edges() const;
  /// Largest edge size.
  std::size_t dimension() const noexcept;

 private:
  ElementSet vertices_;
  SetFamily edges_;
};

/// Lazy single-consumer iteration over a family of sets.
///
/// Backends may materialize the family up front (Berge does); the stream
/// then hands the sets out one by one.
class SetStream {
 public:
  SetStream() = default;
  explicit SetStream(SetFamily family) : family_(std::move(family)) {}

  std::optional<ElementSet> next();
  bool done() const noexcept { return cursor_ >= family_.size(); }
  /// Remaining sets.
  SetFamily collect();

 private:
  SetFamily family_;
  std::size_t cursor_ = 0;
};

/// Minimal-transversal enumerator. Implementations must return exactly
/// Tr(h), in lex order.
class DualizationBackend {
 public:
  virtual ~DualizationBackend() = default;
  virtual std::string_view name() const noexcept = 0;
  virtual SetFamily minimal_transversals(const Hypergraph& h) const = 0;
};

/// Sequential Berge multiplication: fold the edges one at a time into the
/// current transversal family, absorbing non-minimal sets after each step.
class BergeBackend final : public DualizationBackend {
 public:
  std::string_view name() const noexcept override { return "berge"; }
  SetFamily minimal_transversals(const Hypergraph& h) const override;
};

const DualizationBackend& default_backend();

/// Tr(h); empty when some edge is empty, {empty set} when there are no edges.
SetStream minimal_transversals(const Hypergraph& h, const DualizationBackend& backend = default_backend());

/// MIS(h) = { V(h) \ T : T in Tr(h) }, lex ordered.
SetStream maximal_independent_sets(const Hypergraph& h, const DualizationBackend& backend = default_backend());

/// H[S]: vertices S, edges { E & S }. Empty intersections are kept.
/// Throws InputError if s is not a subset of V(h).
Hypergraph induced(const Hypergraph& h, const ElementSet& s);

}  // namespace geodual
