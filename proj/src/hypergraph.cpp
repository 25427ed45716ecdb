#include "geodual/hypergraph.hpp"

#include <algorithm>

#include "geodual/errors.hpp"

namespace geodual {

Hypergraph::Hypergraph(ElementSet vertices, SetFamily edges) : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.universe() != vertices_.universe()) throw InputError("hyperedge over a different universe");
    if (!e.is_subset_of(vertices_)) throw InputError("hyperedge is not contained in the vertex set");
  }
}

SetFamily Hypergraph::reduced_edges() const { return minimal_sets(edges_); }

std::size_t Hypergraph::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& e : edges_) d = std::max(d, e.size());
  return d;
}

std::optional<ElementSet> SetStream::next() {
  if (done()) return std::nullopt;
  return std::move(family_[cursor_++]);
}

SetFamily SetStream::collect() {
  SetFamily out;
  while (auto s = next()) out.push_back(std::move(*s));
  return out;
}

SetFamily BergeBackend::minimal_transversals(const Hypergraph& h) const {
  SetFamily edges = h.reduced_edges();
  // Smaller edges first keeps the intermediate families small.
  std::stable_sort(edges.begin(), edges.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });

  SetFamily current{ElementSet(h.universe())};
  for (const auto& edge : edges) {
    if (edge.empty()) return {};
    SetFamily hit;
    SetFamily extended;
    for (auto& t : current) {
      if (t.intersects(edge)) {
        hit.push_back(std::move(t));
      } else {
        edge.for_each([&](Element v) { extended.push_back(t.with(v)); });
      }
    }
    SetFamily next = std::move(hit);
    for (auto& cand : extended) next.push_back(std::move(cand));
    current = minimal_sets(std::move(next));
  }
  normalize_family(current);
  return current;
}

const DualizationBackend& default_backend() {
  static const BergeBackend backend;
  return backend;
}

SetStream minimal_transversals(const Hypergraph& h, const DualizationBackend& backend) {
  return SetStream(backend.minimal_transversals(h));
}

SetStream maximal_independent_sets(const Hypergraph& h, const DualizationBackend& backend) {
  SetFamily mis;
  for (const auto& t : backend.minimal_transversals(h)) mis.push_back(h.vertices() - t);
  normalize_family(mis);
  return SetStream(std::move(mis));
}

Hypergraph induced(const Hypergraph& h, const ElementSet& s) {
  if (s.universe() != h.universe() || !s.is_subset_of(h.vertices())) {
    throw InputError("induced subhypergraph requires a subset of the vertex set");
  }
  SetFamily edges;
  edges.reserve(h.edges().size());
  for (const auto& e : h.edges()) edges.push_back(e & s);
  return Hypergraph(s, std::move(edges));
}

}  // namespace geodual
