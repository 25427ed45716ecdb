#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "geodual/element_set.hpp"
#include "geodual/ground_set.hpp"

namespace geodual {

/// A unit implication A -> b.
struct Implication {
  ElementSet premise;
  Element conclusion = 0;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Orders by conclusion, then lex premise.
bool canonical_less(const Implication& a, const Implication& b);

/// A ground set together with a duplicate-free list of unit implications.
///
/// Construction rejects empty premises and self-loops (b in A) with
/// InputError, and drops repeated implications, recording one warning per
/// drop. After construction the base is immutable; per-element indexes used
/// by forward chaining are built once here.
class ImplicationalBase {
 public:
  ImplicationalBase() = default;
  ImplicationalBase(GroundSet ground, std::vector<Implication> implications);

  const GroundSet& ground() const noexcept { return ground_; }
  const std::vector<Implication>& implications() const noexcept { return implications_; }
  std::size_t size() const noexcept { return implications_.size(); }
  /// Largest premise size, 0 for an empty base.
  std::size_t dimension() const noexcept;
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Indices of the implications whose conclusion is b.
  const std::vector<std::size_t>& implications_into(Element b) const { return into_.at(b); }

  /// Smallest closed superset of s (forward chaining with per-implication
  /// counters of unsatisfied premise elements).
  ElementSet closure(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const;

  /// Same implications sorted by canonical_less.
  ImplicationalBase canonical() const;

  /// Equal ground sets and equal implication sets (order ignored).
  bool same_implications(const ImplicationalBase& other) const;

  std::string describe(const Implication& imp) const;

 private:
  GroundSet ground_;
  std::vector<Implication> implications_;
  std::vector<std::string> warnings_;
  std::vector<std::vector<std::size_t>> occurs_in_;  // element -> implications with it in the premise
  std::vector<std::vector<std::size_t>> into_;       // element -> implications concluding it
  std::vector<std::size_t> premise_sizes_;
};

/// Implication graph G(Sigma): an arc x -> b for each premise element x of
/// each implication A -> b.
struct DirectedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Element, Element>> arcs;  // sorted, deduplicated

  std::vector<Element> successors(Element v) const;
  std::vector<Element> predecessors(Element v) const;
};

ElementSet closure(const ImplicationalBase& base, const ElementSet& s);
bool is_closed(const ImplicationalBase& base, const ElementSet& s);
DirectedGraph implication_graph(const ImplicationalBase& base);
bool is_acyclic(const ImplicationalBase& base);
/// phi(empty) = empty and phi(x) \ {x} closed for every x.
bool is_standard(const ImplicationalBase& base);
/// Same closure system. Throws InputError if the ground sets differ.
bool equivalent(const ImplicationalBase& a, const ImplicationalBase& b);

}  // namespace geodual
