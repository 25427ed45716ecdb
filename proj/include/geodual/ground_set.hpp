#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "geodual/element_set.hpp"

namespace geodual {

/// The finite ground set X: n distinct, nonempty labels indexed 0..n-1.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }

  std::optional<Element> find(std::string_view label) const;
  /// Throws InputError naming the unknown label.
  Element at(std::string_view label) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet set_of(std::initializer_list<std::string_view> labels) const;
  ElementSet set_of(const std::vector<std::string>& labels) const;

  /// Space-separated labels in index order, "." for the empty set.
  std::string format(const ElementSet& s) const;
  std::vector<std::string> label_list(const ElementSet& s) const;

  /// Throws InputError if s is not a subset of this ground set.
  void require_universe(const ElementSet& s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace geodual
