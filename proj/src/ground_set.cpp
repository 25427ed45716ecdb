#include "geodual/ground_set.hpp"

#include "geodual/errors.hpp"

namespace geodual {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxElements) {
    throw InputError("ground set has " + std::to_string(labels_.size()) + " elements; at most " +
                     std::to_string(kMaxElements) + " are supported");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty element label at position " + std::to_string(i));
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<Element>(i));
    if (!inserted) throw InputError("duplicate element label '" + labels_[i] + "'");
  }
}

std::optional<Element> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element GroundSet::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw InputError("unknown element '" + std::string(label) + "'");
}

ElementSet GroundSet::set_of(std::initializer_list<std::string_view> labels) const {
  ElementSet s = empty_set();
  for (auto l : labels) s.insert(at(l));
  return s;
}

ElementSet GroundSet::set_of(const std::vector<std::string>& labels) const {
  ElementSet s = empty_set();
  for (const auto& l : labels) s.insert(at(l));
  return s;
}

std::string GroundSet::format(const ElementSet& s) const {
  require_universe(s);
  if (s.empty()) return ".";
  std::string out;
  s.for_each([&](Element e) {
    if (!out.empty()) out += ' ';
    out += labels_[e];
  });
  return out;
}

std::vector<std::string> GroundSet::label_list(const ElementSet& s) const {
  require_universe(s);
  std::vector<std::string> out;
  s.for_each([&](Element e) { out.push_back(labels_[e]); });
  return out;
}

void GroundSet::require_universe(const ElementSet& s) const {
  if (s.universe() != size()) {
    throw InputError("universe mismatch: set over " + std::to_string(s.universe()) +
                     " elements used with a ground set of " + std::to_string(size()));
  }
}

}  // namespace geodual
