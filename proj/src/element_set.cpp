#include "geodual/element_set.hpp"

#include <algorithm>
#include <string>

#include "geodual/errors.hpp"

namespace geodual {

namespace {

std::size_t words_for(std::size_t universe) { return (universe + 63) / 64; }

std::uint64_t tail_mask(std::size_t universe) {
  const std::size_t r = universe & 63;
  return r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
}

// True iff some bit strictly above position p is set.
bool has_member_above(const ElementSet& s, std::size_t p) {
  const std::size_t w = p >> 6;
  const std::size_t b = p & 63;
  if (b < 63 && (s.word(w) >> (b + 1)) != 0) return true;
  for (std::size_t i = w + 1; i < s.word_count(); ++i) {
    if (s.word(i) != 0) return true;
  }
  return false;
}

}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe > kMaxElements) {
    throw InputError("ground set of " + std::to_string(universe) + " elements exceeds the supported " +
                     std::to_string(kMaxElements));
  }
}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members) : ElementSet(universe) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw InputError("from_mask requires a universe of at most 64 elements");
  ElementSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask & tail_mask(universe);
  return s;
}

void ElementSet::require_member(Element e) const {
  if (e >= universe_) {
    throw InputError("element " + std::to_string(e) + " outside universe of size " + std::to_string(universe_));
  }
}

void ElementSet::require_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("universe mismatch: " + std::to_string(universe_) + " vs " + std::to_string(other.universe_));
  }
}

void ElementSet::insert(Element e) {
  require_member(e);
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void ElementSet::erase(Element e) {
  require_member(e);
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

ElementSet ElementSet::with(Element e) const {
  ElementSet s = *this;
  s.insert(e);
  return s;
}

ElementSet ElementSet::without(Element e) const {
  ElementSet s = *this;
  s.erase(e);
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::is_proper_subset_of(const ElementSet& other) const {
  return is_subset_of(other) && words_ != other.words_;
}

bool ElementSet::intersects(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet s = full(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::optional<Element> ElementSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::optional<Element> ElementSet::next_after(Element e) const noexcept {
  std::size_t p = static_cast<std::size_t>(e) + 1;
  if (p >= universe_) return std::nullopt;
  std::size_t w = p >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (p & 63));
  while (true) {
    if (bits != 0) return static_cast<Element>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    const std::uint64_t diff = a.word(w) ^ b.word(w);
    if (diff == 0) continue;
    // Both sequences agree below p; exactly one of them contains p.
    const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    if (a.contains(static_cast<Element>(p))) return has_member_above(b, p);
    return !has_member_above(a, p);
  }
  return false;
}

void normalize_family(SetFamily& family) {
  std::sort(family.begin(), family.end(), LexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

SetFamily normalized(SetFamily family) {
  normalize_family(family);
  return family;
}

SetFamily minimal_sets(SetFamily family) {
  std::sort(family.begin(), family.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  SetFamily kept;
  for (auto& s : family) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const ElementSet& k) { return k.is_subset_of(s); });
    if (!absorbed) kept.push_back(std::move(s));
  }
  normalize_family(kept);
  return kept;
}

SetFamily maximal_sets(SetFamily family) {
  std::sort(family.begin(), family.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.size() > b.size(); });
  SetFamily kept;
  for (auto& s : family) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const ElementSet& k) { return s.is_subset_of(k); });
    if (!absorbed) kept.push_back(std::move(s));
  }
  normalize_family(kept);
  return kept;
}

}  // namespace geodual
