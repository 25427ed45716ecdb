#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

namespace geodual {

/// Position of an element inside its ground set, 0..n-1.
using Element = std::uint32_t;

/// Largest ground set an ElementSet can index.
inline constexpr std::size_t kMaxElements = 4096;

/// A subset of {0..n-1} stored as a packed bit vector. The universe size n is
/// fixed at construction; binary operations require equal universes and throw
/// InputError otherwise.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> members);

  static ElementSet full(std::size_t universe);
  template <typename Range>
  static ElementSet from_range(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto e : members) s.insert(static_cast<Element>(e));
    return s;
  }
  /// Only valid for universes of at most 64 elements.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U);
  }
  void insert(Element e);
  void erase(Element e);
  ElementSet with(Element e) const;
  ElementSet without(Element e) const;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const ElementSet& other) const;
  bool is_proper_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const;

  /// Members in increasing order.
  std::vector<Element> elements() const;
  std::optional<Element> first() const noexcept;
  /// Smallest member strictly greater than e.
  std::optional<Element> next_after(Element e) const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Element>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// Raw storage word i (bits 64i..64i+63).
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }
  std::size_t word_count() const noexcept { return words_.size(); }

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void require_same_universe(const ElementSet& other) const;
  void require_member(Element e) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the increasing member sequences:
/// {1,2} < {1,2,3} < {1,3} < {2}. The empty set is the smallest.
bool lex_less(const ElementSet& a, const ElementSet& b);

struct LexLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return lex_less(a, b); }
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

using SetFamily = std::vector<ElementSet>;

/// Sorts a family in lex order and drops duplicates.
void normalize_family(SetFamily& family);
SetFamily normalized(SetFamily family);

/// Inclusion-minimal / inclusion-maximal members of a family, lex ordered.
SetFamily minimal_sets(SetFamily family);
SetFamily maximal_sets(SetFamily family);

}  // namespace geodual
