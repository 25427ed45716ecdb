#pragma once

#include "geodual/element_set.hpp"
#include "geodual/ground_set.hpp"

namespace geodual {

/// A family of proper subsets of X asserted to be the meet-irreducible
/// elements of some closure system. Duplicates are dropped and the family is
/// stored lex ordered; a member equal to X is rejected with InputError.
class MeetFamily {
 public:
  MeetFamily() = default;
  MeetFamily(GroundSet ground, SetFamily meets);

  const GroundSet& ground() const noexcept { return ground_; }
  const SetFamily& meets() const noexcept { return meets_; }
  std::size_t size() const noexcept { return meets_.size(); }

  /// Intersection of X with every member containing s.
  ElementSet closure(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const { return closure(s) == s; }

 private:
  GroundSet ground_;
  SetFamily meets_;
};

ElementSet closure_from_meets(const MeetFamily& m, const ElementSet& s);

}  // namespace geodual
