#include "geodual/meet_family.hpp"

#include "geodual/errors.hpp"

namespace geodual {

MeetFamily::MeetFamily(GroundSet ground, SetFamily meets) : ground_(std::move(ground)), meets_(std::move(meets)) {
  const ElementSet full = ground_.full_set();
  for (const auto& m : meets_) {
    ground_.require_universe(m);
    if (m == full) throw InputError("meet family contains the full ground set");
  }
  normalize_family(meets_);
}

ElementSet MeetFamily::closure(const ElementSet& s) const {
  ground_.require_universe(s);
  ElementSet result = ground_.full_set();
  for (const auto& m : meets_) {
    if (s.is_subset_of(m)) result &= m;
  }
  return result;
}

ElementSet closure_from_meets(const MeetFamily& m, const ElementSet& s) { return m.closure(s); }

}  // namespace geodual
