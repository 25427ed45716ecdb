#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodual/implicational_base.hpp"
#include "geodual/meet_family.hpp"

namespace geodual {

/// Pairwise incomparable closed sets of a base. Validated at construction
/// (InputError on a non-closed or comparable member); stored lex ordered.
class Antichain {
 public:
  Antichain(const ImplicationalBase& base, SetFamily sets);

  const SetFamily& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

 private:
  SetFamily sets_;
};

/// B+ = Max{ F closed : no A in B- is contained in F }, decided by brute force
/// over every closed set.
bool check_dual(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus);

/// The partition form: down(B+) and up(B-) are disjoint and cover every
/// closed set. Equivalent to check_dual; kept as the second route.
bool check_dual_partition(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus);

struct ReducedInstance {
  ImplicationalBase omega;  // base on X + {z}, with A -> z for each A in B-
  MeetFamily meets;         // { M + z : M a meet of the base } + B+
  Element z = 0;
  std::vector<std::string> warnings;
};

/// Builds the membership instance whose answer equals the duality answer.
/// The base must have unit premises (PreconditionError) and B- must not
/// contain the empty set (PreconditionError). The fresh element is labelled
/// "z", primed until unique. `meets` defaults to the brute-force meets.
ReducedInstance reduce_dual_to_cmi(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus,
                                   const std::optional<MeetFamily>& meets = std::nullopt);

/// Whether m is exactly the meet-irreducible family of the base. Ranked
/// bases go through rec_enum; others through the brute-force oracle.
bool cmi_check(const ImplicationalBase& base, const MeetFamily& m);

}  // namespace geodual
