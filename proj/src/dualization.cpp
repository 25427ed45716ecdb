#include "geodual/dualization.hpp"

#include <algorithm>
#include <variant>

#include "geodual/ccm.hpp"
#include "geodual/errors.hpp"
#include "geodual/oracle.hpp"
#include "geodual/ranking.hpp"

namespace geodual {

Antichain::Antichain(const ImplicationalBase& base, SetFamily sets) : sets_(std::move(sets)) {
  normalize_family(sets_);
  for (const auto& s : sets_) {
    base.ground().require_universe(s);
    if (!base.is_closed(s)) throw InputError("antichain member {" + base.ground().format(s) + "} is not closed");
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t k = 0; k < sets_.size(); ++k) {
      if (i != k && sets_[i].is_subset_of(sets_[k])) {
        throw InputError("antichain members {" + base.ground().format(sets_[i]) + "} and {" +
                         base.ground().format(sets_[k]) + "} are comparable");
      }
    }
  }
}

namespace {

bool contains_some(const ElementSet& f, const SetFamily& family) {
  return std::any_of(family.begin(), family.end(), [&](const ElementSet& a) { return a.is_subset_of(f); });
}

bool below_some(const ElementSet& f, const SetFamily& family) {
  return std::any_of(family.begin(), family.end(), [&](const ElementSet& a) { return f.is_subset_of(a); });
}

}  // namespace

bool check_dual(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus) {
  SetFamily avoiding;
  for (auto& f : oracle::all_closed_sets(base)) {
    if (!contains_some(f, minus.sets())) avoiding.push_back(std::move(f));
  }
  return maximal_sets(std::move(avoiding)) == plus.sets();
}

bool check_dual_partition(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus) {
  for (const auto& f : oracle::all_closed_sets(base)) {
    if (below_some(f, plus.sets()) == contains_some(f, minus.sets())) return false;
  }
  return true;
}

ReducedInstance reduce_dual_to_cmi(const ImplicationalBase& base, const Antichain& plus, const Antichain& minus,
                                   const std::optional<MeetFamily>& meets) {
  for (const auto& imp : base.implications()) {
    if (imp.premise.size() != 1) {
      throw PreconditionError("reduction expects unit premises; found " + base.describe(imp));
    }
  }
  if (meets && !(meets->ground() == base.ground())) throw InputError("meet family over a different ground set");

  ReducedInstance out;
  std::string label = "z";
  while (base.ground().find(label)) {
    out.warnings.push_back("label '" + label + "' already in use; trying '" + label + "'\'");
    label += '\'';
  }
  auto labels = base.ground().labels();
  labels.push_back(label);
  GroundSet extended(std::move(labels));
  const std::size_t n = extended.size();
  out.z = static_cast<Element>(n - 1);

  auto lift = [&](const ElementSet& s) {
    ElementSet lifted(n);
    s.for_each([&](Element e) { lifted.insert(e); });
    return lifted;
  };

  std::vector<Implication> rules;
  for (const auto& imp : base.implications()) rules.push_back({lift(imp.premise), imp.conclusion});
  for (const auto& a : minus.sets()) {
    if (a.empty()) throw PreconditionError("B- contains the empty set; A -> z would have an empty premise");
    rules.push_back({lift(a), out.z});
  }
  out.omega = ImplicationalBase(extended, std::move(rules));

  const SetFamily source = meets ? meets->meets() : oracle::meets_brute(base);
  SetFamily family;
  for (const auto& m : source) family.push_back(lift(m).with(out.z));
  for (const auto& b : plus.sets()) family.push_back(lift(b));
  out.meets = MeetFamily(std::move(extended), std::move(family));
  return out;
}

bool cmi_check(const ImplicationalBase& base, const MeetFamily& m) {
  if (!(m.ground() == base.ground())) throw InputError("meet family over a different ground set");
  SetFamily actual;
  if (std::holds_alternative<RankFunction>(compute_rank(base))) {
    for (auto& rec : meet_irreducibles(base).collect()) actual.push_back(std::move(rec.meet));
    normalize_family(actual);
  } else {
    actual = oracle::meets_brute(base);
  }
  return actual == m.meets();
}

}  // namespace geodual
