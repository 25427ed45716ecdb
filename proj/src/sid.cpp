#include "geodual/sid.hpp"

#include "geodual/ccm.hpp"
#include "geodual/errors.hpp"

namespace geodual {

std::vector<SetFamily> partition_meets(const MeetFamily& m) {
  const auto& ground = m.ground();
  std::vector<SetFamily> parts(ground.size());
  for (const auto& meet : m.meets()) {
    std::vector<Element> candidates;
    meet.complement().for_each([&](Element j) {
      if (m.is_closed(meet.with(j))) candidates.push_back(j);
    });
    if (candidates.size() != 1) {
      throw NotGeometryError("not a convex-geometry meet family: meet {" + ground.format(meet) + "} has " +
                             std::to_string(candidates.size()) + " elements j with M + j closed");
    }
    parts[candidates.front()].push_back(meet);
  }
  for (auto& p : parts) normalize_family(p);
  return parts;
}

ElementSet pred(const MeetFamily& m, Element j, const SetFamily& j_up) {
  ElementSet result = m.ground().empty_set();
  for (const auto& meet : j_up) {
    const ElementSet with_j = meet.with(j);
    meet.complement().for_each([&](Element a) {
      if (a == j || result.contains(a)) return;
      if (m.is_closed(with_j.with(a))) result.insert(a);
    });
  }
  return result;
}

Hypergraph hyper_hj(const MeetFamily& m, Element j, const SetFamily& j_up) {
  if (j_up.empty()) throw InputError("H_j needs a nonempty j-up family for " + m.ground().label(j));
  const ElementSet full = m.ground().full_set();
  ElementSet common = full;
  SetFamily edges;
  for (const auto& meet : j_up) {
    common &= meet;
    edges.push_back((full - meet).without(j));
  }
  ElementSet vertices = (full - common);
  if (vertices.contains(j)) vertices.erase(j);
  return Hypergraph(std::move(vertices), std::move(edges));
}

bool is_meet_irreducible_family(const MeetFamily& m) {
  const ElementSet full = m.ground().full_set();
  for (const auto& meet : m.meets()) {
    ElementSet above = full;
    for (const auto& other : m.meets()) {
      if (meet.is_proper_subset_of(other)) above &= other;
    }
    if (above == meet) return false;
  }
  return true;
}

SetFamily critical_premises(const MeetFamily& m, Element j, const SetFamily& j_up,
                            const DualizationBackend& backend) {
  if (j_up.empty()) return {};
  const Hypergraph restricted = induced(hyper_hj(m, j, j_up), pred(m, j, j_up));
  return minimal_transversals(restricted, backend).collect();
}

void verify_meets(const ImplicationalBase& base, const MeetFamily& m) {
  SetFamily recomputed;
  try {
    for (auto& rec : meet_irreducibles(base).collect()) recomputed.push_back(std::move(rec.meet));
  } catch (const NotRankedError& e) {
    throw VerificationError(std::string("identified base is not ranked: ") + e.what());
  }
  normalize_family(recomputed);
  if (recomputed != m.meets()) {
    throw VerificationError("meets of the identified base differ from the input (" + std::to_string(recomputed.size()) +
                            " vs " + std::to_string(m.size()) + " sets)");
  }
}

void structure_identification_stream(const MeetFamily& m, const std::function<void(const Implication&)>& sink,
                                     const SidOptions& options, std::vector<std::string>* notes) {
  if (options.strict && !is_meet_irreducible_family(m)) {
    throw NotGeometryError("input family contains a set that is not meet-irreducible in its intersection closure");
  }
  const DualizationBackend& backend = options.backend ? *options.backend : default_backend();
  const auto& ground = m.ground();
  const auto parts = partition_meets(m);

  std::vector<Implication> produced;
  for (Element j = 0; j < ground.size(); ++j) {
    if (parts[j].empty()) {
      if (notes) notes->push_back("element " + ground.label(j) + " has no meet in its j-up family; no implications");
      continue;
    }
    for (auto& premise : critical_premises(m, j, parts[j], backend)) {
      Implication imp{std::move(premise), j};
      sink(imp);
      if (options.verify) produced.push_back(std::move(imp));
    }
  }
  if (options.verify) verify_meets(ImplicationalBase(ground, std::move(produced)), m);
}

ImplicationalBase structure_identification(const MeetFamily& m, const SidOptions& options,
                                           std::vector<std::string>* notes) {
  std::vector<Implication> implications;
  SidOptions inner = options;
  inner.verify = false;
  structure_identification_stream(
      m, [&](const Implication& imp) { implications.push_back(imp); }, inner, notes);
  ImplicationalBase result(m.ground(), std::move(implications));
  if (options.verify) verify_meets(result, m);
  return result;
}

}  // namespace geodual
