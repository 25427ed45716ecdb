#include "geodual/critical_base.hpp"

#include <algorithm>
#include <unordered_set>
#include <variant>

#include "geodual/errors.hpp"
#include "geodual/ranking.hpp"

namespace geodual {

namespace {

void require_acyclic(const ImplicationalBase& base) {
  if (!is_acyclic(base)) throw PreconditionError("implicational base is not acyclic");
}

bool redundant_unchecked(const ImplicationalBase& base, const ElementSet& generator, Element b) {
  const ElementSet closed = base.closure(generator);
  bool found = false;
  generator.for_each([&](Element a) {
    if (!found) found = base.closure(closed.without(a).without(b)).contains(b);
  });
  return found;
}

}  // namespace

bool is_minimal_generator(const ImplicationalBase& base, const MinimalGenerator& gen) {
  base.ground().require_universe(gen.generator);
  if (gen.target >= base.ground().size() || gen.generator.contains(gen.target)) return false;
  if (!base.closure(gen.generator).contains(gen.target)) return false;
  bool minimal = true;
  gen.generator.for_each([&](Element x) {
    minimal = minimal && !base.closure(gen.generator.without(x)).contains(gen.target);
  });
  return minimal;
}

bool is_redundant(const ImplicationalBase& base, const MinimalGenerator& gen) {
  require_acyclic(base);
  if (!is_minimal_generator(base, gen)) throw InputError("not a minimal generator of its target");
  return redundant_unchecked(base, gen.generator, gen.target);
}

SetFamily minimal_generators_within(const ImplicationalBase& base, const ElementSet& within, Element b) {
  SetFamily found;
  if (within.contains(b) || !base.closure(within).contains(b)) return found;

  std::unordered_set<ElementSet, ElementSetHash> visited;
  std::vector<ElementSet> pending{within};
  visited.insert(within);
  while (!pending.empty()) {
    ElementSet current = std::move(pending.back());
    pending.pop_back();
    bool minimal = true;
    const auto members = current.elements();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      ElementSet smaller = current.without(*it);
      if (!base.closure(smaller).contains(b)) continue;
      minimal = false;
      if (visited.insert(smaller).second) pending.push_back(std::move(smaller));
    }
    if (minimal) found.push_back(std::move(current));
  }
  normalize_family(found);
  return found;
}

ImplicationalBase critical_base(const ImplicationalBase& base) {
  require_acyclic(base);
  std::vector<Implication> critical;
  for (const auto& imp : base.implications()) {
    for (auto& gen : minimal_generators_within(base, imp.premise, imp.conclusion)) {
      if (!redundant_unchecked(base, gen, imp.conclusion)) critical.push_back({std::move(gen), imp.conclusion});
    }
  }
  std::sort(critical.begin(), critical.end(), canonical_less);
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  return ImplicationalBase(base.ground(), std::move(critical));
}

bool is_ranked_geometry(const ImplicationalBase& base) {
  return std::holds_alternative<RankFunction>(compute_rank(critical_base(base)));
}

}  // namespace geodual
