#include "geodual/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geodual/errors.hpp"

namespace geodual::oracle {

namespace {

// Hard ceiling even with the override: masks are 32-bit and the closure
// table has 2^n entries.
constexpr std::size_t kAbsoluteLimit = 32;

using Mask = std::uint32_t;

void guard(std::size_t n, std::size_t limit, std::string_view what) {
  if (n > kAbsoluteLimit || (n > limit && !guards_overridden())) {
    throw PreconditionError(std::string(what) + ": size " + std::to_string(n) + " exceeds the oracle guard of " +
                            std::to_string(limit) + " (set GEODUAL_GUARD_OVERRIDE=1 to lift)");
  }
}

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  s.for_each([&](Element e) { m |= Mask{1} << e; });
  return m;
}

struct MaskedBase {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<std::pair<Mask, Mask>> rules;  // premise, conclusion bit

  explicit MaskedBase(const ImplicationalBase& base) : n(base.ground().size()) {
    guard(n, kMaxGroundSize, "closed-set enumeration");
    full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    for (const auto& imp : base.implications()) rules.emplace_back(to_mask(imp.premise), Mask{1} << imp.conclusion);
  }

  bool closed(Mask s) const {
    return std::all_of(rules.begin(), rules.end(),
                       [&](const auto& r) { return (r.first & ~s) != 0 || (r.second & s) != 0; });
  }

  std::uint64_t subset_count() const { return std::uint64_t{1} << n; }

  // hull[S] = intersection of the closed supersets of S. Filled from the
  // top: a non-closed S has every closed superset above some S + x.
  std::vector<Mask> hull_table() const {
    const std::uint64_t count = subset_count();
    std::vector<Mask> hull(count);
    for (std::uint64_t i = count; i-- > 0;) {
      const Mask s = static_cast<Mask>(i);
      if (closed(s)) {
        hull[i] = s;
        continue;
      }
      Mask h = full;
      for (std::size_t x = 0; x < n; ++x) {
        const Mask bit = Mask{1} << x;
        if ((s & bit) == 0) h &= hull[s | bit];
      }
      hull[i] = h;
    }
    return hull;
  }

  std::vector<Mask> closed_sets() const {
    std::vector<Mask> out;
    for (std::uint64_t i = 0; i < subset_count(); ++i) {
      if (closed(static_cast<Mask>(i))) out.push_back(static_cast<Mask>(i));
    }
    return out;
  }
};

bool proper_subset(Mask a, Mask b) { return a != b && (a & ~b) == 0; }

SetFamily to_family(std::size_t n, const std::vector<Mask>& masks) {
  SetFamily out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(ElementSet::from_mask(n, m));
  normalize_family(out);
  return out;
}

}  // namespace

bool guards_overridden() {
  const char* value = std::getenv("GEODUAL_GUARD_OVERRIDE");
  return value != nullptr && std::string_view(value) == "1";
}

SetFamily all_closed_sets(const ImplicationalBase& base) {
  MaskedBase mb(base);
  return to_family(mb.n, mb.closed_sets());
}

SetFamily meets_brute(const ImplicationalBase& base) {
  MaskedBase mb(base);
  const auto hull = mb.hull_table();
  std::vector<Mask> meets;
  for (Mask c : mb.closed_sets()) {
    if (c == mb.full) continue;
    // Upper covers of c are the minimal sets among hull[c + x], x not in c.
    std::vector<Mask> above;
    for (std::size_t x = 0; x < mb.n; ++x) {
      const Mask bit = Mask{1} << x;
      if ((c & bit) == 0) above.push_back(hull[c | bit]);
    }
    std::sort(above.begin(), above.end());
    above.erase(std::unique(above.begin(), above.end()), above.end());
    std::size_t covers = 0;
    for (Mask a : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](Mask b) { return proper_subset(b, a); });
      if (minimal) ++covers;
    }
    if (covers == 1) meets.push_back(c);
  }
  return to_family(mb.n, meets);
}

SetFamily joins_brute(const ImplicationalBase& base) {
  MaskedBase mb(base);
  const auto hull = mb.hull_table();

  std::vector<Mask> singletons;
  for (std::size_t j = 0; j < mb.n; ++j) singletons.push_back(hull[Mask{1} << j]);
  std::vector<Mask> distinct = singletons;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // c has a unique lower cover iff the join of its closed proper subsets
  // is itself a proper subset.
  const auto closed = mb.closed_sets();
  std::vector<Mask> irreducible;
  for (Mask c : closed) {
    if (c == 0) continue;
    Mask below = 0;
    for (Mask d : closed) {
      if (proper_subset(d, c)) below |= d;
    }
    if (hull[below] != c) irreducible.push_back(c);
  }
  std::sort(irreducible.begin(), irreducible.end());

  if (distinct.size() != singletons.size() || distinct != irreducible) {
    throw PreconditionError("standardness violation: singleton closures and join-irreducible closed sets disagree");
  }
  return to_family(mb.n, singletons);
}

SetFamily mingens_brute(const ImplicationalBase& base, Element b) {
  MaskedBase mb(base);
  if (b >= mb.n) throw InputError("element outside the ground set");
  const auto hull = mb.hull_table();
  const Mask target = Mask{1} << b;
  std::vector<Mask> gens;
  for (std::uint64_t i = 0; i < mb.subset_count(); ++i) {
    const Mask a = static_cast<Mask>(i);
    if ((a & target) != 0 || (hull[a] & target) == 0) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < mb.n && minimal; ++x) {
      const Mask bit = Mask{1} << x;
      if ((a & bit) != 0 && (hull[a & ~bit] & target) != 0) minimal = false;
    }
    if (minimal) gens.push_back(a);
  }
  return to_family(mb.n, gens);
}

SetFamily maximal_avoiding_brute(const ImplicationalBase& base, const ElementSet& b) {
  MaskedBase mb(base);
  base.ground().require_universe(b);
  const Mask avoid = to_mask(b);
  std::vector<Mask> candidates;
  for (Mask c : mb.closed_sets()) {
    if ((c & avoid) == 0) candidates.push_back(c);
  }
  std::vector<Mask> maximal;
  for (Mask c : candidates) {
    const bool top = std::none_of(candidates.begin(), candidates.end(), [&](Mask d) { return proper_subset(c, d); });
    if (top) maximal.push_back(c);
  }
  return to_family(mb.n, maximal);
}

SetFamily transversals_brute(const Hypergraph& h) {
  const auto vertices = h.vertices().elements();
  guard(vertices.size(), kMaxHypergraphVertices, "transversal enumeration");

  // Edges re-expressed over vertex positions 0..|V|-1.
  std::vector<Mask> edges;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (e.contains(vertices[i])) m |= Mask{1} << i;
    }
    edges.push_back(m);
  }
  auto hits_all = [&](Mask t) { return std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & t) != 0; }); };

  SetFamily out;
  const std::uint64_t count = std::uint64_t{1} << vertices.size();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Mask t = static_cast<Mask>(i);
    if (!hits_all(t)) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < vertices.size() && minimal; ++x) {
      const Mask bit = Mask{1} << x;
      if ((t & bit) != 0 && hits_all(t & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    ElementSet s(h.universe());
    for (std::size_t x = 0; x < vertices.size(); ++x) {
      if ((t >> x) & 1U) s.insert(vertices[x]);
    }
    out.push_back(std::move(s));
  }
  normalize_family(out);
  return out;
}

}  // namespace geodual::oracle
