#include "geodual/ranking.hpp"

#include <algorithm>
#include <limits>

#include "geodual/errors.hpp"

namespace geodual {

std::uint32_t RankFunction::max_rank() const noexcept {
  std::uint32_t k = 0;
  for (auto r : ranks_) k = std::max(k, r);
  return k;
}

ElementSet RankFunction::level(std::uint32_t rank) const {
  ElementSet s(ranks_.size());
  for (std::size_t e = 0; e < ranks_.size(); ++e) {
    if (ranks_[e] == rank) s.insert(static_cast<Element>(e));
  }
  return s;
}

namespace {

struct Arc {
  Element other;
  std::int64_t delta;  // rank(other) - rank(self)
  std::size_t implication;
};

}  // namespace

RankResult compute_rank(const ImplicationalBase& base) {
  const std::size_t n = base.ground().size();
  const auto& imps = base.implications();

  std::vector<std::vector<Arc>> adjacent(n);
  for (std::size_t i = 0; i < imps.size(); ++i) {
    const Element b = imps[i].conclusion;
    imps[i].premise.for_each([&](Element a) {
      adjacent[a].push_back({b, -1, i});
      adjacent[b].push_back({a, +1, i});
    });
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::optional<std::int64_t>> rank(n);
  std::vector<std::size_t> fixed_by(n, kNone);
  std::vector<Element> fixed_from(n, 0);
  std::vector<std::uint32_t> result(n, 0);

  for (Element seed = 0; seed < n; ++seed) {
    if (rank[seed]) continue;
    rank[seed] = static_cast<std::int64_t>(n);
    std::vector<Element> component{seed};
    for (std::size_t head = 0; head < component.size(); ++head) {
      const Element x = component[head];
      for (const auto& arc : adjacent[x]) {
        const std::int64_t wanted = *rank[x] + arc.delta;
        if (!rank[arc.other]) {
          rank[arc.other] = wanted;
          fixed_by[arc.other] = arc.implication;
          fixed_from[arc.other] = x;
          component.push_back(arc.other);
        } else if (*rank[arc.other] != wanted) {
          RankConflict conflict{arc.other, *rank[arc.other], wanted, std::nullopt, imps[arc.implication], std::nullopt, x};
          if (fixed_by[arc.other] != kNone) {
            conflict.first_witness = imps[fixed_by[arc.other]];
            conflict.first_source = fixed_from[arc.other];
          }
          return conflict;
        }
      }
    }
    std::int64_t low = *rank[seed];
    for (Element e : component) low = std::min(low, *rank[e]);
    for (Element e : component) result[e] = static_cast<std::uint32_t>(*rank[e] - low);
  }
  return RankFunction(std::move(result));
}

bool validate_rank(const ImplicationalBase& base, const RankFunction& rho) {
  if (rho.size() != base.ground().size()) return false;
  return std::all_of(base.implications().begin(), base.implications().end(), [&](const Implication& imp) {
    bool ok = true;
    imp.premise.for_each([&](Element a) { ok = ok && rho[a] == rho[imp.conclusion] + 1; });
    return ok;
  });
}

std::string describe(const ImplicationalBase& base, const RankConflict& conflict) {
  const auto& ground = base.ground();
  std::string out = "element " + ground.label(conflict.element) + " needs rank " + std::to_string(conflict.first_rank) +
                    " and rank " + std::to_string(conflict.second_rank) + "\n";
  if (conflict.first_witness) {
    out += "  from " + ground.label(*conflict.first_source) + " via " + base.describe(*conflict.first_witness) + "\n";
  } else {
    out += "  as the seed of its component\n";
  }
  out += "  from " + ground.label(conflict.second_source) + " via " + base.describe(conflict.second_witness) + "\n";
  return out;
}

bool check_unranked_certificate(const MeetFamily& meets, const UnrankedCertificate& cert) {
  const auto& ground = meets.ground();
  if (cert.implications.empty() || cert.implications.size() > ground.size()) return false;

  for (const auto& imp : cert.implications) {
    ground.require_universe(imp.premise);
    if (imp.conclusion >= ground.size()) throw InputError("certificate conclusion outside the ground set");
    const Element b = imp.conclusion;
    const ElementSet& premise = imp.premise;
    if (premise.empty() || premise.contains(b)) return false;

    const ElementSet closed = meets.closure(premise);
    if (!closed.contains(b)) return false;

    bool minimal = true;
    premise.for_each([&](Element a) { minimal = minimal && !meets.closure(premise.without(a)).contains(b); });
    if (!minimal) return false;

    bool redundant = false;
    premise.for_each([&](Element a) {
      ElementSet rest = closed.without(a).without(b);
      redundant = redundant || meets.closure(rest).contains(b);
    });
    if (redundant) return false;
  }

  ImplicationalBase claimed(ground, cert.implications);
  return std::holds_alternative<RankConflict>(compute_rank(claimed));
}

}  // namespace geodual
