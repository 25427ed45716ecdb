#include "geodual/implicational_base.hpp"

#include <algorithm>
#include <unordered_set>

#include "geodual/errors.hpp"

namespace geodual {

namespace {

struct ImplicationHash {
  std::size_t operator()(const Implication& imp) const noexcept {
    return imp.premise.hash() * 31 + imp.conclusion;
  }
};

}  // namespace

bool canonical_less(const Implication& a, const Implication& b) {
  if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
  return lex_less(a.premise, b.premise);
}

ImplicationalBase::ImplicationalBase(GroundSet ground, std::vector<Implication> implications)
    : ground_(std::move(ground)) {
  const std::size_t n = ground_.size();
  std::unordered_set<Implication, ImplicationHash> seen;
  implications_.reserve(implications.size());
  for (auto& imp : implications) {
    ground_.require_universe(imp.premise);
    if (imp.conclusion >= n) throw InputError("implication conclusion outside the ground set");
    if (imp.premise.empty()) {
      throw InputError("implication with empty premise -> " + ground_.label(imp.conclusion) +
                       " violates standardness");
    }
    if (imp.premise.contains(imp.conclusion)) {
      throw InputError("implication " + describe(imp) + " has its conclusion in its premise");
    }
    if (!seen.insert(imp).second) {
      warnings_.push_back("duplicate implication " + describe(imp) + " dropped");
      continue;
    }
    implications_.push_back(std::move(imp));
  }

  occurs_in_.assign(n, {});
  into_.assign(n, {});
  premise_sizes_.reserve(implications_.size());
  for (std::size_t i = 0; i < implications_.size(); ++i) {
    const auto& imp = implications_[i];
    imp.premise.for_each([&](Element x) { occurs_in_[x].push_back(i); });
    into_[imp.conclusion].push_back(i);
    premise_sizes_.push_back(imp.premise.size());
  }
}

std::size_t ImplicationalBase::dimension() const noexcept {
  std::size_t d = 0;
  for (auto s : premise_sizes_) d = std::max(d, s);
  return d;
}

ElementSet ImplicationalBase::closure(const ElementSet& s) const {
  ground_.require_universe(s);
  ElementSet result = s;
  std::vector<std::size_t> missing = premise_sizes_;
  std::vector<Element> queue = s.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i : occurs_in_[queue[head]]) {
      if (--missing[i] != 0) continue;
      const Element b = implications_[i].conclusion;
      if (!result.contains(b)) {
        result.insert(b);
        queue.push_back(b);
      }
    }
  }
  return result;
}

bool ImplicationalBase::is_closed(const ElementSet& s) const {
  ground_.require_universe(s);
  return std::none_of(implications_.begin(), implications_.end(), [&](const Implication& imp) {
    return !s.contains(imp.conclusion) && imp.premise.is_subset_of(s);
  });
}

ImplicationalBase ImplicationalBase::canonical() const {
  auto imps = implications_;
  std::sort(imps.begin(), imps.end(), canonical_less);
  return ImplicationalBase(ground_, std::move(imps));
}

bool ImplicationalBase::same_implications(const ImplicationalBase& other) const {
  if (!(ground_ == other.ground_)) return false;
  return canonical().implications_ == other.canonical().implications_;
}

std::string ImplicationalBase::describe(const Implication& imp) const {
  std::string out;
  imp.premise.for_each([&](Element e) {
    out += ground_.label(e);
    out += ' ';
  });
  out += "-> ";
  out += imp.conclusion < ground_.size() ? ground_.label(imp.conclusion) : "?";
  return out;
}

std::vector<Element> DirectedGraph::successors(Element v) const {
  std::vector<Element> out;
  for (auto [from, to] : arcs) {
    if (from == v) out.push_back(to);
  }
  return out;
}

std::vector<Element> DirectedGraph::predecessors(Element v) const {
  std::vector<Element> out;
  for (auto [from, to] : arcs) {
    if (to == v) out.push_back(from);
  }
  return out;
}

ElementSet closure(const ImplicationalBase& base, const ElementSet& s) { return base.closure(s); }

bool is_closed(const ImplicationalBase& base, const ElementSet& s) { return base.is_closed(s); }

DirectedGraph implication_graph(const ImplicationalBase& base) {
  DirectedGraph g;
  g.vertex_count = base.ground().size();
  for (const auto& imp : base.implications()) {
    imp.premise.for_each([&](Element x) { g.arcs.emplace_back(x, imp.conclusion); });
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

bool is_acyclic(const ImplicationalBase& base) {
  const auto g = implication_graph(base);
  std::vector<std::vector<Element>> out(g.vertex_count);
  std::vector<std::size_t> indegree(g.vertex_count, 0);
  for (auto [from, to] : g.arcs) {
    out[from].push_back(to);
    ++indegree[to];
  }
  std::vector<Element> ready;
  for (Element v = 0; v < g.vertex_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Element v = ready.back();
    ready.pop_back();
    ++removed;
    for (Element w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == g.vertex_count;
}

bool is_standard(const ImplicationalBase& base) {
  const auto& ground = base.ground();
  if (!base.closure(ground.empty_set()).empty()) return false;
  for (Element x = 0; x < ground.size(); ++x) {
    ElementSet single = ground.empty_set();
    single.insert(x);
    if (!base.is_closed(base.closure(single).without(x))) return false;
  }
  return true;
}

bool equivalent(const ImplicationalBase& a, const ImplicationalBase& b) {
  if (!(a.ground() == b.ground())) throw InputError("equivalence test over different ground sets");
  auto entails = [](const ImplicationalBase& from, const ImplicationalBase& to) {
    return std::all_of(to.implications().begin(), to.implications().end(), [&](const Implication& imp) {
      return from.closure(imp.premise).contains(imp.conclusion);
    });
  };
  return entails(b, a) && entails(a, b);
}

}  // namespace geodual
