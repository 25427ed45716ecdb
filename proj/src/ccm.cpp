#include "geodual/ccm.hpp"

#include <variant>

#include "geodual/errors.hpp"

namespace geodual {

namespace {

void require_ranked_set(const RankFunction& rho, const RankedSet& b) {
  bool ok = true;
  b.members.for_each([&](Element x) { ok = ok && rho[x] == b.rank; });
  if (!ok) throw InputError("set is not ranked at rank " + std::to_string(b.rank));
}

Hypergraph hb_unchecked(const ImplicationalBase& base, const ElementSet& upper_level, const ElementSet& b) {
  SetFamily edges;
  b.for_each([&](Element x) {
    for (std::size_t i : base.implications_into(x)) edges.push_back(base.implications()[i].premise);
  });
  return Hypergraph(upper_level, std::move(edges));
}

}  // namespace

RankFunction require_rank(const ImplicationalBase& base) {
  auto result = compute_rank(base);
  if (auto* conflict = std::get_if<RankConflict>(&result)) {
    throw NotRankedError("implicational base is not ranked; " + describe(base, *conflict), *conflict);
  }
  return std::get<RankFunction>(std::move(result));
}

Hypergraph hyper_hb(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b) {
  if (!validate_rank(base, rho)) throw PreconditionError("rank function is not valid for the base");
  base.ground().require_universe(b.members);
  require_ranked_set(rho, b);
  return hb_unchecked(base, rho.level(b.rank + 1), b.members);
}

ElementSet initial_context(const RankFunction& rho, const RankedSet& b) {
  ElementSet c(rho.size());
  for (Element x = 0; x < rho.size(); ++x) {
    if (rho[x] <= b.rank && !b.members.contains(x)) c.insert(x);
  }
  return c;
}

RecEnumStream::RecEnumStream(const ImplicationalBase& base, RankFunction rho, RankedSet b, ElementSet c,
                             const DualizationBackend& backend)
    : base_(&base), backend_(&backend), rho_(std::move(rho)) {
  if (!validate_rank(base, rho_)) throw PreconditionError("rank function is not valid for the base");
  base.ground().require_universe(b.members);
  base.ground().require_universe(c);
  require_ranked_set(rho_, b);
  if (c.intersects(b.members)) throw InputError("context set intersects B");

  top_rank_ = rho_.max_rank();
  for (std::uint32_t r = 0; r <= top_rank_ + 1; ++r) levels_.push_back(rho_.level(r));
  stack_.push_back(Frame{std::move(b), std::move(c), {}, 0, false});
}

std::optional<ElementSet> RecEnumStream::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.b.rank >= top_rank_) {
      ElementSet out = std::move(top.c);
      stack_.pop_back();
      return out;
    }
    if (!top.expanded) {
      top.mis = maximal_independent_sets(hb_unchecked(*base_, levels_[top.b.rank + 1], top.b.members), *backend_)
                    .collect();
      top.expanded = true;
    }
    if (top.cursor == top.mis.size()) {
      stack_.pop_back();
      continue;
    }
    const ElementSet& s = top.mis[top.cursor++];
    const std::uint32_t rank = top.b.rank + 1;
    Frame child{RankedSet{levels_[rank] - s, rank}, top.c | s, {}, 0, false};
    stack_.push_back(std::move(child));
  }
  return std::nullopt;
}

SetFamily RecEnumStream::collect() {
  SetFamily out;
  while (auto s = next()) out.push_back(std::move(*s));
  return out;
}

RecEnumStream rec_enum(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b,
                       const ElementSet& c, const DualizationBackend& backend) {
  return RecEnumStream(base, rho, b, c, backend);
}

SetFamily maximal_avoiding(const ImplicationalBase& base, const RankFunction& rho, const RankedSet& b,
                           const DualizationBackend& backend) {
  return RecEnumStream(base, rho, b, initial_context(rho, b), backend).collect();
}

SetFamily meets_of_element(const ImplicationalBase& base, const RankFunction& rho, Element j,
                           const DualizationBackend& backend) {
  RankedSet b{base.ground().empty_set().with(j), rho[j]};
  return maximal_avoiding(base, rho, b, backend);
}

MeetIrreducibleStream::MeetIrreducibleStream(const ImplicationalBase& base, const DualizationBackend& backend)
    : base_(&base), backend_(&backend), rho_(require_rank(base)) {}

std::optional<MeetRecord> MeetIrreducibleStream::next() {
  while (true) {
    if (current_) {
      if (auto meet = current_->next()) return MeetRecord{current_element_, std::move(*meet)};
      current_.reset();
    }
    if (next_element_ >= base_->ground().size()) return std::nullopt;
    current_element_ = next_element_++;
    RankedSet b{base_->ground().empty_set().with(current_element_), rho_[current_element_]};
    current_.emplace(*base_, rho_, b, initial_context(rho_, b), *backend_);
  }
}

std::vector<MeetRecord> MeetIrreducibleStream::collect() {
  std::vector<MeetRecord> out;
  while (auto r = next()) out.push_back(std::move(*r));
  return out;
}

MeetIrreducibleStream meet_irreducibles(const ImplicationalBase& base, const DualizationBackend& backend) {
  return MeetIrreducibleStream(base, backend);
}

}  // namespace geodual
