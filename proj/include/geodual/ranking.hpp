#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geodual/implicational_base.hpp"
#include "geodual/meet_family.hpp"

namespace geodual {

/// Element -> natural number rank. A rank function of a base satisfies
/// rho(a) = rho(b) + 1 for every premise element a of every A -> b.
class RankFunction {
 public:
  RankFunction() = default;
  explicit RankFunction(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {}

  std::uint32_t operator[](Element e) const { return ranks_.at(e); }
  std::size_t size() const noexcept { return ranks_.size(); }
  const std::vector<std::uint32_t>& ranks() const noexcept { return ranks_; }
  std::uint32_t max_rank() const noexcept;

  /// Elements of the given rank.
  ElementSet level(std::uint32_t rank) const;

  friend bool operator==(const RankFunction&, const RankFunction&) = default;

 private:
  std::vector<std::uint32_t> ranks_;
};

/// Two propagation paths forced different ranks on `element`.
///
/// Ranks are on the propagation scale (component seed = n). The first
/// witness is the implication that last fixed the element's rank; it is
/// empty when the element is the component seed. The second witness is the
/// implication whose propagation contradicted it.
struct RankConflict {
  Element element = 0;
  std::int64_t first_rank = 0;
  std::int64_t second_rank = 0;
  std::optional<Implication> first_witness;
  Implication second_witness;
  // Elements the two ranks were propagated from.
  std::optional<Element> first_source;
  Element second_source = 0;
};

using RankResult = std::variant<RankFunction, RankConflict>;

/// Component-wise BFS propagation over G(Sigma), seeding each component with
/// rank n and shifting it afterwards so that its minimum rank is 0.
RankResult compute_rank(const ImplicationalBase& base);

bool validate_rank(const ImplicationalBase& base, const RankFunction& rho);

std::string describe(const ImplicationalBase& base, const RankConflict& conflict);

/// Critical implications claimed to admit no rank function.
struct UnrankedCertificate {
  std::vector<Implication> implications;
};

/// Checks each implication is valid, a minimal generator and critical in the
/// closure system given by the meets, that there are at most |X| of them,
/// and that together they admit no rank function.
bool check_unranked_certificate(const MeetFamily& meets, const UnrankedCertificate& cert);

}  // namespace geodual
