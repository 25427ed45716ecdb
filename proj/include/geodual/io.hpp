#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "geodual/hypergraph.hpp"
#include "geodual/implicational_base.hpp"
#include "geodual/meet_family.hpp"

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace; the first significant line is a header naming the ground set.
//
//   .imp   elements: a b c        .mf   elements: a b c     .hg   vertices: a b c
//          a b -> c                     a b                       a b
//          c -> a                       .                         b c
//
// In .mf and .hg files a lone "." is the empty set. Errors are InputError
// with "<source>:<line>: " prefixes.
namespace geodual::io {

ImplicationalBase parse_imp(std::istream& in, std::string_view source = "<input>");
ImplicationalBase parse_imp(std::string_view text, std::string_view source = "<input>");
ImplicationalBase read_imp(const std::filesystem::path& path);
void write_imp(std::ostream& out, const ImplicationalBase& base);
std::string to_imp(const ImplicationalBase& base);

/// A ground set plus a family of subsets, as read from an .mf file.
struct LabeledFamily {
  GroundSet ground;
  SetFamily sets;  // file order, duplicates kept
};

LabeledFamily parse_mf(std::istream& in, std::string_view source = "<input>");
LabeledFamily parse_mf(std::string_view text, std::string_view source = "<input>");
LabeledFamily read_mf(const std::filesystem::path& path);
void write_mf(std::ostream& out, const GroundSet& ground, const SetFamily& sets);
std::string to_mf(const GroundSet& ground, const SetFamily& sets);

/// Convenience: parse an .mf file into a validated MeetFamily.
MeetFamily read_meet_family(const std::filesystem::path& path);

struct LabeledHypergraph {
  GroundSet ground;
  Hypergraph graph;  // every ground element is a vertex
};

LabeledHypergraph parse_hg(std::istream& in, std::string_view source = "<input>");
LabeledHypergraph parse_hg(std::string_view text, std::string_view source = "<input>");
LabeledHypergraph read_hg(const std::filesystem::path& path);
void write_hg(std::ostream& out, const GroundSet& ground, const Hypergraph& h);

/// Expresses a family over the ground set `to` by label. Every label of
/// `from` used by the family must exist in `to`.
SetFamily relabel(const SetFamily& family, const GroundSet& from, const GroundSet& to);

}  // namespace geodual::io
