#include "geodual/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "geodual/errors.hpp"

namespace geodual::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  LineReader(std::istream& in, std::string_view source) : in_(in), source_(source) {}

  // Next line with at least one token after comment stripping.
  bool next(Line& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream words(raw);
      std::vector<std::string> tokens;
      for (std::string t; words >> t;) tokens.push_back(std::move(t));
      if (tokens.empty()) continue;
      line = {number_, std::move(tokens)};
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw InputError(std::string(source_) + ":" + std::to_string(line) + ": " + message);
  }

  std::string_view source() const noexcept { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t number_ = 0;
};

GroundSet read_header(LineReader& reader, std::string_view keyword) {
  Line line;
  if (!reader.next(line)) reader.fail(0, "missing '" + std::string(keyword) + "' header");
  if (line.tokens.front() != keyword) {
    reader.fail(line.number, "expected '" + std::string(keyword) + "' header, found '" + line.tokens.front() + "'");
  }
  std::vector<std::string> labels(line.tokens.begin() + 1, line.tokens.end());
  for (const auto& l : labels) {
    if (l == "->" || l == ".") reader.fail(line.number, "'" + l + "' is reserved and cannot be an element label");
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const InputError& e) {
    reader.fail(line.number, e.what());
  }
}

Element lookup(const LineReader& reader, const GroundSet& ground, const Line& line, const std::string& label) {
  if (auto e = ground.find(label)) return *e;
  reader.fail(line.number, "unknown element '" + label + "'");
}

// A set line: labels, or a lone "." for the empty set.
ElementSet read_set_line(const LineReader& reader, const GroundSet& ground, const Line& line) {
  ElementSet s = ground.empty_set();
  if (line.tokens.size() == 1 && line.tokens.front() == ".") return s;
  for (const auto& t : line.tokens) {
    if (t == ".") reader.fail(line.number, "'.' must stand alone to denote the empty set");
    s.insert(lookup(reader, ground, line, t));
  }
  return s;
}

template <typename Parse>
auto read_file(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return parse(in, path.string());
}

}  // namespace

ImplicationalBase parse_imp(std::istream& in, std::string_view source) {
  LineReader reader(in, source);
  GroundSet ground = read_header(reader, "elements:");
  std::vector<Implication> rules;
  Line line;
  while (reader.next(line)) {
    const auto& t = line.tokens;
    auto arrow = std::find(t.begin(), t.end(), std::string("->"));
    if (arrow == t.end()) reader.fail(line.number, "expected '<premise> -> <conclusion>'");
    if (arrow == t.begin()) reader.fail(line.number, "empty premise (violates standardness)");
    if (std::distance(arrow, t.end()) != 2) reader.fail(line.number, "exactly one conclusion label expected after '->'");
    Implication imp{ground.empty_set(), lookup(reader, ground, line, t.back())};
    for (auto it = t.begin(); it != arrow; ++it) {
      const Element a = lookup(reader, ground, line, *it);
      if (a == imp.conclusion) reader.fail(line.number, "conclusion '" + *it + "' also appears in the premise");
      imp.premise.insert(a);
    }
    rules.push_back(std::move(imp));
  }
  return ImplicationalBase(std::move(ground), std::move(rules));
}

ImplicationalBase parse_imp(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_imp(in, source);
}

ImplicationalBase read_imp(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in, const std::string& src) { return parse_imp(in, src); });
}

void write_imp(std::ostream& out, const ImplicationalBase& base) {
  const auto& ground = base.ground();
  out << "elements:";
  for (const auto& l : ground.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& imp : base.implications()) out << ground.format(imp.premise) << " -> " << ground.label(imp.conclusion) << '\n';
}

std::string to_imp(const ImplicationalBase& base) {
  std::ostringstream out;
  write_imp(out, base);
  return out.str();
}

LabeledFamily parse_mf(std::istream& in, std::string_view source) {
  LineReader reader(in, source);
  LabeledFamily out{read_header(reader, "elements:"), {}};
  Line line;
  while (reader.next(line)) out.sets.push_back(read_set_line(reader, out.ground, line));
  return out;
}

LabeledFamily parse_mf(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_mf(in, source);
}

LabeledFamily read_mf(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in, const std::string& src) { return parse_mf(in, src); });
}

void write_mf(std::ostream& out, const GroundSet& ground, const SetFamily& sets) {
  out << "elements:";
  for (const auto& l : ground.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& s : sets) out << ground.format(s) << '\n';
}

std::string to_mf(const GroundSet& ground, const SetFamily& sets) {
  std::ostringstream out;
  write_mf(out, ground, sets);
  return out.str();
}

MeetFamily read_meet_family(const std::filesystem::path& path) {
  auto lf = read_mf(path);
  return MeetFamily(std::move(lf.ground), std::move(lf.sets));
}

LabeledHypergraph parse_hg(std::istream& in, std::string_view source) {
  LineReader reader(in, source);
  GroundSet ground = read_header(reader, "vertices:");
  SetFamily edges;
  Line line;
  while (reader.next(line)) edges.push_back(read_set_line(reader, ground, line));
  ElementSet vertices = ground.full_set();
  return {std::move(ground), Hypergraph(std::move(vertices), std::move(edges))};
}

LabeledHypergraph parse_hg(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_hg(in, source);
}

LabeledHypergraph read_hg(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in, const std::string& src) { return parse_hg(in, src); });
}

void write_hg(std::ostream& out, const GroundSet& ground, const Hypergraph& h) {
  out << "vertices:";
  h.vertices().for_each([&](Element v) { out << ' ' << ground.label(v); });
  out << '\n';
  for (const auto& e : h.edges()) out << ground.format(e) << '\n';
}

SetFamily relabel(const SetFamily& family, const GroundSet& from, const GroundSet& to) {
  SetFamily out;
  for (const auto& s : family) {
    ElementSet t = to.empty_set();
    s.for_each([&](Element e) { t.insert(to.at(from.label(e))); });
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace geodual::io
