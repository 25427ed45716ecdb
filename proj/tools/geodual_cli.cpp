#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodual/generators.hpp"
#include "geodual/geodual.hpp"
#include "geodual/oracle.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace geodual;

namespace {

// Every output line is flushed so enumerations can be watched as they run.
void line(const std::string& text) { std::cout << text << std::endl; }

json labels_json(const GroundSet& ground, const ElementSet& s) { return json(ground.label_list(s)); }

void emit_family(const GroundSet& ground, const SetFamily& family, bool as_json) {
  for (const auto& s : family) line(as_json ? labels_json(ground, s).dump() : ground.format(s));
}

// Runs compute(0..count-1) on up to `jobs` threads and hands results to emit
// in index order, as soon as each prefix is complete.
template <typename Compute, typename Emit>
void ordered_parallel(std::size_t count, unsigned jobs, Compute compute, Emit emit) {
  using Result = std::invoke_result_t<Compute, std::size_t>;
  std::deque<std::future<Result>> window;
  std::size_t submitted = 0;
  for (std::size_t done = 0; done < count; ++done) {
    while (submitted < count && window.size() < jobs) {
      window.push_back(std::async(std::launch::async, compute, submitted++));
    }
    emit(done, window.front().get());
    window.pop_front();
  }
}

unsigned effective_jobs(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  return std::max(1U, std::thread::hardware_concurrency());
}

Antichain read_antichain(const ImplicationalBase& base, const fs::path& path) {
  auto lf = io::read_mf(path);
  return Antichain(base, io::relabel(lf.sets, lf.ground, base.ground()));
}

void report(const std::string& prefix, std::string message) {
  while (!message.empty() && message.back() == '\n') message.pop_back();
  std::cout.flush();
  std::cerr << prefix << message << '\n';
}

void print_conflict(std::ostream& out, const ImplicationalBase& base, const RankConflict& conflict) {
  out << "conflict\n" << describe(base, conflict) << std::flush;
}

int run_ccm(const fs::path& file, bool by_element, bool as_json, int jobs) {
  const ImplicationalBase base = io::read_imp(file);
  const RankFunction rho = require_rank(base);
  const auto& ground = base.ground();
  auto emit = [&](Element j, const ElementSet& meet) {
    if (as_json) {
      line(json{{"element", ground.label(j)}, {"meet", labels_json(ground, meet)}}.dump());
    } else if (by_element) {
      line(ground.label(j) + ": " + ground.format(meet));
    } else {
      line(ground.format(meet));
    }
  };

  const unsigned workers = effective_jobs(jobs);
  if (workers == 1) {
    MeetIrreducibleStream stream(base);
    while (auto rec = stream.next()) emit(rec->element, rec->meet);
    return 0;
  }
  ordered_parallel(
      ground.size(), workers,
      [&](std::size_t j) { return meets_of_element(base, rho, static_cast<Element>(j)); },
      [&](std::size_t j, const SetFamily& family) {
        for (const auto& meet : family) emit(static_cast<Element>(j), meet);
      });
  return 0;
}

int run_sid(const fs::path& file, bool verify, bool strict, int jobs) {
  const MeetFamily m = io::read_meet_family(file);
  const auto& ground = m.ground();
  std::vector<std::string> notes;

  std::string header = "elements:";
  for (const auto& l : ground.labels()) header += " " + l;
  line(header);
  const unsigned workers = effective_jobs(jobs);
  std::vector<Implication> produced;
  auto emit = [&](const Implication& imp) {
    line(ground.format(imp.premise) + " -> " + ground.label(imp.conclusion));
    if (verify) produced.push_back(imp);
  };

  if (workers == 1) {
    SidOptions options;
    options.strict = strict;
    structure_identification_stream(m, emit, options, &notes);
  } else {
    if (strict && !is_meet_irreducible_family(m)) {
      throw NotGeometryError("input family contains a set that is not meet-irreducible in its intersection closure");
    }
    const auto parts = partition_meets(m);
    for (Element j = 0; j < ground.size(); ++j) {
      if (parts[j].empty()) notes.push_back("element " + ground.label(j) + " has no meet in its j-up family; no implications");
    }
    ordered_parallel(
        ground.size(), workers,
        [&](std::size_t j) { return critical_premises(m, static_cast<Element>(j), parts[j]); },
        [&](std::size_t j, const SetFamily& premises) {
          for (const auto& p : premises) emit(Implication{p, static_cast<Element>(j)});
        });
  }
  for (const auto& note : notes) std::cerr << "note: " << note << '\n';
  if (verify) verify_meets(ImplicationalBase(ground, std::move(produced)), m);
  return 0;
}

int run_critical_base(const fs::path& file) {
  io::write_imp(std::cout, critical_base(io::read_imp(file)));
  std::cout.flush();
  return 0;
}

int run_rank_check(const fs::path& file, bool as_json) {
  const ImplicationalBase base = io::read_imp(file);
  const auto& ground = base.ground();
  const RankResult result = compute_rank(base);
  if (const auto* rho = std::get_if<RankFunction>(&result)) {
    if (as_json) {
      json ranks = json::object();
      for (Element e = 0; e < ground.size(); ++e) ranks[ground.label(e)] = (*rho)[e];
      line(json{{"ranked", true}, {"ranks", ranks}}.dump());
    } else {
      line("ranked");
      for (Element e = 0; e < ground.size(); ++e) line(ground.label(e) + "=" + std::to_string((*rho)[e]));
    }
    return 0;
  }
  const auto& conflict = std::get<RankConflict>(result);
  if (as_json) {
    json witnesses = json::array();
    if (conflict.first_witness) witnesses.push_back(base.describe(*conflict.first_witness));
    witnesses.push_back(base.describe(conflict.second_witness));
    line(json{{"ranked", false},
              {"element", ground.label(conflict.element)},
              {"ranks", {conflict.first_rank, conflict.second_rank}},
              {"witnesses", witnesses}}
             .dump());
  } else {
    print_conflict(std::cout, base, conflict);
  }
  return 2;
}

int run_dual_check(const fs::path& file, const fs::path& plus_path, const fs::path& minus_path) {
  const ImplicationalBase base = io::read_imp(file);
  const Antichain plus = read_antichain(base, plus_path);
  const Antichain minus = read_antichain(base, minus_path);
  line(check_dual(base, plus, minus) ? "dual" : "not dual");
  return 0;
}

int run_reduce(const fs::path& file, const fs::path& plus_path, const fs::path& minus_path,
               const std::optional<fs::path>& meets_path, const std::optional<std::string>& prefix) {
  const ImplicationalBase base = io::read_imp(file);
  const Antichain plus = read_antichain(base, plus_path);
  const Antichain minus = read_antichain(base, minus_path);
  std::optional<MeetFamily> meets;
  if (meets_path) {
    auto lf = io::read_mf(*meets_path);
    meets.emplace(base.ground(), io::relabel(lf.sets, lf.ground, base.ground()));
  }
  const ReducedInstance r = reduce_dual_to_cmi(base, plus, minus, meets);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';

  if (!prefix) {
    std::cout << "# omega\n";
    io::write_imp(std::cout, r.omega);
    std::cout << "# meets\n";
    io::write_mf(std::cout, r.meets.ground(), r.meets.meets());
    std::cout.flush();
    return 0;
  }
  const fs::path imp_path = *prefix + ".imp";
  const fs::path mf_path = *prefix + ".mf";
  std::ofstream imp_out(imp_path);
  std::ofstream mf_out(mf_path);
  if (!imp_out || !mf_out) throw InputError("cannot write '" + *prefix + ".imp' / '" + *prefix + ".mf'");
  io::write_imp(imp_out, r.omega);
  io::write_mf(mf_out, r.meets.ground(), r.meets.meets());
  line(imp_path.string());
  line(mf_path.string());
  return 0;
}

int run_roundtrip(const fs::path& file) {
  const ImplicationalBase base = io::read_imp(file);
  const ImplicationalBase expected = critical_base(base);
  SetFamily meets;
  for (auto& rec : meet_irreducibles(base).collect()) meets.push_back(std::move(rec.meet));
  const MeetFamily m(base.ground(), std::move(meets));
  const ImplicationalBase identified = structure_identification(m);

  if (identified.same_implications(expected)) {
    line("ok: " + std::to_string(m.size()) + " meets, " + std::to_string(expected.size()) + " critical implications");
    return 0;
  }
  const auto& want = expected.implications();
  const auto& got = identified.implications();
  for (const auto& imp : want) {
    if (std::find(got.begin(), got.end(), imp) == got.end()) line("missing: " + base.describe(imp));
  }
  for (const auto& imp : got) {
    if (std::find(want.begin(), want.end(), imp) == want.end()) line("extra: " + base.describe(imp));
  }
  return 3;
}

int run_transversals(const fs::path& file, bool mis, bool brute, bool as_json) {
  const auto lh = io::read_hg(file);
  SetFamily family;
  if (brute) {
    family = oracle::transversals_brute(lh.graph);
    if (mis) {
      for (auto& t : family) t = lh.graph.vertices() - t;
      normalize_family(family);
    }
  } else {
    family = mis ? maximal_independent_sets(lh.graph).collect() : minimal_transversals(lh.graph).collect();
  }
  emit_family(lh.ground, family, as_json);
  return 0;
}

int run_generate(const std::string& kind, const gen::BaseShape& shape, std::uint64_t seed) {
  gen::Rng rng(seed);
  ImplicationalBase base;
  if (kind == "ranked") {
    base = gen::random_ranked_base(rng, shape);
  } else if (kind == "acyclic") {
    base = gen::random_acyclic_base(rng, shape);
  } else if (kind == "distributive") {
    base = gen::random_distributive_base(rng, shape);
  } else {
    base = gen::random_base(rng, shape);
  }
  io::write_imp(std::cout, base);
  std::cout.flush();
  return 0;
}

struct OracleArgs {
  std::string file;
  std::string element;
  bool json = false;
};

void add_oracle_query(CLI::App& parent, const std::string& name, const std::string& help, OracleArgs& args,
                      std::function<int()>& action, std::function<SetFamily(const ImplicationalBase&)> query) {
  auto* cmd = parent.add_subcommand(name, help);
  cmd->add_option("file", args.file, ".imp file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--json", args.json, "one JSON array per line");
  cmd->callback([&args, &action, query] {
    action = [&args, query] {
      const ImplicationalBase base = io::read_imp(args.file);
      emit_family(base.ground(), query(base), args.json);
      return 0;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate between implicational bases and meet-irreducible families of closure systems."};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  std::string plus_file;
  std::string minus_file;
  bool as_json = false;
  int jobs = 1;

  bool by_element = false;
  auto* ccm = app.add_subcommand("ccm", "meet-irreducible closed sets of a ranked base");
  ccm->add_option("file", file, ".imp file")->required()->check(CLI::ExistingFile);
  ccm->add_flag("--by-element", by_element, "prefix each meet with the element j it belongs to");
  ccm->add_flag("--json", as_json, "one JSON object per meet");
  ccm->add_option("--jobs", jobs, "worker threads over elements (0: all cores)")->check(CLI::NonNegativeNumber);
  ccm->callback([&] { action = [&] { return run_ccm(file, by_element, as_json, jobs); }; });

  bool verify = false;
  bool strict = false;
  auto* sid = app.add_subcommand("sid", "critical base of a ranked geometry from its meets");
  sid->add_option("file", file, ".mf file")->required()->check(CLI::ExistingFile);
  sid->add_flag("--verify", verify, "recompute the meets of the result and compare");
  sid->add_flag("--strict", strict, "check the input is meet-irreducible first");
  sid->add_option("--jobs", jobs, "worker threads over elements (0: all cores)")->check(CLI::NonNegativeNumber);
  sid->callback([&] { action = [&] { return run_sid(file, verify, strict, jobs); }; });

  auto* crit = app.add_subcommand("critical-base", "critical base of an acyclic base");
  crit->add_option("file", file, ".imp file")->required()->check(CLI::ExistingFile);
  crit->callback([&] { action = [&] { return run_critical_base(file); }; });

  auto* rank = app.add_subcommand("rank-check", "rank function or rank conflict");
  rank->add_option("file", file, ".imp file")->required()->check(CLI::ExistingFile);
  rank->add_flag("--json", as_json, "JSON output");
  rank->callback([&] { action = [&] { return run_rank_check(file, as_json); }; });

  auto* dual = app.add_subcommand("dual-check", "whether B+ and B- are dual in the closure lattice");
  dual->add_option("file", file, ".imp file")->required()->check(CLI::ExistingFile);
  dual->add_option("--plus", plus_file, "B+ as .mf")->required()->check(CLI::ExistingFile);
  dual->add_option("--minus", minus_file, "B- as .mf")->required()->check(CLI::ExistingFile);
  dual->callback([&] { action = [&] { return run_dual_check(file, plus_file, minus_file); }; });

  std::optional<std::string> meets_file;
  std::optional<std::string> out_prefix;
  auto* reduce = app.add_subcommand("reduce", "membership instance equivalent to a duality instance");
  reduce->add_option("file", file, ".imp file with unit premises")->required()->check(CLI::ExistingFile);
  reduce->add_option("--plus", plus_file, "B+ as .mf")->required()->check(CLI::ExistingFile);
  reduce->add_option("--minus", minus_file, "B- as .mf")->required()->check(CLI::ExistingFile);
  reduce->add_option("--meets", meets_file, "meets of the base (default: brute force)")->check(CLI::ExistingFile);
  reduce->add_option("--out", out_prefix, "write PREFIX.imp and PREFIX.mf instead of standard output");
  reduce->callback([&] {
    action = [&] {
      std::optional<fs::path> meets_path;
      if (meets_file) meets_path = *meets_file;
      return run_reduce(file, plus_file, minus_file, meets_path, out_prefix);
    };
  });

  auto* roundtrip = app.add_subcommand("roundtrip", "check sid(ccm(base)) against critical-base(base)");
  roundtrip->add_option("file", file, ".imp file")->required()->check(CLI::ExistingFile);
  roundtrip->callback([&] { action = [&] { return run_roundtrip(file); }; });

  bool mis = false;
  auto* trans = app.add_subcommand("transversals", "minimal transversals of a hypergraph");
  trans->add_option("file", file, ".hg file")->required()->check(CLI::ExistingFile);
  trans->add_flag("--mis", mis, "maximal independent sets instead");
  trans->add_flag("--json", as_json, "one JSON array per line");
  trans->callback([&] { action = [&] { return run_transversals(file, mis, false, as_json); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference computations");
  oracle_cmd->require_subcommand(1);
  OracleArgs oracle_args;
  add_oracle_query(*oracle_cmd, "closed-sets", "every closed set", oracle_args, action,
                   [](const ImplicationalBase& b) { return oracle::all_closed_sets(b); });
  add_oracle_query(*oracle_cmd, "meets", "meet-irreducible closed sets", oracle_args, action,
                   [](const ImplicationalBase& b) { return oracle::meets_brute(b); });
  add_oracle_query(*oracle_cmd, "joins", "join-irreducible closed sets", oracle_args, action,
                   [](const ImplicationalBase& b) { return oracle::joins_brute(b); });
  add_oracle_query(*oracle_cmd, "mingens", "minimal generators of --element", oracle_args, action,
                   [&oracle_args](const ImplicationalBase& b) {
                     return oracle::mingens_brute(b, b.ground().at(oracle_args.element));
                   });
  oracle_cmd->get_subcommand("mingens")->add_option("--element", oracle_args.element, "target label")->required();

  auto* o_trans = oracle_cmd->add_subcommand("transversals", "minimal transversals by exhaustive search");
  o_trans->add_option("file", file, ".hg file")->required()->check(CLI::ExistingFile);
  o_trans->add_flag("--mis", mis, "maximal independent sets instead");
  o_trans->add_flag("--json", as_json, "one JSON array per line");
  o_trans->callback([&] { action = [&] { return run_transversals(file, mis, true, as_json); }; });

  std::string kind = "ranked";
  gen::BaseShape shape;
  std::uint64_t seed = 1;
  auto* generate = oracle_cmd->add_subcommand("generate", "random base in .imp format");
  generate->add_option("--kind", kind, "ranked, acyclic, distributive or any")
      ->check(CLI::IsMember({"ranked", "acyclic", "distributive", "any"}));
  generate->add_option("--n", shape.elements, "ground set size")->check(CLI::Range(1, 64));
  generate->add_option("--impls", shape.max_implications, "maximum number of implications");
  generate->add_option("--premise", shape.max_premise, "maximum premise size")->check(CLI::PositiveNumber);
  generate->add_option("--rank", shape.max_rank, "maximum rank (ranked only)");
  generate->add_option("--seed", seed, "random seed");
  generate->callback([&] { action = [&] { return run_generate(kind, shape, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const PreconditionError& e) {
    report("error: ", e.what());
    return 2;
  } catch (const VerificationError& e) {
    report("verification failed: ", e.what());
    return 3;
  } catch (const std::exception& e) {
    report("error: ", e.what());
    return 1;
  }
}
