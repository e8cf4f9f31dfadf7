#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "uso/generators.hpp"
#include "uso/io.hpp"
#include "uso/orientation.hpp"
#include "uso/search.hpp"
#include "uso/trace.hpp"

namespace uso::cli {

namespace {

int default_threads() {
  if (const char* env = std::getenv("USO_PIVOT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("USO_PIVOT_THREADS must be a positive integer, got '") +
                       env + "'");
  }
  return 1;
}

Rule make_rule(const std::string& name, const std::string& ordering) {
  Rule rule;
  rule.kind = parse_rule_kind(name);
  if (!ordering.empty()) {
    if (rule.kind != RuleKind::LeastRecentlyConsidered) {
      throw InvalidInput("--ordering only applies to the lrc rule");
    }
    rule.ordering = parse_ordering(ordering);
  }
  return rule;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string rule;
  int dim = 0;
  std::string ordering;
  bool holt_klee = false;
  std::string emit;
  std::optional<std::uint64_t> limit;
  int threads = 0;
  int split_depth = 0;
  bool no_prune = false;
  bool verify_faces = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const Rule rule = make_rule(a.rule, a.ordering);
  const int threads = a.threads > 0 ? a.threads : default_threads();
  std::unique_ptr<std::ofstream> emit;
  if (!a.emit.empty()) {
    emit = std::make_unique<std::ofstream>(a.emit);
    if (!*emit) throw InvalidInput("cannot write " + a.emit);
  }

  std::uint64_t count = 0;
  std::uint64_t filtered = 0;
  std::uint64_t nodes = 0;
  if (rule.kind == RuleKind::LeastRecentlyConsidered && rule.ordering.empty()) {
    LrcResult r = enumerate_lrc_all_orderings(a.dim, a.holt_klee, threads, !a.no_prune);
    count = r.count;
    filtered = r.holt_klee_count;
    if (emit) {
      std::uint64_t written = 0;
      for (const PathRecord& p : r.paths) {
        if (a.limit && written >= *a.limit) break;
        if (a.holt_klee && !check_holt_klee(orient_from_path(a.dim, p.vertices))) continue;
        *emit << format_path_record(p) << '\n';
        ++written;
      }
    }
    err << "orderings=" << r.orderings << " accepted-orderings=" << r.accepted_orderings
        << '\n';
    if (a.limit) {
      count = std::min(count, *a.limit);
      filtered = std::min(filtered, *a.limit);
    }
  } else {
    SearchConfig config;
    config.rule = rule;
    config.dimension = a.dim;
    config.holt_klee_filter = a.holt_klee;
    config.emit_paths = emit != nullptr;
    config.limit = a.limit;
    config.threads = threads;
    config.split_depth = a.split_depth;
    config.prune = !a.no_prune;
    config.verify_faces = a.verify_faces;
    const PathSink sink = [&](const PathRecord& p) {
      *emit << format_path_record(p) << '\n';
    };
    const SearchResult r = enumerate_hamiltonian(config, emit ? sink : PathSink{});
    count = r.count;
    filtered = r.holt_klee_count;
    nodes = r.nodes;
  }
  err << "rule=" << a.rule << " dim=" << a.dim << " hamiltonian=" << count;
  if (a.holt_klee) err << " holt-klee=" << filtered;
  if (nodes > 0) err << " nodes=" << nodes;
  err << '\n';
  out << (a.holt_klee ? filtered : count) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& file, std::ostream& out) {
  const Orientation o = load_orientation(file);
  const bool acyclic = is_acyclic(o);
  const bool faces = is_uso_faces(o);
  const bool histogram_ok = check_williamson_hoke(o);
  out << "dimension: " << o.dimension() << '\n';
  out << "acyclic: " << yes_no(acyclic) << '\n';
  out << "uso: " << yes_no(faces) << '\n';
  out << "williamson-hoke: " << yes_no(histogram_ok) << '\n';
  out << "histogram:";
  for (std::uint64_t c : indegree_histogram(o)) out << ' ' << c;
  out << '\n';
  if (faces) {
    out << "holt-klee: " << yes_no(check_holt_klee(o)) << '\n';
    out << "sink: " << global_sink(o) << '\n';
  } else {
    out << "holt-klee: n/a\n";
  }
  return acyclic && faces ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- trace

struct TraceArgs {
  std::string input;
  std::string rule;
  std::string ordering;
  Vertex start = 0;
  bool all_ties = false;
  std::uint64_t max_steps = 0;
};

int cmd_trace(const TraceArgs& a, std::ostream& out, std::ostream& err) {
  const Orientation o = load_orientation(a.input);
  const Rule rule = make_rule(a.rule, a.ordering);
  TracePolicy policy;
  policy.ties = a.all_ties ? TieBreak::AllBranches : TieBreak::LowestIndex;
  policy.max_steps = a.max_steps;
  const std::vector<PathRecord> walks = trace(o, rule, a.start, policy);
  for (const PathRecord& p : walks) out << format_path_record(p) << '\n';
  err << "walks=" << walks.size() << " sink=" << global_sink(o) << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- generate

int cmd_generate(bool klee, const std::string& path, int dim,
                 const std::string& output, std::ostream& out) {
  if (klee == !path.empty()) {
    throw InvalidInput("choose exactly one of --klee-minty or --path");
  }
  Orientation o = [&] {
    if (klee) return klee_minty(dim);
    std::vector<Vertex> vertices;
    std::stringstream in(path);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidInput("bad vertex '" + item + "' in --path");
      }
      vertices.push_back(static_cast<Vertex>(std::stoul(item)));
    }
    return orient_from_path(dim, vertices);
  }();
  if (output.empty() || output == "-") {
    write_orientation(out, o);
  } else {
    save_orientation(output, o);
  }
  return kExitOk;
}

// -------------------------------------------------------------- count-ausos

int cmd_count_ausos(int dim, int threads, std::ostream& out) {
  const AusoCensus c = enumerate_ausos(dim, threads > 0 ? threads : default_threads());
  out << "dimension: " << dim << '\n';
  out << "raw: " << c.raw << '\n';
  out << "classes: " << c.classes << '\n';
  out << "uso raw: " << c.raw_uso << '\n';
  out << "uso classes: " << c.uso_classes << '\n';
  return kExitOk;
}

// -------------------------------------------------------- reproduce-tables

struct ReferenceRow {
  RuleKind rule;
  // Dimensions 2..6; the Holt-Klee row is the filtered count.
  std::array<std::uint64_t, 5> paths;
  std::array<std::uint64_t, 5> holt_klee;
};

// Reference Hamiltonian path counts per rule and dimension.
constexpr std::array<ReferenceRow, 6> kReference = {{
    {RuleKind::LeastEntered, {1, 2, 17, 1072, 3262342}, {1, 2, 12, 79, 360}},
    {RuleKind::LeastUsedDirection, {1, 1, 1, 2, 0}, {1, 1, 1, 0, 0}},
    {RuleKind::LeastRecentlyEntered, {1, 1, 1, 0, 0}, {1, 1, 1, 0, 0}},
    {RuleKind::LeastRecentlyConsidered, {1, 3, 13, 0, 0}, {1, 3, 12, 0, 0}},
    {RuleKind::LeastRecentlyBasic, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
    {RuleKind::LeastIterationsInBasis, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}},
}};

int cmd_reproduce_tables(bool extended, int threads, std::ostream& out,
                         std::ostream& err) {
  threads = threads > 0 ? threads : default_threads();
  const int max_dim = extended ? 6 : 5;
  bool all_ok = true;
  out << std::left << std::setw(7) << "rule" << std::setw(5) << "dim" << std::setw(10)
      << "paths" << std::setw(10) << "expected" << std::setw(11) << "holt-klee"
      << std::setw(10) << "expected"
      << "status\n";
  for (const ReferenceRow& row : kReference) {
    for (int d = 2; d <= max_dim; ++d) {
      std::uint64_t count = 0;
      std::uint64_t filtered = 0;
      if (row.rule == RuleKind::LeastRecentlyConsidered) {
        const LrcResult r = enumerate_lrc_all_orderings(d, true, threads);
        count = r.count;
        filtered = r.holt_klee_count;
      } else {
        SearchConfig config;
        config.rule.kind = row.rule;
        config.dimension = d;
        config.holt_klee_filter = true;
        config.threads = threads;
        const SearchResult r = enumerate_hamiltonian(config);
        count = r.count;
        filtered = r.holt_klee_count;
      }
      const std::uint64_t want = row.paths[d - 2];
      const std::uint64_t want_hk = row.holt_klee[d - 2];
      const bool ok = count == want && filtered == want_hk;
      all_ok = all_ok && ok;
      out << std::left << std::setw(7) << rule_name(row.rule) << std::setw(5) << d
          << std::setw(10) << count << std::setw(10) << want << std::setw(11) << filtered
          << std::setw(10) << want_hk << (ok ? "ok" : "MISMATCH") << '\n';
      err << "done " << rule_name(row.rule) << " d=" << d << '\n';
    }
  }
  return all_ok ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- stats

int cmd_stats(const std::string& file, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t records = 0;
  std::uint64_t min_usage = std::numeric_limits<std::uint64_t>::max();
  bool bound_ok = true;
  bool opening_ok = true;
  bool sum_ok = true;
  bool uso_ok = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const PathRecord p = parse_path_record(line, line_no);
    const PathStats s = path_stats(p);
    ++records;
    min_usage = std::min(min_usage, s.min_usage);
    bound_ok = bound_ok && s.meets_usage_bound;
    opening_ok = opening_ok && s.distinct_opening;
    sum_ok = sum_ok && s.total_moves + 1 == vertex_count(p.dimension);
    uso_ok = uso_ok && check_williamson_hoke(orient_from_path(p.dimension, p.vertices));
  }
  out << "records: " << records << '\n';
  if (records > 0) {
    out << "min-usage: " << min_usage << '\n';
    out << "usage-bound: " << yes_no(bound_ok) << '\n';
    out << "distinct-opening: " << yes_no(opening_ok) << '\n';
    out << "moves-sum: " << yes_no(sum_ok) << '\n';
    out << "williamson-hoke: " << yes_no(uso_ok) << '\n';
  }
  return sum_ok && uso_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian paths of history-based pivot rules on acyclic USOs"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "count rule-followable Hamiltonian paths");
  enumerate->add_option("--rule", en.rule, "zadeh, lud, lrc, lrb, lre or lib")->required();
  enumerate->add_option("--dim", en.dim, "cube dimension")->required()->check(
      CLI::Range(1, kMaxDimension));
  enumerate->add_option("--ordering", en.ordering, "fixed lrc ordering, e.g. +2,-4,+1,-3");
  enumerate->add_flag("--holt-klee", en.holt_klee, "keep only paths satisfying Holt-Klee");
  enumerate->add_option("--emit", en.emit, "write accepted paths as JSON lines");
  enumerate->add_option("--limit", en.limit, "stop after this many paths");
  enumerate->add_option("--threads", en.threads, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--split-depth", en.split_depth, "moves before work is split");
  enumerate->add_flag("--no-prune", en.no_prune, "disable pruning (validation)");
  enumerate->add_flag("--verify-faces", en.verify_faces, "recheck paths with the face oracle");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "check an orientation file");
  verify->add_option("file", verify_file)->required();

  TraceArgs tr;
  auto* trace_cmd = app.add_subcommand("trace", "run a rule on an orientation");
  trace_cmd->add_option("--input", tr.input)->required();
  trace_cmd->add_option("--rule", tr.rule)->required();
  trace_cmd->add_option("--ordering", tr.ordering);
  trace_cmd->add_option("--start", tr.start);
  trace_cmd->add_flag("--all-ties", tr.all_ties, "follow every tie branch");
  trace_cmd->add_option("--max-steps", tr.max_steps);

  bool klee = false;
  std::string gen_path;
  int gen_dim = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "write a reference orientation");
  generate->add_flag("--klee-minty", klee);
  generate->add_option("--path", gen_path, "comma separated Hamiltonian path");
  generate->add_option("--dim", gen_dim)->required()->check(CLI::Range(1, kMaxDimension));
  generate->add_option("-o,--output", gen_out);

  int census_dim = 0;
  int census_threads = 0;
  auto* census = app.add_subcommand("count-ausos", "census of acyclic USOs");
  census->add_option("--dim", census_dim)->required()->check(CLI::Range(1, 4));
  census->add_option("--threads", census_threads)->check(CLI::PositiveNumber);

  bool extended = false;
  int tables_threads = 0;
  auto* tables = app.add_subcommand("reproduce-tables", "all rule/dimension cells");
  tables->add_flag("--extended", extended, "include dimension 6");
  tables->add_option("--threads", tables_threads)->check(CLI::PositiveNumber);

  std::string stats_file;
  auto* stats = app.add_subcommand("stats", "usage statistics of emitted paths");
  stats->add_option("file", stats_file)->required();

  std::vector<const char*> argv{"usopath"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(en, out, err);
    if (*verify) return cmd_verify(verify_file, out);
    if (*trace_cmd) return cmd_trace(tr, out, err);
    if (*generate) return cmd_generate(klee, gen_path, gen_dim, gen_out, out);
    if (*census) return cmd_count_ausos(census_dim, census_threads, out);
    if (*tables) return cmd_reproduce_tables(extended, tables_threads, out, err);
    if (*stats) return cmd_stats(stats_file, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotUso& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace uso::cli
