#include "hasse/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hasse/algorithms.hpp"
#include "hasse/io.hpp"
#include "hasse/oracle.hpp"
#include "hasse/zoo.hpp"

namespace hasse {
namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << text;
}

std::string infer_format(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return explicit_format;
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "json") return "lattice-json";
  if (ext == "cxt") return "cxt";
  if (ext == "txt" || ext == "dat" || ext == "tab") return "transactions";
  throw UsageError("cannot infer --format from \"" + path + "\"; pass --format explicitly");
}

// Parsed input: always a lattice, plus the concept lattice view when the
// source was a formal context.
struct LoadedLattice {
  std::shared_ptr<const Lattice> lattice;
  std::shared_ptr<const ConceptLattice> concepts;  // null for lattice-json
};

LoadedLattice load_lattice(const std::string& path, const std::string& format) {
  LoadedLattice loaded;
  const std::string text = read_file(path);
  if (format == "lattice-json") {
    loaded.lattice = parse_lattice_json(text);
  } else if (format == "cxt" || format == "transactions") {
    FormalContext ctx = format == "cxt" ? parse_cxt(text) : parse_transactions(text);
    auto cl = ConceptLattice::build(std::move(ctx));
    loaded.concepts = cl;
    loaded.lattice = cl;
  } else {
    throw UsageError("unknown format: " + format);
  }
  return loaded;
}

SortStrategy parse_sort(const std::string& spec, const LoadedLattice& loaded) {
  if (spec == "above-count") return AboveCount{};
  if (spec.rfind("random:", 0) == 0) {
    try {
      return RandomTies{std::stoull(spec.substr(7))};
    } catch (const std::exception&) {
      throw UsageError("bad seed in --sort " + spec);
    }
  }
  if (spec == "key:intent-size") {
    auto cl = loaded.concepts;
    if (cl == nullptr) throw UsageError("--sort key:intent-size needs a formal-context input");
    return RankKey{[cl](Element x) {
      return static_cast<std::int64_t>(__builtin_popcountll(cl->intent(x)));
    }};
  }
  throw UsageError("unknown sort strategy: " + spec);
}

Embedding make_embedding(const std::string& kind, const LoadedLattice& loaded) {
  if (kind == "identity") return identity_embedding(loaded.lattice);
  if (kind == "meet-irreducible") return meet_irreducible_embedding(loaded.lattice);
  if (kind == "powerset") {
    if (loaded.concepts == nullptr) {
      throw UsageError("--embedding powerset needs a formal-context input");
    }
    return powerset_intent_embedding(*loaded.concepts);
  }
  throw UsageError("unknown embedding: " + kind);
}

FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::uint64_t seed) {
  if (attributes > 30) throw ParameterTooLarge("random context capped at 30 attributes");
  FormalContext ctx;
  ctx.attributes = default_attribute_names(static_cast<unsigned>(attributes));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(density);
  for (std::size_t o = 0; o < objects; ++o) {
    ctx.objects.push_back(std::to_string(o + 1));
    AttrMask mask = 0;
    for (std::size_t a = 0; a < attributes; ++a) {
      if (flip(rng)) mask |= AttrMask{1} << a;
    }
    ctx.rows.push_back(mask);
  }
  return ctx;
}

// Suite grammar: powerset:K | divisor:N | partition:K |
// random-context:OBJSxATTRS:DENSITY:SEED
LoadedLattice build_suite(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  auto int_arg = [&](std::size_t i) -> long long {
    try {
      return std::stoll(parts.at(i));
    } catch (const std::exception&) {
      throw UsageError("bad suite parameter in \"" + spec + "\"");
    }
  };
  LoadedLattice loaded;
  if (parts[0] == "powerset" && parts.size() == 2) {
    loaded.lattice = powerset(static_cast<unsigned>(int_arg(1)));
  } else if (parts[0] == "divisor" && parts.size() == 2) {
    loaded.lattice = divisor(int_arg(1));
  } else if (parts[0] == "partition" && parts.size() == 2) {
    loaded.lattice = partition(static_cast<unsigned>(int_arg(1)));
  } else if (parts[0] == "random-context" && parts.size() == 4) {
    auto x = parts[1].find('x');
    if (x == std::string::npos) throw UsageError("random-context needs OBJSxATTRS");
    std::size_t objects, attributes;
    double density;
    std::uint64_t seed;
    try {
      objects = std::stoull(parts[1].substr(0, x));
      attributes = std::stoull(parts[1].substr(x + 1));
      density = std::stod(parts[2]);
      seed = std::stoull(parts[3]);
    } catch (const std::exception&) {
      throw UsageError("bad suite parameter in \"" + spec + "\"");
    }
    auto cl = ConceptLattice::build(random_context(objects, attributes, density, seed));
    loaded.concepts = cl;
    loaded.lattice = cl;
  } else {
    throw UsageError("unknown suite: " + spec);
  }
  return loaded;
}

struct DiagramArgs {
  std::string algo = "ipred";
  std::string input;
  std::string format;
  std::string embedding;
  std::string sort = "above-count";
  std::string out = "dot";
  std::string stats_path;
  std::string trace_path;
  bool unchecked = false;
  bool embedding_given = false;
};

int run_diagram(const DiagramArgs& args, std::ostream& out) {
  LoadedLattice loaded = load_lattice(args.input, infer_format(args.input, args.format));
  const Lattice& l = *loaded.lattice;

  if (args.embedding_given && args.algo != "ipred") {
    throw UsageError("--embedding is only meaningful with --algo ipred");
  }
  if (!args.trace_path.empty() && args.algo == "oracle") {
    throw UsageError("--trace needs --algo border or ipred");
  }

  std::vector<TraceRecord> records;
  TraceSink sink;
  if (!args.trace_path.empty()) {
    sink = [&records](const TraceRecord& rec) { records.push_back(rec); };
  }

  OpCounters counters;
  std::size_t max_border = 0;
  std::unique_ptr<Diagram> diagram;
  std::shared_ptr<const Lattice> trace_codomain;

  const auto t0 = std::chrono::steady_clock::now();
  if (args.algo == "oracle") {
    CountingLattice counted(l, counters);
    diagram = std::make_unique<Diagram>(oracle_hasse(counted));
  } else if (args.algo == "border") {
    TopoOrder order = reverse_topo_sort(l, parse_sort(args.sort, loaded));
    BorderRunOptions opt;
    opt.trace = sink;
    opt.max_border_out = &max_border;
    diagram = std::make_unique<Diagram>(generalized_border(l, order, &counters, opt));
  } else if (args.algo == "ipred") {
    std::string kind = args.embedding;
    if (kind.empty()) kind = loaded.concepts != nullptr ? "powerset" : "meet-irreducible";
    Embedding emb = make_embedding(kind, loaded);
    if (!args.unchecked) {
      ValidationReport report = validate_embedding(emb, l);
      if (!report.ok()) throw EmbeddingInvalid(report.summary());
    }
    trace_codomain = emb.codomain_ptr();
    TopoOrder order = reverse_topo_sort(l, parse_sort(args.sort, loaded));
    IpredRunOptions opt;
    opt.unchecked = true;  // validated above; keep run counters clean
    opt.trace = sink;
    opt.max_border_out = &max_border;
    Embedding counted = emb.counted(counters);
    diagram = std::make_unique<Diagram>(generalized_ipred(l, order, counted, &counters, opt));
  } else {
    throw UsageError("unknown algorithm: " + args.algo);
  }
  const auto t1 = std::chrono::steady_clock::now();

  if (args.out == "dot") {
    out << emit_dot(*diagram, l);
  } else if (args.out == "json") {
    out << emit_edges_json(*diagram, l);
  } else {
    throw UsageError("unknown output format: " + args.out);
  }

  if (!args.trace_path.empty()) {
    if (trace_codomain != nullptr) {
      write_file(args.trace_path, emit_trace(records, l, *trace_codomain));
    } else {
      write_file(args.trace_path, emit_trace(records, l));
    }
  }
  if (!args.stats_path.empty()) {
    RunStats stats;
    stats.algo = args.algo;
    stats.n = l.size();
    stats.width = width(l);
    stats.edges = diagram->edge_count();
    stats.max_border = max_border;
    stats.counters = counters;
    stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    write_file(args.stats_path, emit_stats(stats));
  }
  return 0;
}

struct CheckArgs {
  std::string input;
  std::string format;
  bool distributive = false;
};

int run_check(const CheckArgs& args, std::ostream& out) {
  LoadedLattice loaded = load_lattice(args.input, infer_format(args.input, args.format));
  out << "valid: true\n";
  out << "n: " << loaded.lattice->size() << "\n";
  if (args.distributive) {
    DistributivityResult result = is_distributive(*loaded.lattice);
    out << "distributive: " << (result.distributive ? "true" : "false") << "\n";
    if (!result.distributive) {
      out << "witness: " << loaded.lattice->name(result.x) << ", " << loaded.lattice->name(result.y)
          << ", " << loaded.lattice->name(result.z) << "\n";
    }
  }
  return 0;
}

struct ConceptsArgs {
  std::string input;
  std::string format;
  std::string out_path;
};

int run_concepts(const ConceptsArgs& args) {
  std::string format = infer_format(args.input, args.format);
  if (format == "lattice-json") throw UsageError("concepts needs a formal-context input");
  LoadedLattice loaded = load_lattice(args.input, format);
  const ConceptLattice& cl = *loaded.concepts;
  const auto& attrs = cl.context().attributes;
  std::ostringstream os;
  if (cl.size() == 0) {
    os << "[]\n";
  } else {
    os << "[";
    for (Element i = 0; i < cl.size(); ++i) {
      os << (i == 0 ? "\n" : ",\n") << "  [";
      bool first = true;
      for (std::size_t a = 0; a < attrs.size(); ++a) {
        if (cl.intent(i) & (AttrMask{1} << a)) {
          if (!first) os << ", ";
          os << nlohmann::json(attrs[a]).dump();
          first = false;
        }
      }
      os << "]";
    }
    os << "\n]\n";
  }
  write_file(args.out_path, os.str());
  return 0;
}

struct BenchArgs {
  std::string suite;
  std::size_t repeat = 1;
  std::string stats_path;
};

int run_bench(const BenchArgs& args) {
  LoadedLattice loaded = build_suite(args.suite);
  const Lattice& l = *loaded.lattice;
  Embedding emb = loaded.concepts != nullptr ? powerset_intent_embedding(*loaded.concepts)
                                             : meet_irreducible_embedding(loaded.lattice);
  {
    ValidationReport report = validate_embedding(emb, l);
    if (!report.ok()) throw EmbeddingInvalid(report.summary());
  }
  TopoOrder order = reverse_topo_sort(l);
  const std::size_t w = width(l);

  std::vector<RunStats> runs;
  for (std::size_t r = 0; r < args.repeat; ++r) {
    for (const std::string algo : {"border", "ipred"}) {
      RunStats stats;
      stats.algo = algo;
      stats.n = l.size();
      stats.width = w;
      OpCounters counters;
      std::size_t max_border = 0;
      const auto t0 = std::chrono::steady_clock::now();
      if (algo == "border") {
        BorderRunOptions opt;
        opt.max_border_out = &max_border;
        Diagram h = generalized_border(l, order, &counters, opt);
        stats.edges = h.edge_count();
      } else {
        IpredRunOptions opt;
        opt.unchecked = true;  // validated once above
        opt.max_border_out = &max_border;
        Embedding counted = emb.counted(counters);
        Diagram h = generalized_ipred(l, order, counted, &counters, opt);
        stats.edges = h.edge_count();
      }
      const auto t1 = std::chrono::steady_clock::now();
      stats.max_border = max_border;
      stats.counters = counters;
      stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      runs.push_back(std::move(stats));
    }
  }
  write_file(args.stats_path, emit_bench_stats(args.suite, args.repeat, runs));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hasse diagrams of finite lattices via border algorithms"};
  app.require_subcommand(1);

  DiagramArgs diagram_args;
  auto* diagram = app.add_subcommand("diagram", "construct the Hasse diagram of a lattice");
  diagram->add_option("--algo", diagram_args.algo, "algorithm")
      ->check(CLI::IsMember({"border", "ipred", "oracle"}));
  diagram->add_option("--input", diagram_args.input, "input file")->required();
  diagram->add_option("--format", diagram_args.format, "input format")
      ->check(CLI::IsMember({"lattice-json", "cxt", "transactions"}));
  auto* emb_opt = diagram->add_option("--embedding", diagram_args.embedding,
                                      "embedding for ipred (default: powerset for contexts, "
                                      "meet-irreducible for lattices)")
                      ->check(CLI::IsMember({"identity", "powerset", "meet-irreducible"}));
  diagram->add_option("--sort", diagram_args.sort,
                      "traversal order: above-count | random:SEED | key:intent-size");
  diagram->add_option("--out", diagram_args.out, "stdout format")
      ->check(CLI::IsMember({"dot", "json"}));
  diagram->add_option("--stats", diagram_args.stats_path, "write run statistics JSON");
  diagram->add_option("--trace", diagram_args.trace_path, "write a per-element trace");
  diagram->add_flag("--unchecked", diagram_args.unchecked, "skip embedding validation");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "validate an input lattice or context");
  check->add_option("--input", check_args.input, "input file")->required();
  check->add_option("--format", check_args.format, "input format")
      ->check(CLI::IsMember({"lattice-json", "cxt", "transactions"}));
  check->add_flag("--distributive", check_args.distributive, "also test distributivity");

  ConceptsArgs concepts_args;
  auto* concepts = app.add_subcommand("concepts", "enumerate the intents of a formal context");
  concepts->add_option("--input", concepts_args.input, "input file")->required();
  concepts->add_option("--format", concepts_args.format, "input format")
      ->check(CLI::IsMember({"cxt", "transactions"}));
  concepts->add_option("--out", concepts_args.out_path, "output file")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run both algorithms on a generated suite");
  bench->add_option("--suite", bench_args.suite,
                    "powerset:K | divisor:N | partition:K | random-context:OBJSxATTRS:DENSITY:SEED")
      ->required();
  bench->add_option("--repeat", bench_args.repeat, "repetitions per algorithm");
  bench->add_option("--stats", bench_args.stats_path, "output statistics file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    diagram_args.embedding_given = emb_opt->count() > 0;
    if (diagram->parsed()) return run_diagram(diagram_args, out);
    if (check->parsed()) return run_check(check_args, out);
    if (concepts->parsed()) return run_concepts(concepts_args);
    if (bench->parsed()) return run_bench(bench_args);
    return 1;
  } catch (const EmbeddingInvalid& e) {
    err << "embedding validation failed:\n" << e.what();
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace hasse
