#include "dcjmedian/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dcjmedian/colored_graph.hpp"
#include "dcjmedian/distance.hpp"
#include "dcjmedian/errors.hpp"
#include "dcjmedian/genome.hpp"
#include "dcjmedian/instance_gen.hpp"
#include "dcjmedian/median_deg2.hpp"
#include "dcjmedian/median_deg3.hpp"
#include "dcjmedian/oracle.hpp"

namespace dcjmedian {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Genome> read_instance(const std::string& path, std::istream& in) {
  if (path == "-") return parse_instance(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file '" + path + "'");
  return parse_instance(file);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int connected_components(const ColoredGraph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.universe_size()), 0);
  int count = 0;
  for (VertexId s : g.vertices()) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<VertexId> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& e : g.incident_edges(v)) {
        const VertexId w = e.u == v ? e.v : e.u;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

void write_census(const ColoredGraph& g, std::ostream& out) {
  out << "components=" << connected_components(g) << '\n';
  if (g.max_degree() > 2) return;
  int even_paths = 0, odd_paths = 0, first_kind = 0, second_kind = 0, odd_cycles = 0;
  for (const auto& c : components(g)) {
    if (!c.is_cycle())
      (c.odd() ? odd_paths : even_paths)++;
    else if (c.odd())
      ++odd_cycles;
    else
      (cross_free_diagonal(c) ? second_kind : first_kind)++;
  }
  out << "paths_even=" << even_paths << '\n'
      << "paths_odd=" << odd_paths << '\n'
      << "cycles_first_kind=" << first_kind << '\n'
      << "cycles_second_kind=" << second_kind << '\n'
      << "cycles_odd=" << odd_cycles << '\n';
}

struct MedianArgs {
  std::string input;
  std::optional<int> max_pairs;
  bool assume_l = false;
  std::optional<int> max_deg3;
  bool exhaustive = false;
  int jobs = 1;
  std::string output;
  bool timing = false;
};

// Re-parses the emitted genome and recounts it against the instance.
void self_check(std::span<const Genome> genomes, const MedianResult& r) {
  const auto reparsed = parse_instance(serialize_genome(r.genome));
  if (reparsed.size() != 1 || !(reparsed[0] == r.genome))
    throw std::logic_error("emitted median does not re-parse to itself");
  const auto b = build_breakpoint_graph(genomes);
  const auto adj = reparsed[0].adjacencies();
  if (static_cast<int>(adj.size()) != reparsed[0].gene_count())
    throw std::logic_error("emitted median is not circular");
  const auto recount = count_alternating_cycles(b, std::span<const VertexPair>(adj));
  if (recount.total != r.cyc_total) throw std::logic_error("emitted median recounts to a different cycle total");
  std::int64_t halves = 0;
  for (const auto& g : genomes) halves += dcj_distance(g, reparsed[0]).halves();
  if (halves != 2 * static_cast<std::int64_t>(r.cost))
    throw std::logic_error("distances to the median do not add up to its cost");
}

int cmd_median(const MedianArgs& a, std::istream& in, std::ostream& out) {
  const auto genomes = read_instance(a.input, in);
  if (genomes.size() != 3)
    throw InvalidInstance("median needs exactly 3 genomes, the input has " + std::to_string(genomes.size()));
  if (a.exhaustive && a.max_deg3) throw UsageError("--exhaustive and --max-deg3 exclude each other");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  SolveOptions opt{a.max_pairs, a.assume_l, a.jobs};
  const int n = genomes[0].gene_count();
  for (const auto& g : genomes)
    if (g.gene_count() != n) throw InvalidInstance("genomes have different gene counts");
  const auto b = build_breakpoint_graph(genomes);

  const auto start = std::chrono::steady_clock::now();
  MedianResult r;
  std::string mode;
  if (a.exhaustive) {
    mode = "exhaustive";
    const auto o = exhaustive_median(b);
    r.matching = o.matching;
    const auto counts = count_alternating_cycles(b, std::span<const VertexPair>(o.matching));
    r.cyc_total = counts.total;
    r.cyc_per_color = counts.per_color;
    r.cost = 3 * n - r.cyc_total;
    r.genome = matching_to_circular_genome(o.matching, n, "median");
    r.exact = true;
    r.lower_bound = r.upper_bound = r.cyc_total;
    r.degree3 = static_cast<int>(degree3_vertices(b).size());
    r.configurations = o.matchings_enumerated;
    r.explored = o.matchings_enumerated;
  } else if (a.max_deg3) {
    mode = "bounds";
    r = median_with_bounds(genomes, *a.max_deg3, opt);
  } else {
    mode = "exact";
    r = solve_median(genomes, opt);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  self_check(genomes, r);

  std::ostringstream rep;
  rep << "n=" << n << '\n' << "deg3=" << r.degree3 << '\n';
  write_census(b, rep);
  rep << "mode=" << mode << '\n';
  if (!a.exhaustive) {
    rep << "max_pairs=" << r.max_pairs << '\n' << "assume_l=" << yes_no(a.assume_l) << '\n';
    if (a.max_deg3) rep << "max_deg3=" << *a.max_deg3 << '\n' << "edges_removed=" << r.edges_removed << '\n';
  }
  rep << (a.exhaustive ? "matchings=" : "configurations=") << r.configurations << '\n';
  rep << "cycles_total=" << r.cyc_total << '\n';
  rep << "cycles_per_color=";
  for (std::size_t i = 0; i < r.cyc_per_color.size(); ++i) rep << (i ? "," : "") << r.cyc_per_color[i];
  rep << '\n' << "cost=" << r.cost << '\n' << "exact=" << yes_no(r.exact) << '\n';
  rep << "lower_bound=" << r.lower_bound << '\n' << "upper_bound=" << r.upper_bound << '\n';
  for (std::size_t i = 0; i < genomes.size(); ++i)
    rep << 'd' << i + 1 << '=' << dcj_distance(genomes[i], r.genome).to_string() << '\n';
  if (a.timing) rep << "explored=" << r.explored << '\n' << "wall_seconds=" << seconds << '\n';

  if (a.output.empty()) {
    out << rep.str() << '\n' << serialize_genome(r.genome);
  } else {
    write_file(a.output, serialize_genome(r.genome));
    out << rep.str() << "output=" << a.output << '\n';
  }
  return kExitOk;
}

SizeLimit parse_limit(const std::string& s, const char* flag) {
  if (s == "inf") return SizeLimit::infinite();
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size() && v >= 1) return SizeLimit::of(v);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(flag) + " expects a positive integer or 'inf', got '" + s + "'");
}

std::size_t resolve_genome(const std::vector<Genome>& genomes, const std::string& ref) {
  for (std::size_t i = 0; i < genomes.size(); ++i)
    if (genomes[i].name() == ref) return i;
  if (!ref.empty() && ref.find_first_not_of("0123456789") == std::string::npos) {
    const auto idx = std::stoul(ref);
    if (idx >= 1 && idx <= genomes.size()) return idx - 1;
  }
  throw UsageError("--pair refers to unknown genome '" + ref + "'");
}

struct DistanceArgs {
  std::string input;
  std::string pair;
  std::string metric;
  std::string ci;
  std::string pj;
};

int cmd_distance(const DistanceArgs& a, std::istream& in, std::ostream& out) {
  const auto comma = a.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects A,B");
  if (a.metric == "dij" && (a.ci.empty() || a.pj.empty())) throw UsageError("metric dij needs --ci and --pj");
  const auto genomes = read_instance(a.input, in);
  const auto& x = genomes[resolve_genome(genomes, a.pair.substr(0, comma))];
  const auto& y = genomes[resolve_genome(genomes, a.pair.substr(comma + 1))];
  if (x.gene_count() != y.gene_count()) throw InvalidInstance("genomes have different gene counts");
  DistanceValue d;
  if (a.metric == "dcj")
    d = dcj_distance(x, y);
  else if (a.metric == "bp")
    d = bp_distance(x, y);
  else
    d = dij_distance(x, y, parse_limit(a.ci, "--ci"), parse_limit(a.pj, "--pj"));
  out << d.to_string() << '\n';
  return kExitOk;
}

int cmd_stats(const std::string& input, std::istream& in, std::ostream& out) {
  const auto genomes = read_instance(input, in);
  if (genomes.empty()) throw InvalidInstance("the input has no genomes");
  const auto b = build_breakpoint_graph(genomes);
  out << "n=" << genomes[0].gene_count() << '\n' << "genomes=" << genomes.size() << '\n';
  for (std::size_t i = 0; i < genomes.size(); ++i)
    out << "shape." << genomes[i].name() << '=' << to_string(genomes[i].shape()) << '\n';
  std::map<int, int> histogram;
  for (int d = 0; d <= b.color_count(); ++d) histogram[d] = 0;
  for (VertexId v : b.vertices()) ++histogram[b.degree(v)];
  for (const auto& [d, count] : histogram) out << "degree" << d << '=' << count << '\n';
  out << "max_degree=" << b.max_degree() << '\n' << "deg3=" << histogram[3] << '\n';
  write_census(b, out);
  return kExitOk;
}

struct GenArgs {
  int n = 0;
  int genomes = 3;
  std::string shape = "circular";
  double telomere_prob = 0.0;
  std::uint64_t seed = 0;
  std::optional<int> max_deg3;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::vector<Genome> genomes;
  std::ostringstream header;
  header << "seed=" << a.seed << '\n' << "n=" << a.n;
  try {
    if (a.max_deg3) {
      if (a.genomes != 3) throw UsageError("--max-deg3 generates exactly 3 genomes");
      genomes = generate_bounded_degree(a.n, *a.max_deg3, a.seed, a.telomere_prob);
      header << " deg3=" << *a.max_deg3 << " extra_telomere_prob=" << a.telomere_prob;
    } else {
      GenSpec spec;
      spec.n = a.n;
      spec.genomes = a.genomes;
      spec.shape = a.shape == "linear" ? GenomeShape::linear
                   : a.shape == "mixed" ? GenomeShape::mixed
                                        : GenomeShape::circular;
      spec.telomere_prob = a.telomere_prob;
      spec.seed = a.seed;
      genomes = generate(spec);
      header << " genomes=" << a.genomes << " shape=" << a.shape << " telomere_prob=" << a.telomere_prob;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto text = serialize_instance(genomes, header.str());
  if (a.output.empty())
    out << text;
  else
    write_file(a.output, text);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact DCJ circular median of three genomes", "dcjmedian"};
  app.require_subcommand(1);

  MedianArgs med;
  auto* median = app.add_subcommand("median", "Compute a circular median of three genomes");
  median->add_option("--input", med.input, "Instance file, or - for stdin")->required();
  median->add_option("--max-pairs", med.max_pairs, "Pairs of degree-3 vertices per configuration")
      ->check(CLI::NonNegativeNumber);
  median->add_flag("--assume-l", med.assume_l, "Accept --max-pairs as sufficient for this instance");
  median->add_option("--max-deg3", med.max_deg3, "Drop edges until at most this many degree-3 vertices remain")
      ->check(CLI::NonNegativeNumber);
  median->add_flag("--exhaustive", med.exhaustive, "Brute force over all perfect matchings (small inputs)");
  median->add_option("--jobs", med.jobs, "Worker threads for the configuration search")->check(CLI::PositiveNumber);
  median->add_option("--output", med.output, "Write the median genome here instead of stdout");
  median->add_flag("--timing", med.timing, "Report wall time and explored configurations");

  DistanceArgs dist;
  auto* distance = app.add_subcommand("distance", "Distance between two genomes of an instance");
  distance->add_option("--input", dist.input, "Instance file, or - for stdin")->required();
  distance->add_option("--pair", dist.pair, "Two genomes as A,B (names or 1-based positions)")->required();
  distance->add_option("--metric", dist.metric, "dcj, bp or dij")
      ->required()
      ->check(CLI::IsMember({"dcj", "bp", "dij"}));
  distance->add_option("--ci", dist.ci, "Largest counted cycle, in adjacency pairs (or inf)");
  distance->add_option("--pj", dist.pj, "Largest counted odd path, in adjacency pairs (or inf)");

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Summarize an instance and its breakpoint graph");
  stats->add_option("--input", stats_input, "Instance file, or - for stdin")->required();

  GenArgs gen;
  auto* generator = app.add_subcommand("gen", "Generate a random instance");
  generator->add_option("--n", gen.n, "Gene count")->required();
  generator->add_option("--genomes", gen.genomes, "Genome count");
  generator->add_option("--shape", gen.shape, "circular, linear or mixed")
      ->check(CLI::IsMember({"circular", "linear", "mixed"}));
  generator->add_option("--telomere-prob", gen.telomere_prob, "Chance of dropping each adjacency");
  generator->add_option("--seed", gen.seed, "Random seed");
  generator->add_option("--max-deg3", gen.max_deg3, "Generate three genomes with exactly this many degree-3 vertices");
  generator->add_option("--output", gen.output, "Write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*median) return cmd_median(med, in, out);
    if (*distance) return cmd_distance(dist, in, out);
    if (*stats) return cmd_stats(stats_input, in, out);
    return cmd_gen(gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kExitInvalidInstance;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace dcjmedian
