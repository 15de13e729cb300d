#include "dcjmedian/genome.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "dcjmedian/errors.hpp"

namespace dcjmedian {

namespace {

constexpr VertexId tail_of(int gene) { return 2 * gene - 2; }
constexpr VertexId head_of(int gene) { return 2 * gene - 1; }
constexpr int gene_of(VertexId v) { return v / 2 + 1; }
constexpr bool is_head(VertexId v) { return (v % 2) != 0; }

// Extremity at the right end of a signed gene, and at its left end.
constexpr VertexId right_of(int signed_gene) {
  return signed_gene > 0 ? head_of(signed_gene) : tail_of(-signed_gene);
}
constexpr VertexId left_of(int signed_gene) {
  return signed_gene > 0 ? tail_of(signed_gene) : head_of(-signed_gene);
}

std::vector<int> reflected(const std::vector<int>& genes) {
  std::vector<int> out;
  out.reserve(genes.size());
  for (auto it = genes.rbegin(); it != genes.rend(); ++it) out.push_back(-*it);
  return out;
}

int min_abs_gene(const Chromosome& c) {
  int best = std::abs(c.genes.front());
  for (int g : c.genes) best = std::min(best, std::abs(g));
  return best;
}

}  // namespace

MateArray mate_array(std::span<const VertexPair> pairs, int universe) {
  MateArray mate(static_cast<std::size_t>(universe), kNoVertex);
  for (const auto& p : pairs) {
    if (p.a < 0 || p.b >= universe || p.a == p.b)
      throw std::invalid_argument("vertex pair out of range or self-paired");
    if (mate[p.a] != kNoVertex || mate[p.b] != kNoVertex)
      throw std::invalid_argument("vertex pairs are not disjoint");
    mate[p.a] = p.b;
    mate[p.b] = p.a;
  }
  return mate;
}

std::vector<VertexPair> pairs_of(std::span<const VertexId> mate) {
  std::vector<VertexPair> out;
  for (VertexId v = 0; v < static_cast<VertexId>(mate.size()); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

Chromosome canonical_chromosome(Chromosome c) {
  if (c.genes.empty()) return c;
  if (c.shape == ChromosomeShape::circular) {
    auto pos = [&] {
      return std::min_element(c.genes.begin(), c.genes.end(),
                              [](int x, int y) { return std::abs(x) < std::abs(y); });
    };
    if (*pos() < 0) c.genes = reflected(c.genes);
    std::rotate(c.genes.begin(), pos(), c.genes.end());
  } else if (c.genes.size() == 1) {
    c.genes.front() = std::abs(c.genes.front());
  } else if (std::abs(c.genes.back()) < std::abs(c.genes.front())) {
    c.genes = reflected(c.genes);
  }
  return c;
}

std::string_view to_string(GenomeShape s) noexcept {
  switch (s) {
    case GenomeShape::circular: return "circular";
    case GenomeShape::linear: return "linear";
    case GenomeShape::mixed: return "mixed";
  }
  return "unknown";
}

Genome::Genome(int n, MateArray mate, std::string name)
    : n_(n), mate_(std::move(mate)), name_(std::move(name)) {
  if (n_ < 0) throw InvalidInstance("negative gene count");
  if (mate_.size() != static_cast<std::size_t>(2 * n_))
    throw InvalidInstance("adjacency array does not cover 2n extremities");
  for (VertexId v = 0; v < 2 * n_; ++v) {
    const VertexId w = mate_[v];
    if (w == kNoVertex) continue;
    if (w < 0 || w >= 2 * n_) throw InvalidInstance("adjacency endpoint out of range");
    if (w == v) throw InvalidInstance("extremity adjacent to itself");
    if (mate_[w] != v) throw InvalidInstance("adjacencies do not form a matching");
  }
}

Genome Genome::from_adjacencies(int n, std::span<const VertexPair> adjacencies,
                                std::string name) {
  MateArray mate(static_cast<std::size_t>(std::max(n, 0) * 2), kNoVertex);
  for (const auto& p : adjacencies) {
    if (p.a < 0 || p.b >= 2 * n) throw InvalidInstance("adjacency endpoint out of range");
    if (p.a == p.b) throw InvalidInstance("extremity adjacent to itself");
    if (mate[p.a] != kNoVertex || mate[p.b] != kNoVertex)
      throw InvalidInstance("extremity occurs in two adjacencies");
    mate[p.a] = p.b;
    mate[p.b] = p.a;
  }
  return Genome(n, std::move(mate), std::move(name));
}

std::vector<VertexPair> Genome::adjacencies() const { return pairs_of(mate_); }

std::size_t Genome::adjacency_count() const noexcept {
  return static_cast<std::size_t>(
             std::count_if(mate_.begin(), mate_.end(), [](VertexId w) { return w != kNoVertex; })) /
         2;
}

GenomeShape Genome::shape() const {
  if (std::none_of(mate_.begin(), mate_.end(), [](VertexId w) { return w == kNoVertex; }))
    return GenomeShape::circular;
  const auto chroms = chromosomes();
  const bool all_linear = std::all_of(chroms.begin(), chroms.end(), [](const Chromosome& c) {
    return c.shape == ChromosomeShape::linear;
  });
  return all_linear ? GenomeShape::linear : GenomeShape::mixed;
}

std::vector<Chromosome> Genome::chromosomes() const { return adjacencies_to_chromosomes(*this); }

Genome Genome::renamed(std::string name) const {
  Genome out = *this;
  out.name_ = std::move(name);
  return out;
}

Genome chromosomes_to_adjacencies(std::span<const Chromosome> chroms, int n, std::string name) {
  std::vector<char> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  MateArray mate(static_cast<std::size_t>(std::max(n, 0) * 2), kNoVertex);
  auto join = [&](VertexId x, VertexId y) {
    mate[x] = y;
    mate[y] = x;
  };
  for (const auto& c : chroms) {
    if (c.genes.empty()) throw InvalidInstance("empty chromosome");
    for (int g : c.genes) {
      const int a = std::abs(g);
      if (g == 0 || a > n) throw InvalidInstance("gene id " + std::to_string(g) + " outside 1.." + std::to_string(n));
      if (seen[a]) throw InvalidInstance("gene " + std::to_string(a) + " occurs more than once");
      seen[a] = 1;
    }
    for (std::size_t i = 0; i + 1 < c.genes.size(); ++i)
      join(right_of(c.genes[i]), left_of(c.genes[i + 1]));
    if (c.shape == ChromosomeShape::circular)
      join(right_of(c.genes.back()), left_of(c.genes.front()));
  }
  for (int g = 1; g <= n; ++g)
    if (!seen[g]) throw InvalidInstance("gene " + std::to_string(g) + " is missing");
  return Genome(n, std::move(mate), std::move(name));
}

std::vector<Chromosome> adjacencies_to_chromosomes(const Genome& g) {
  const int n = g.gene_count();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Chromosome> out;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    std::deque<int> genes{start};
    bool circular = false;
    for (VertexId cur = head_of(start);;) {
      const VertexId x = g.mate(cur);
      if (x == kNoVertex) break;
      const int h = gene_of(x);
      if (h == start) {
        circular = true;
        break;
      }
      visited[h] = 1;
      genes.push_back(is_head(x) ? -h : h);
      cur = is_head(x) ? tail_of(h) : head_of(h);
    }
    if (!circular) {
      for (VertexId cur = tail_of(start);;) {
        const VertexId x = g.mate(cur);
        if (x == kNoVertex) break;
        const int h = gene_of(x);
        visited[h] = 1;
        genes.push_front(is_head(x) ? h : -h);
        cur = is_head(x) ? tail_of(h) : head_of(h);
      }
    }
    out.push_back(canonical_chromosome(
        Chromosome{{genes.begin(), genes.end()},
                   circular ? ChromosomeShape::circular : ChromosomeShape::linear}));
  }
  std::sort(out.begin(), out.end(), [](const Chromosome& x, const Chromosome& y) {
    return min_abs_gene(x) < min_abs_gene(y);
  });
  return out;
}

Genome matching_to_circular_genome(std::span<const VertexPair> matching, int n, std::string name) {
  if (matching.size() != static_cast<std::size_t>(n))
    throw InvalidInstance("matching is not perfect on the 2n extremities");
  Genome g = Genome::from_adjacencies(n, matching, std::move(name));
  if (g.adjacency_count() != static_cast<std::size_t>(n))
    throw InvalidInstance("matching is not perfect on the 2n extremities");
  return g;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(begin, i - begin), begin + 1});
  }
  return out;
}

struct PendingGenome {
  std::string name;
  std::size_t line = 0;
  std::vector<Chromosome> chroms;
  std::set<int> genes;
};

Genome finish(PendingGenome& p) {
  if (p.genes.empty())
    throw InvalidInstance("genome '" + p.name + "' has no genes");
  const int n = *p.genes.rbegin();
  for (int g = 1; g <= n; ++g)
    if (!p.genes.count(g))
      throw InvalidInstance("genome '" + p.name + "': gene " + std::to_string(g) + " is missing");
  return chromosomes_to_adjacencies(p.chroms, n, p.name);
}

}  // namespace

std::vector<Genome> parse_instance(std::string_view text) {
  std::vector<Genome> genomes;
  std::unordered_set<std::string> names;
  std::optional<PendingGenome> current;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const Token& head = tokens.front();
    if (head.text.front() == '>') {
      std::string name(line.substr(head.column));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
      if (name.empty()) throw ParseError("genome name is empty", line_no, head.column);
      if (current) genomes.push_back(finish(*current));
      if (!names.insert(name).second)
        throw ParseError("duplicate genome name '" + name + "'", line_no, head.column + 1);
      current = PendingGenome{name, line_no, {}, {}};
    } else if (head.text == "C" || head.text == "L") {
      if (!current) throw ParseError("chromosome line before any '>name' header", line_no, head.column);
      if (tokens.size() < 2) throw ParseError("chromosome has no genes", line_no, head.column);
      Chromosome c;
      c.shape = head.text == "C" ? ChromosomeShape::circular : ChromosomeShape::linear;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        int value = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last)
          throw ParseError("expected a signed gene id, got '" + std::string(t.text) + "'", line_no, t.column);
        if (value == 0) throw ParseError("gene ids must be nonzero", line_no, t.column);
        if (value == std::numeric_limits<int>::min() || std::abs(value) > (1 << 29))
          throw ParseError("gene id out of range", line_no, t.column);
        if (!current->genes.insert(std::abs(value)).second)
          throw ParseError("duplicate gene " + std::to_string(std::abs(value)), line_no, t.column);
        c.genes.push_back(value);
      }
      current->chroms.push_back(std::move(c));
    } else {
      throw ParseError("expected '>name', 'C', 'L' or '#', got '" + std::string(head.text) + "'",
                       line_no, head.column);
    }
    if (end == text.size()) break;
  }
  if (current) genomes.push_back(finish(*current));

  for (const auto& g : genomes)
    if (g.gene_count() != genomes.front().gene_count())
      throw InvalidInstance("genome '" + g.name() + "' has " + std::to_string(g.gene_count()) +
                            " genes, expected " + std::to_string(genomes.front().gene_count()));
  return genomes;
}

std::vector<Genome> parse_instance(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_instance(std::string_view(text));
}

std::string format_chromosome(const Chromosome& c) {
  std::string out(c.shape == ChromosomeShape::circular ? "C" : "L");
  for (int g : c.genes) {
    out += ' ';
    out += std::to_string(g);
  }
  return out;
}

std::string serialize_genome(const Genome& g) {
  std::string out = ">" + g.name() + "\n";
  for (const auto& c : g.chromosomes()) {
    out += format_chromosome(c);
    out += '\n';
  }
  return out;
}

std::string serialize_instance(std::span<const Genome> genomes, std::string_view header_comment) {
  std::string out;
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    for (std::string l; std::getline(lines, l);) out += "# " + l + "\n";
  }
  for (const auto& g : genomes) out += serialize_genome(g);
  return out;
}

}  // namespace dcjmedian
