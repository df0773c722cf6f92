#include "recon/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "recon/error.hpp"

namespace recon {

// ---------------------------------------------------------------------------
// Graph

std::vector<int> Graph::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::induces_connected(VertexMask mask) const {
  if (mask == 0) return false;
  VertexMask seen = mask & (~mask + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= neighbors(std::countr_zero(f));
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1) fail(ErrorCode::OrderOutOfRange, "graph needs at least one vertex");
  if (n > kMaxOrder)
    fail(ErrorCode::OrderTooLarge, "graph order " + std::to_string(n) + " exceeds 64");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), 0);
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      fail(ErrorCode::VertexOutOfRange,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 0.." +
               std::to_string(n - 1));
    if (a == b) fail(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second)
      fail(ErrorCode::DuplicateEdge,
           "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") repeated");
    g.adj_[static_cast<std::size_t>(a)] |= bit(b);
    g.adj_[static_cast<std::size_t>(b)] |= bit(a);
  }
  g.edges_.assign(seen.begin(), seen.end());
  if (!g.induces_connected(g.all())) fail(ErrorCode::DisconnectedGraph, "graph is not connected");
  return g;
}

// ---------------------------------------------------------------------------
// Alphabet and labelings

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorCode::InvalidSpec, "alphabet needs at least one symbol");
  if (names_.size() > 255) fail(ErrorCode::AlphabetTooLarge, "alphabet larger than 255 symbols");
  std::set<std::string> distinct(names_.begin(), names_.end());
  if (distinct.size() != names_.size())
    fail(ErrorCode::InvalidSpec, "alphabet symbol names must be distinct");
  for (const auto& s : names_)
    if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos)
      fail(ErrorCode::InvalidSpec, "symbol names must be nonempty and free of whitespace");
}

Alphabet Alphabet::standard(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i < 26)
      names.emplace_back(1, static_cast<char>('A' + i));
    else
      names.push_back("X" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

std::string Alphabet::format(const Labeling& labeling) const {
  bool single = std::all_of(names_.begin(), names_.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < labeling.size(); ++i) {
    if (!single && i > 0) out += '.';
    out += name(labeling[i]);
  }
  return out;
}

Labeling Alphabet::parse(const std::string& word) const {
  bool single = std::all_of(names_.begin(), names_.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::vector<std::string> parts;
  if (single) {
    for (char c : word) parts.emplace_back(1, c);
  } else {
    std::stringstream ss(word);
    std::string part;
    while (std::getline(ss, part, '.')) parts.push_back(part);
  }
  Labeling out;
  for (const auto& p : parts) {
    auto s = find(p);
    if (!s) fail(ErrorCode::ParseError, "unknown symbol '" + p + "'");
    out.push_back(*s);
  }
  return out;
}

LabeledGraph make_labeled(Graph g, Alphabet alphabet, Labeling labeling) {
  if (static_cast<int>(labeling.size()) != g.order())
    fail(ErrorCode::LengthMismatch, "labeling length " + std::to_string(labeling.size()) +
                                        " differs from order " + std::to_string(g.order()));
  for (Symbol s : labeling)
    if (s >= alphabet.size())
      fail(ErrorCode::InvalidSpec, "label " + std::to_string(s) + " outside alphabet");
  return LabeledGraph{std::move(g), std::move(alphabet), std::move(labeling)};
}

LabeledGraph make_labeled(Graph g, std::size_t k, const std::string& word) {
  Alphabet alphabet = Alphabet::standard(k);
  Labeling labeling = alphabet.parse(word);
  return make_labeled(std::move(g), std::move(alphabet), std::move(labeling));
}

// ---------------------------------------------------------------------------
// Connected induced subgraphs

namespace {

struct SetGrower {
  const Graph& g;
  int max_size;
  const std::function<void(VertexMask)>& fn;

  void grow(VertexMask set, int size, VertexMask candidates, VertexMask excluded) {
    if (size == max_size) return;
    while (candidates != 0) {
      VertexMask w = candidates & (~candidates + 1);
      candidates ^= w;
      VertexMask next_set = set | w;
      fn(next_set);
      VertexMask fresh = g.neighbors(std::countr_zero(w)) & ~next_set & ~excluded;
      grow(next_set, size + 1, candidates | fresh, excluded);
      excluded |= w;
    }
  }
};

}  // namespace

void for_each_connected_set(const Graph& g, int max_size,
                            const std::function<void(VertexMask)>& fn) {
  if (max_size < 1) return;
  SetGrower grower{g, max_size, fn};
  for (int anchor = 0; anchor < g.order(); ++anchor) {
    VertexMask below = bit(anchor) - 1;
    VertexMask start = bit(anchor);
    fn(start);
    VertexMask excluded = below | start;
    grower.grow(start, 1, g.neighbors(anchor) & ~excluded, excluded);
  }
}

std::vector<VertexMask> connected_sets_of_order(const Graph& g, int t) {
  if (t < 1 || t > g.order())
    fail(ErrorCode::OrderOutOfRange,
         "subgraph order " + std::to_string(t) + " outside 1.." + std::to_string(g.order()));
  std::vector<VertexMask> out;
  for_each_connected_set(g, t, [&](VertexMask m) {
    if (popcount(m) == t) out.push_back(m);
  });
  return out;
}

VertexSet to_vertex_set(VertexMask mask) {
  VertexSet out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::vector<VertexSet> connected_induced_subgraphs(const Graph& g, int t) {
  std::vector<VertexSet> out;
  for (VertexMask m : connected_sets_of_order(g, t)) out.push_back(to_vertex_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

namespace {

// Backtracking over vertex images in BFS order so every vertex after the
// first has an already-mapped neighbour. `accept` filters (vertex, image)
// pairs; `visit` returns false to stop the search.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::function<bool(int, int)> accept,
                     std::function<bool(const Permutation&)> visit)
      : g_(g), accept_(std::move(accept)), visit_(std::move(visit)) {
    int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (VertexMask m = g.neighbors(order_[head]); m != 0; m &= m - 1) {
        int w = std::countr_zero(m);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          order_.push_back(w);
        }
      }
    }
    sigma_.assign(static_cast<std::size_t>(n), -1);
  }

  void run() { extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return visit_(sigma_);
    int v = order_[depth];
    for (int w = 0; w < g_.order(); ++w) {
      if ((used_ & bit(w)) != 0) continue;
      if (g_.degree(w) != g_.degree(v)) continue;
      if (accept_ && !accept_(v, w)) continue;
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        int u = order_[e];
        ok = g_.adjacent(u, v) == g_.adjacent(sigma_[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      sigma_[static_cast<std::size_t>(v)] = w;
      used_ |= bit(w);
      bool keep_going = extend(depth + 1);
      used_ &= ~bit(w);
      sigma_[static_cast<std::size_t>(v)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::function<bool(int, int)> accept_;
  std::function<bool(const Permutation&)> visit_;
  std::vector<int> order_;
  Permutation sigma_;
  VertexMask used_ = 0;
};

void check_labeling(const Graph& g, const Labeling& l) {
  if (static_cast<int>(l.size()) != g.order())
    fail(ErrorCode::LengthMismatch, "labeling length " + std::to_string(l.size()) +
                                        " differs from order " + std::to_string(g.order()));
}

}  // namespace

std::vector<Permutation> automorphism_group(const Graph& g) {
  if (g.order() > kMaxAutomorphismOrder)
    fail(ErrorCode::OrderTooLarge, "automorphism enumeration limited to order " +
                                       std::to_string(kMaxAutomorphismOrder));
  std::vector<Permutation> group;
  AutomorphismSearch search(g, nullptr, [&](const Permutation& s) {
    group.push_back(s);
    return true;
  });
  search.run();
  std::sort(group.begin(), group.end());
  return group;
}

Labeling permute(const Labeling& labeling, const Permutation& sigma) {
  Labeling out(labeling.size());
  for (std::size_t v = 0; v < labeling.size(); ++v)
    out[v] = labeling[static_cast<std::size_t>(sigma[v])];
  return out;
}

bool labelings_isomorphic(const Graph& g, const Labeling& lambda1, const Labeling& lambda2) {
  check_labeling(g, lambda1);
  check_labeling(g, lambda2);
  if (lambda1 == lambda2) return true;
  bool found = false;
  AutomorphismSearch search(
      g,
      [&](int v, int w) {
        return lambda1[static_cast<std::size_t>(v)] == lambda2[static_cast<std::size_t>(w)];
      },
      [&](const Permutation&) {
        found = true;
        return false;
      });
  search.run();
  return found;
}

Labeling canonical_labeling(const std::vector<Permutation>& group, const Labeling& labeling) {
  Labeling best = labeling;
  for (const auto& sigma : group) {
    Labeling candidate = permute(labeling, sigma);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

Labeling canonical_labeling(const Graph& g, const Labeling& labeling) {
  check_labeling(g, labeling);
  Labeling best = labeling;
  // Above the enumeration bound the search is capped; the result is then the
  // smallest labeling seen, which is still isomorphic to the input.
  constexpr std::size_t kVisitCap = 2'000'000;
  std::size_t visited = 0;
  AutomorphismSearch search(g, nullptr, [&](const Permutation& sigma) {
    Labeling candidate = permute(labeling, sigma);
    if (candidate < best) best = std::move(candidate);
    return ++visited < kVisitCap;
  });
  search.run();
  return best;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

GraphText parse_graph_text(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "graph")
    fail(ErrorCode::ParseError, "first line must be 'graph <n> <m>'");
  int n = parse_int(lines[0][1]);
  int m = parse_int(lines[0][2]);
  if (m < 0 || static_cast<std::size_t>(m) + 1 > lines.size())
    fail(ErrorCode::ParseError, "expected " + std::to_string(m) + " edge lines");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    const auto& toks = lines[static_cast<std::size_t>(i)];
    if (toks.size() != 2) fail(ErrorCode::ParseError, "edge line needs two vertices");
    edges.emplace_back(parse_int(toks[0]), parse_int(toks[1]));
  }
  GraphText out{build_graph(n, edges), std::nullopt};
  std::size_t next = static_cast<std::size_t>(m) + 1;
  if (next < lines.size()) {
    const auto& toks = lines[next];
    if (toks[0] != "labels") fail(ErrorCode::ParseError, "unexpected line '" + toks[0] + "'");
    std::vector<std::string> labels(toks.begin() + 1, toks.end());
    if (static_cast<int>(labels.size()) != n)
      fail(ErrorCode::LengthMismatch, "labels line must name every vertex");
    out.labels = std::move(labels);
    if (next + 1 < lines.size()) fail(ErrorCode::ParseError, "trailing content after labels");
  }
  return out;
}

std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::string serialize_graph(const LabeledGraph& lg) {
  std::string out = serialize_graph(lg.graph);
  out += "labels";
  for (Symbol s : lg.labeling) out += " " + lg.alphabet.name(s);
  out += "\n";
  return out;
}

GraphText read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::IoError, "write failed for " + path);
}

LabeledGraph labeled_from_text(const GraphText& text, std::size_t k) {
  if (!text.labels) fail(ErrorCode::ParseError, "graph file has no labels line");
  std::size_t needed = 1;
  Alphabet wide = Alphabet::standard(255);
  Labeling labeling;
  for (const auto& name : *text.labels) {
    auto s = wide.find(name);
    if (!s) fail(ErrorCode::ParseError, "unknown symbol '" + name + "'");
    labeling.push_back(*s);
    needed = std::max<std::size_t>(needed, std::size_t{*s} + 1);
  }
  if (k == 0) k = needed;
  if (needed > k)
    fail(ErrorCode::InvalidSpec, "labels use " + std::to_string(needed) +
                                     " symbols but alphabet size is " + std::to_string(k));
  return make_labeled(text.graph, Alphabet::standard(k), std::move(labeling));
}

std::string format_edges(const Graph& g) {
  std::string out;
  for (auto [a, b] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out.empty() ? "-" : out;
}

}  // namespace recon
