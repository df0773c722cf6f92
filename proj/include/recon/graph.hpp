#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace recon {

/// Vertex subsets are bitmasks; carriers are limited to 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;
using Permutation = std::vector<int>;

using Symbol = std::uint8_t;
using Labeling = std::vector<Symbol>;

inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }

/// Simple connected undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges as (min,max) pairs in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool adjacent(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }
  VertexMask all() const { return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1; }
  bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1; }
  std::vector<int> leaves() const;
  int max_degree() const;

  /// True iff the vertices of `mask` induce a connected subgraph.
  bool induces_connected(VertexMask mask) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

/// Validates and builds a carrier. Rejects loops, repeated edges, bad
/// indices and disconnected input.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Ordered symbol names. Default names are "A", "B", ...
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  static Alphabet standard(std::size_t k);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Symbol> find(const std::string& name) const;

  /// Symbol string in vertex order; names are concatenated when they are all
  /// single characters, otherwise joined with '.'.
  std::string format(const Labeling& labeling) const;
  Labeling parse(const std::string& word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

struct LabeledGraph {
  Graph graph;
  Alphabet alphabet;
  Labeling labeling;

  int order() const { return graph.order(); }
};

/// Checks labeling length and symbol range.
LabeledGraph make_labeled(Graph g, Alphabet alphabet, Labeling labeling);
LabeledGraph make_labeled(Graph g, std::size_t k, const std::string& word);

/// Calls `fn(mask)` once for every connected induced vertex set with at most
/// `max_size` vertices. Sets are grown from each anchor using only vertices
/// above the anchor, and every vertex is decided exactly once per branch, so
/// no set is produced twice.
void for_each_connected_set(const Graph& g, int max_size,
                            const std::function<void(VertexMask)>& fn);

std::vector<VertexMask> connected_sets_of_order(const Graph& g, int t);

/// Sorted vertex sets of every connected induced subgraph of order t.
std::vector<VertexSet> connected_induced_subgraphs(const Graph& g, int t);

VertexSet to_vertex_set(VertexMask mask);

/// All automorphisms in lexicographic order; identity first. n <= 10.
std::vector<Permutation> automorphism_group(const Graph& g);
inline constexpr int kMaxAutomorphismOrder = 10;

/// Applies sigma to a labeling: result[v] = labeling[sigma[v]].
Labeling permute(const Labeling& labeling, const Permutation& sigma);

/// True iff some automorphism sigma has lambda1 == lambda2 o sigma.
bool labelings_isomorphic(const Graph& g, const Labeling& lambda1, const Labeling& lambda2);

/// Lexicographically smallest labeling in the orbit of `labeling` under the
/// automorphism group.
Labeling canonical_labeling(const Graph& g, const Labeling& labeling);
Labeling canonical_labeling(const std::vector<Permutation>& group, const Labeling& labeling);

/// Text format: "graph <n> <m>", m edge lines, optional "labels ..." line.
struct GraphText {
  Graph graph;
  std::optional<std::vector<std::string>> labels;
};

GraphText parse_graph_text(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string serialize_graph(const LabeledGraph& lg);

GraphText read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Resolves a parsed label line against an alphabet of size k (standard
/// names). k == 0 infers the smallest standard alphabet covering the labels.
LabeledGraph labeled_from_text(const GraphText& text, std::size_t k);

std::string format_edges(const Graph& g);

}  // namespace recon
