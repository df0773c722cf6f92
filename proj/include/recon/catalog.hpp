#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Named graph families.
///
/// Vertex conventions: paths left to right; a subdivided star has its center
/// at 0 and branches laid out consecutively root-to-leaf; a bistar has its
/// centers at 0 and 1 followed by the leaves of 0 and then those of 1;
/// T_m has u1, u2 at 0, 1 and then v_1..v_{m+1}.
struct FamilySpec {
  enum class Kind { Path, Complete, Star, SubdividedStar, Bistar, TriangleTail };

  Kind kind = Kind::Path;
  std::vector<int> params;

  static FamilySpec path(int n) { return {Kind::Path, {n}}; }
  static FamilySpec complete(int n) { return {Kind::Complete, {n}}; }
  static FamilySpec star(int leaves) { return {Kind::Star, {leaves}}; }
  static FamilySpec subdivided_star(std::vector<int> branches) {
    return {Kind::SubdividedStar, std::move(branches)};
  }
  static FamilySpec bistar(int m, int n) { return {Kind::Bistar, {m, n}}; }
  static FamilySpec triangle_tail(int m) { return {Kind::TriangleTail, {m}}; }
  /// m = 0 gives S_{1,1}, the path on three vertices.
  static FamilySpec s11m(int m) { return m == 0 ? subdivided_star({1, 1}) : subdivided_star({1, 1, m}); }

  /// CLI spelling, e.g. "path:4", "substar:1,2,3".
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses path:N, complete:N, star:N, substar:a,b,..., bistar:m,n, tail:m and
/// s11m:m (an alias for substar:1,1,m).
FamilySpec parse_family(const std::string& text);

Graph generate(const FamilySpec& spec);

/// Carrier of the gem: path 0-1-2-3 plus vertex 4 adjacent to all of them.
Graph gem();
Graph cycle(int n);

/// Isomorphism-invariant key: the minimum upper-triangle adjacency string
/// over all vertex orders that respect an iterated degree refinement.
/// Order at most 11.
std::string canonical_key(const Graph& g);

/// The graph relabeled by the order realising canonical_key.
Graph canonical_form(const Graph& g);

bool graphs_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class, in canonical form, sorted by
/// edge list. Trees: 1 <= n <= 8. Connected graphs: 1 <= n <= 6.
std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

/// Shape of a tree with at most one vertex of degree >= 3.
struct StarShape {
  int center = 0;
  /// Each branch lists its vertices from the center outward.
  std::vector<std::vector<int>> branches;

  std::vector<int> lengths() const;
};

/// Present iff g is a tree with exactly one vertex of degree >= 3.
std::optional<StarShape> subdivided_star_shape(const Graph& g);

struct BistarShape {
  int u = 0;
  int v = 1;
  std::vector<int> leaves_u;
  std::vector<int> leaves_v;
};

/// Present iff g is a tree with two adjacent non-leaves and everything else a
/// leaf (both centers carry at least one leaf).
std::optional<BistarShape> bistar_shape(const Graph& g);

struct TriangleTailShape {
  int u1 = 0;
  int u2 = 1;
  /// v_1..v_{m+1}; v_1 is the triangle vertex carrying the tail.
  std::vector<int> path;
};

std::optional<TriangleTailShape> triangle_tail_shape(const Graph& g);

/// Family name such as P_5, C_4, K_3, S_4, S_{1,2,3}, B_{2,3}, T_2, gem; "-"
/// when no family matches.
std::string identify(const Graph& g);

}  // namespace recon
