#pragma once

// Independent brute-force oracles. They read only a carrier's order and edge
// list and never call the library's enumeration or isomorphism code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "recon/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const recon::Graph& g) {
  auto n = static_cast<std::size_t>(g.order());
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return a;
}

inline bool subset_connected(const Matrix& a, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  std::set<int> inside(vs.begin(), vs.end());
  std::set<int> seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : vs) {
      if (!seen.count(w) && a[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == inside.size();
}

/// Every connected vertex subset of size t, by scanning all 2^n subsets.
inline std::vector<std::vector<int>> connected_sets(const recon::Graph& g, int t) {
  auto a = adjacency(g);
  int n = g.order();
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (static_cast<int>(vs.size()) == t && subset_connected(a, vs)) out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every permutation of 0..n-1 preserving the edge set.
inline std::vector<std::vector<int>> automorphisms(const recon::Graph& g) {
  auto a = adjacency(g);
  int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        ok = a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
             a[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])][static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> apply(const std::vector<int>& labels, const std::vector<int>& sigma) {
  std::vector<int> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) out[v] = labels[static_cast<std::size_t>(sigma[v])];
  return out;
}

inline std::vector<int> canonical(const std::vector<std::vector<int>>& group, const std::vector<int>& labels) {
  std::vector<int> best = labels;
  for (const auto& s : group) best = std::min(best, apply(labels, s));
  return best;
}

inline bool isomorphic(const std::vector<std::vector<int>>& group, const std::vector<int>& l1,
                       const std::vector<int>& l2) {
  return canonical(group, l1) == canonical(group, l2);
}

inline std::vector<int> to_ints(const recon::Labeling& l) { return {l.begin(), l.end()}; }

/// Multiset of order-t compositions as composition -> multiplicity.
inline std::map<std::vector<long long>, long long> multiset(const recon::Graph& g, const std::vector<int>& labels,
                                                            int k, int t) {
  std::map<std::vector<long long>, long long> out;
  for (const auto& vs : connected_sets(g, t)) {
    std::vector<long long> c(static_cast<std::size_t>(k), 0);
    for (int v : vs) ++c[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])];
    ++out[c];
  }
  return out;
}

inline std::vector<long long> sum(const recon::Graph& g, const std::vector<int>& labels, int k, int t) {
  std::vector<long long> c(static_cast<std::size_t>(k), 0);
  for (const auto& vs : connected_sets(g, t))
    for (int v : vs) ++c[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])];
  return c;
}

/// All k^n labelings in lexicographic order.
inline std::vector<std::vector<int>> all_labelings(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && ++cur[static_cast<std::size_t>(i)] == k) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

/// Number of labelings up to automorphism, by canonicalising all k^n.
inline long long chi(const recon::Graph& g, int k) {
  auto group = automorphisms(g);
  std::set<std::vector<int>> classes;
  for (const auto& l : all_labelings(g.order(), k)) classes.insert(canonical(group, l));
  return static_cast<long long>(classes.size());
}

/// Full multiset (all orders) for a labeling, as a comparable object.
inline std::map<std::vector<long long>, long long> full(const recon::Graph& g, const std::vector<int>& labels, int k) {
  std::map<std::vector<long long>, long long> out;
  for (int t = 1; t <= g.order(); ++t)
    for (auto& [c, m] : multiset(g, labels, k, t)) out[c] += m;
  return out;
}

}  // namespace brute
