#include "recon/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "recon/error.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

LabeledPath reverse(const LabeledPath& p) { return LabeledPath(p.rbegin(), p.rend()); }

LabeledPath interleave(const LabeledPath& p1, const LabeledPath& p2) {
  LabeledPath out = p1;
  for (Symbol a : p2) {
    out.push_back(a);
    out.insert(out.end(), p1.begin(), p1.end());
  }
  return out;
}

namespace {

std::size_t symbols_needed(std::size_t k, std::initializer_list<const Labeling*> labelings) {
  std::size_t need = 2;
  for (const auto* l : labelings)
    for (Symbol s : *l) need = std::max<std::size_t>(need, s + 1u);
  if (k == 0) return need;
  if (k < need) fail(ErrorCode::AlphabetTooLarge, "labels exceed the alphabet");
  return k;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  return build_graph(static_cast<int>(n), edges);
}

}  // namespace

LabeledPair interleaved_pair(const LabeledPath& p1, const LabeledPath& p2, std::size_t k) {
  if (p2.empty()) fail(ErrorCode::InvalidSpec, "interleaved pair needs a nonempty p2");
  LabeledPath a = interleave(p1, p2), b = interleave(p1, reverse(p2));
  Alphabet alphabet = Alphabet::standard(symbols_needed(k, {&a}));
  Graph g = path_graph(a.size());
  return {make_labeled(g, alphabet, a), make_labeled(g, alphabet, b)};
}

LabeledPair tm_pair(int p) {
  if (p < 1) fail(ErrorCode::InvalidSpec, "tm_pair needs p >= 1");
  int m = 2 * p;
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int i = 2; i <= m + 1; ++i) edges.emplace_back(i, i + 1);
  Graph g = build_graph(m + 3, edges);
  constexpr Symbol A = 0, B = 1;
  Labeling first(static_cast<std::size_t>(m) + 3), second(first.size());
  first[0] = first[1] = B;
  second[0] = A;
  second[1] = B;
  for (int i = 1; i <= m + 1; ++i) {
    auto v = static_cast<std::size_t>(i + 1);
    first[v] = i % 2 == 1 ? A : B;
    second[v] = i % 2 == 1 ? B : A;
  }
  Alphabet ab = Alphabet::standard(2);
  return {make_labeled(g, ab, first), make_labeled(g, ab, second)};
}

int interleave_center(std::size_t p1_size, std::size_t p2_size) {
  if (p2_size % 2 == 0) fail(ErrorCode::EvenP2Length, "p2 must have odd length");
  auto t = static_cast<int>((p2_size + 1) / 2);
  return t * (static_cast<int>(p1_size) + 1) - 1;
}

LabeledPair attach_at_center(const LabeledGraph& base, int x, const LabeledPath& p1, const LabeledPath& p2) {
  if (p2.size() % 2 == 0) fail(ErrorCode::EvenP2Length, "p2 must have odd length");
  if (p1.size() < 2) fail(ErrorCode::InvalidSpec, "p1 needs at least two vertices");
  if (x < 0 || x >= base.order()) fail(ErrorCode::VertexOutOfRange, "attachment vertex " + std::to_string(x));
  LabeledPath a = interleave(p1, p2), b = interleave(p1, reverse(p2));
  int nb = base.order();
  auto np = static_cast<int>(a.size());
  std::vector<Edge> edges = base.graph.edges();
  for (int i = 1; i < np; ++i) edges.emplace_back(nb + i - 1, nb + i);
  edges.emplace_back(x, nb + interleave_center(p1.size(), p2.size()));
  Graph g = build_graph(nb + np, edges);

  std::size_t k = symbols_needed(base.alphabet.size(), {&a});
  Alphabet alphabet = k == base.alphabet.size() ? base.alphabet : Alphabet::standard(k);
  Labeling first = base.labeling, second = base.labeling;
  first.insert(first.end(), a.begin(), a.end());
  second.insert(second.end(), b.begin(), b.end());
  return {make_labeled(g, alphabet, first), make_labeled(g, alphabet, second)};
}

std::vector<LabeledPath> nonpalindromic_path_classes(std::size_t k, int m) {
  if (k < 2 || m < 2) fail(ErrorCode::InvalidSpec, "path classes need k >= 2 and m >= 2");
  double space = std::pow(static_cast<double>(k), m);
  if (space > static_cast<double>(brute_budget()))
    fail(ErrorCode::BudgetExceeded, std::to_string(k) + "^" + std::to_string(m) + " words exceed the budget");
  std::vector<LabeledPath> out;
  LabeledPath word(static_cast<std::size_t>(m), 0);
  while (true) {
    if (word < reverse(word)) out.push_back(word);
    std::size_t i = word.size();
    while (i > 0 && word[i - 1] + 1u == k) word[--i] = 0;
    if (i == 0) break;
    ++word[i - 1];
  }
  return out;
}

LabeledGraph subdivided_star_family(std::size_t k, int m, const std::vector<bool>& bits) {
  if (m < 3) fail(ErrorCode::InvalidSpec, "star family needs m >= 3");
  auto classes = nonpalindromic_path_classes(k, m);
  if (bits.size() != classes.size())
    fail(ErrorCode::BitLengthMismatch,
         "expected " + std::to_string(classes.size()) + " bits, got " + std::to_string(bits.size()));
  const LabeledPath inner = {0, 0, 1};
  const int center = interleave_center(static_cast<std::size_t>(m), inner.size());

  std::vector<Edge> edges;
  Labeling labeling = {inner[1]};
  auto branch = [&](const LabeledPath& path, int from, int step, int count) {
    int previous = 0;
    for (int j = 0; j < count; ++j) {
      int v = static_cast<int>(labeling.size());
      labeling.push_back(path[static_cast<std::size_t>(from + step * j)]);
      edges.emplace_back(previous, v);
      previous = v;
    }
  };
  for (std::size_t c = 0; c < classes.size(); ++c) {
    LabeledPath path = interleave(classes[c], bits[c] ? reverse(inner) : inner);
    branch(path, center - 1, -1, center);
    branch(path, center + 1, 1, static_cast<int>(path.size()) - center - 1);
  }
  Graph g = build_graph(static_cast<int>(labeling.size()), edges);
  return make_labeled(g, Alphabet::standard(k), labeling);
}

}  // namespace recon
