#include "recon/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "recon/catalog.hpp"
#include "recon/error.hpp"

namespace recon {

std::string to_string(Status status) { return status == Status::Unique ? "unique" : "ambiguous"; }

// ---------------------------------------------------------------------------
// Session

const CompositionMultiset& QuerySession::multiset(int t) {
  auto it = multisets_.find(t);
  if (it == multisets_.end()) it = multisets_.emplace(t, ledger_.multiset_query(t)).first;
  return it->second;
}

const Composition& QuerySession::sum(int t) {
  auto it = sums_.find(t);
  if (it != sums_.end()) return it->second;
  auto m = multisets_.find(t);
  Composition answer = m != multisets_.end() ? m->second.sum(k()) : ledger_.sum_query(t);
  return sums_.emplace(t, std::move(answer)).first->second;
}

namespace {

ReconstructionResult finish(const QueryLedger& ledger, const Labeling& labeling) {
  ReconstructionResult r;
  r.labeling = canonical_labeling(ledger.graph(), labeling);
  r.candidates = {r.labeling};
  r.sum_queries = ledger.total(QueryKind::Sum);
  r.multiset_queries = ledger.total(QueryKind::Multiset);
  r.transcript = ledger.transcript();
  return r;
}

ReconstructionResult finish_many(const QueryLedger& ledger, const std::vector<Labeling>& found) {
  std::set<Labeling> classes;
  for (const auto& l : found) classes.insert(canonical_labeling(ledger.graph(), l));
  if (classes.empty()) fail(ErrorCode::OracleInconsistent, "no labeling matches the answers");
  ReconstructionResult r = finish(ledger, *classes.begin());
  r.candidates.assign(classes.begin(), classes.end());
  r.status = classes.size() == 1 ? Status::Unique : Status::AmbiguousWitness;
  return r;
}

Composition unit(std::size_t k, Symbol s) { return Composition::unit(k, s); }

// Assigns symbols of `content` to `vertices` in ascending order, so the
// lowest index receives the smallest symbol.
void fill_ascending(Labeling& labeling, std::vector<int> vertices, const Composition& content) {
  std::sort(vertices.begin(), vertices.end());
  if (static_cast<std::int64_t>(vertices.size()) != content.total())
    fail(ErrorCode::OracleInconsistent, "composition (" + content.to_string() + ") does not fit " +
                                            std::to_string(vertices.size()) + " vertices");
  std::size_t next = 0;
  for (std::size_t s = 0; s < content.size(); ++s)
    for (std::int64_t c = 0; c < content[s]; ++c)
      labeling[static_cast<std::size_t>(vertices[next++])] = static_cast<Symbol>(s);
}

Symbol only_symbol(const Composition& c) {
  std::optional<Symbol> found;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s] == 0) continue;
    if (found) fail(ErrorCode::NoUniqueNonzero, "(" + c.to_string() + ") has several nonzero entries");
    found = static_cast<Symbol>(s);
  }
  if (!found) fail(ErrorCode::NoUniqueNonzero, "zero vector");
  return *found;
}

std::vector<int> leaves_of(const Graph& g) { return g.leaves(); }

bool is_star(const Graph& g) {
  if (!g.is_tree()) return false;
  if (g.order() <= 2) return true;
  return g.max_degree() == g.order() - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lemmas

SplitLI split_leaves_internal(QuerySession& session) {
  const Graph& g = session.graph();
  int n = g.order();
  if (!g.is_tree()) fail(ErrorCode::StructureMismatch, "leaf/internal split needs a tree");
  if (n < 2) fail(ErrorCode::OrderOutOfRange, "leaf/internal split needs at least two vertices");
  auto leaves = static_cast<std::int64_t>(leaves_of(g).size());
  const Composition& sn = session.sum(n);
  const Composition& sn1 = session.sum(n - 1);
  Composition internal = sn1 - (leaves - 1) * sn;
  Composition leaf = sn - internal;
  if (leaf.total() != leaves) fail(ErrorCode::OracleInconsistent, "leaf composition has the wrong size");
  return SplitLI{leaf, internal};
}

SplitLI split_leaves_internal(QueryLedger& ledger) {
  QuerySession session(ledger);
  return split_leaves_internal(session);
}

Symbol center_label(QuerySession& session, const SplitLI& split) {
  const Graph& g = session.graph();
  auto shape = subdivided_star_shape(g);
  if (!shape) {
    if (g.is_tree() && g.max_degree() < 3) fail(ErrorCode::DegreeTooSmall, "maximum degree below 3");
    fail(ErrorCode::StructureMismatch, "carrier is not a subdivided star");
  }
  Composition residual = session.sum(2) - split.leaves - 2 * split.internal;
  Symbol c = only_symbol(residual);
  if (residual[c] != g.degree(shape->center) - 2)
    fail(ErrorCode::OracleInconsistent, "center residual does not match the center degree");
  return c;
}

Symbol center_label(QueryLedger& ledger, const SplitLI& split) {
  QuerySession session(ledger);
  return center_label(session, split);
}

// ---------------------------------------------------------------------------
// Stars

namespace {

Labeling star_labeling(QuerySession& session) {
  const Graph& g = session.graph();
  int n = g.order();
  Labeling labeling(static_cast<std::size_t>(n), 0);
  if (n == 1) {
    labeling[0] = only_symbol(session.sum(1));
    return labeling;
  }
  SplitLI split = split_leaves_internal(session);
  std::vector<int> leaves = leaves_of(g);
  fill_ascending(labeling, leaves, split.leaves);
  if (n > 2) {
    int center = 0;
    while (g.degree(center) != n - 1) ++center;
    labeling[static_cast<std::size_t>(center)] = only_symbol(split.internal);
  }
  return labeling;
}

}  // namespace

ReconstructionResult reconstruct_star(QueryLedger& ledger) {
  if (!is_star(ledger.graph())) fail(ErrorCode::StructureMismatch, "carrier is not a star");
  QuerySession session(ledger);
  return finish(ledger, star_labeling(session));
}

// ---------------------------------------------------------------------------
// Stars subdivided at most once, two symbols

namespace {

void require_binary(std::size_t k) {
  if (k > 2) fail(ErrorCode::AlphabetTooLarge, "algorithm needs exactly two symbols");
  if (k < 2) fail(ErrorCode::InvalidSpec, "algorithm needs exactly two symbols");
}

StarShape once_subdivided_shape(const Graph& g) {
  auto shape = subdivided_star_shape(g);
  if (!shape) fail(ErrorCode::StructureMismatch, "carrier is not a subdivided star with a degree-3 vertex");
  for (const auto& b : shape->branches)
    if (b.size() > 2) fail(ErrorCode::StructureMismatch, "a branch is subdivided more than once");
  return *shape;
}

}  // namespace

SubdivOnceTrace trace_star_subdiv_once_k2(QueryLedger& ledger) {
  require_binary(ledger.k());
  const Graph& g = ledger.graph();
  StarShape shape = once_subdivided_shape(g);
  QuerySession session(ledger);
  int n = g.order();
  const std::size_t k = 2;

  SubdivOnceTrace trace;
  trace.split = split_leaves_internal(session);
  trace.center_residual = session.sum(2) - trace.split.leaves - 2 * trace.split.internal;
  trace.center = center_label(session, trace.split);

  std::vector<const std::vector<int>*> short_branches, long_branches;
  for (const auto& b : shape.branches) (b.size() == 1 ? short_branches : long_branches).push_back(&b);

  Labeling labeling(static_cast<std::size_t>(n), 0);
  labeling[static_cast<std::size_t>(shape.center)] = trace.center;
  const Composition& total = session.sum(n);

  if (long_branches.empty()) {
    std::vector<int> leaves;
    for (auto* b : short_branches) leaves.push_back(b->front());
    fill_ascending(labeling, leaves, trace.split.leaves);
    trace.labeling = labeling;
    return trace;
  }

  for (const auto& [x, mult] : session.multiset(n - 2).entries()) trace.residual.add(total - x, mult);

  std::int64_t a = trace.split.leaves[0], b = trace.split.leaves[1];
  trace.leaf_pairs.add(Composition({2, 0}), a * (a - 1) / 2);
  trace.leaf_pairs.add(Composition({1, 1}), a * b);
  trace.leaf_pairs.add(Composition({0, 2}), b * (b - 1) / 2);
  trace.branches = trace.residual;
  for (const auto& [c, mult] : trace.leaf_pairs.entries()) trace.branches.remove(c, mult);
  if (trace.branches.cardinality() != static_cast<std::int64_t>(long_branches.size()))
    fail(ErrorCode::OracleInconsistent, "branch count does not match the carrier");

  std::int64_t n_aa = trace.branches.count(Composition({2, 0}));
  std::int64_t n_ab = trace.branches.count(Composition({1, 1}));
  std::int64_t n_bb = trace.branches.count(Composition({0, 2}));
  Composition inner = trace.split.internal - unit(k, trace.center);
  std::int64_t ab_inner_a = inner[0] - n_aa;
  std::int64_t ab_inner_b = inner[1] - n_bb;
  if (ab_inner_a < 0 || ab_inner_b < 0 || ab_inner_a + ab_inner_b != n_ab)
    fail(ErrorCode::OracleInconsistent, "inner vertices do not match the branch compositions");

  Composition branch_content = n_aa * Composition({2, 0}) + n_ab * Composition({1, 1}) + n_bb * Composition({0, 2});
  Composition center_leaves = total - unit(k, trace.center) - branch_content;
  std::vector<int> short_leaves;
  for (auto* br : short_branches) short_leaves.push_back(br->front());
  fill_ascending(labeling, short_leaves, center_leaves);

  std::sort(long_branches.begin(), long_branches.end(),
            [](const std::vector<int>* x, const std::vector<int>* y) { return x->front() < y->front(); });
  // Branch types in order: AA, inner A with leaf B, inner B with leaf A, BB.
  std::vector<std::pair<Symbol, Symbol>> types;
  types.insert(types.end(), static_cast<std::size_t>(n_aa), {0, 0});
  types.insert(types.end(), static_cast<std::size_t>(ab_inner_a), {0, 1});
  types.insert(types.end(), static_cast<std::size_t>(ab_inner_b), {1, 0});
  types.insert(types.end(), static_cast<std::size_t>(n_bb), {1, 1});
  for (std::size_t i = 0; i < long_branches.size(); ++i) {
    labeling[static_cast<std::size_t>((*long_branches[i])[0])] = types[i].first;
    labeling[static_cast<std::size_t>((*long_branches[i])[1])] = types[i].second;
  }
  trace.labeling = labeling;
  return trace;
}

ReconstructionResult reconstruct_star_subdiv_once_k2(QueryLedger& ledger) {
  require_binary(ledger.k());
  if (is_star(ledger.graph())) return reconstruct_star(ledger);
  SubdivOnceTrace trace = trace_star_subdiv_once_k2(ledger);
  return finish(ledger, trace.labeling);
}

// ---------------------------------------------------------------------------
// Bistars

namespace {

BistarShape require_bistar(const Graph& g) {
  auto shape = bistar_shape(g);
  if (!shape) fail(ErrorCode::StructureMismatch, "carrier is not a bistar");
  return *shape;
}

std::int64_t isqrt_exact(std::int64_t x) {
  if (x < 0) fail(ErrorCode::OracleInconsistent, "negative discriminant");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) fail(ErrorCode::OracleInconsistent, "discriminant is not a square");
  return r;
}

void place_side(Labeling& labeling, const std::vector<int>& leaves, const Composition& content) {
  fill_ascending(labeling, leaves, content);
}

// Keeps the candidates whose multisets match the oracle at the first order
// where the candidates disagree.
std::vector<Labeling> resolve_candidates(QuerySession& session, std::vector<Labeling> candidates) {
  const Graph& g = session.graph();
  Alphabet alphabet = Alphabet::standard(session.k());
  std::vector<Labeling> distinct;
  for (auto& c : candidates) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || labelings_isomorphic(g, c, d);
    if (!seen) distinct.push_back(std::move(c));
  }
  while (distinct.size() > 1) {
    std::vector<std::vector<CompositionMultiset>> local;
    for (const auto& c : distinct) local.push_back(multisets_by_order(make_labeled(g, alphabet, c)));
    int split_at = 0;
    for (int t = 1; t <= g.order() && split_at == 0; ++t)
      for (std::size_t i = 1; i < local.size(); ++i)
        if (local[i][static_cast<std::size_t>(t - 1)] != local[0][static_cast<std::size_t>(t - 1)]) split_at = t;
    if (split_at == 0) break;
    const CompositionMultiset& answer = session.multiset(split_at);
    std::vector<Labeling> kept;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (local[i][static_cast<std::size_t>(split_at - 1)] == answer) kept.push_back(distinct[i]);
    if (kept.empty()) fail(ErrorCode::OracleInconsistent, "no candidate matches the oracle");
    distinct = std::move(kept);
  }
  return distinct;
}

}  // namespace

ReconstructionResult reconstruct_bistar_k2(QueryLedger& ledger) {
  require_binary(ledger.k());
  BistarShape shape = require_bistar(ledger.graph());
  QuerySession session(ledger);
  const std::size_t k = 2;
  int n = ledger.order();
  auto lu = static_cast<std::int64_t>(shape.leaves_u.size());
  auto lv = static_cast<std::int64_t>(shape.leaves_v.size());
  SplitLI split = split_leaves_internal(session);
  const Composition& total = session.sum(n);
  Labeling labeling(static_cast<std::size_t>(n), 0);

  Symbol same = 0;
  bool equal_centers = split.internal[0] == 2 || split.internal[1] == 2;
  if (equal_centers) {
    same = split.internal[0] == 2 ? 0 : 1;
    auto other = static_cast<Symbol>(1 - same);
    std::int64_t alpha = total[same], beta = total[other];
    const CompositionMultiset& m3 = session.multiset(3);
    Composition xxx(k), xxy(k);
    xxx[same] = 3;
    xxy[same] = 2;
    xxy[other] = 1;
    std::int64_t x = m3.count(xxx), y = m3.count(xxy);
    std::int64_t au = 0, av = 0;
    if (x == 0) {
      au = av = 0;
    } else if (y == 0) {
      au = lu;
      av = lv;
    } else if (lu != lv) {
      std::int64_t num = y - beta - alpha * (lv + 1) + 2 * (lv + x + 1);
      if (num % (lu - lv) != 0) fail(ErrorCode::OracleInconsistent, "a_u is not an integer");
      au = num / (lu - lv);
      av = alpha - 2 - au;
    } else {
      std::int64_t s = alpha - 2, q = 2 * x - alpha + 2;
      std::int64_t d = isqrt_exact(2 * q - s * s);
      if ((s + d) % 2 != 0) fail(ErrorCode::OracleInconsistent, "a_u is not an integer");
      au = (s + d) / 2;
      av = (s - d) / 2;
    }
    if (au < 0 || au > lu || av < 0 || av > lv)
      fail(ErrorCode::OracleInconsistent, "leaf counts out of range");
    labeling[static_cast<std::size_t>(shape.u)] = same;
    labeling[static_cast<std::size_t>(shape.v)] = same;
    Composition side_u(k), side_v(k);
    side_u[same] = au;
    side_u[other] = lu - au;
    side_v[same] = av;
    side_v[other] = lv - av;
    place_side(labeling, shape.leaves_u, side_u);
    place_side(labeling, shape.leaves_v, side_v);
    return finish(ledger, labeling);
  }

  // Centers A and B.
  std::int64_t alpha = total[0], beta = total[1];
  const CompositionMultiset& m2 = session.multiset(2);
  std::int64_t a = m2.count(Composition({2, 0}));
  std::int64_t b = m2.count(Composition({0, 2}));
  std::int64_t x = beta - b - 1;
  std::int64_t y = alpha - a - 1;
  if (x < 0 || y < 0) fail(ErrorCode::OracleInconsistent, "negative leaf count");
  Composition a_side({a, x}), b_side({y, b});
  bool u_is_a = false;
  if (lu == a + x && lv == b + y)
    u_is_a = true;
  else if (lv == a + x && lu == b + y)
    u_is_a = false;
  else
    fail(ErrorCode::OracleInconsistent, "leaf counts match neither orientation");
  labeling[static_cast<std::size_t>(shape.u)] = u_is_a ? 0 : 1;
  labeling[static_cast<std::size_t>(shape.v)] = u_is_a ? 1 : 0;
  place_side(labeling, shape.leaves_u, u_is_a ? a_side : b_side);
  place_side(labeling, shape.leaves_v, u_is_a ? b_side : a_side);
  return finish(ledger, labeling);
}

ReconstructionResult reconstruct_bistar(QueryLedger& ledger) {
  BistarShape shape = require_bistar(ledger.graph());
  const std::size_t k = ledger.k();
  if (k < 2) fail(ErrorCode::InvalidSpec, "bistar reconstruction needs at least two symbols");
  QuerySession session(ledger);
  int n = ledger.order();
  auto lu = static_cast<std::int64_t>(shape.leaves_u.size());
  auto lv = static_cast<std::int64_t>(shape.leaves_v.size());
  SplitLI split = split_leaves_internal(session);
  const Composition& total = session.sum(n);
  Labeling labeling(static_cast<std::size_t>(n), 0);

  std::optional<Symbol> same;
  for (std::size_t s = 0; s < k; ++s)
    if (split.internal[s] == 2) same = static_cast<Symbol>(s);

  if (!same) {
    std::vector<Symbol> centers;
    for (std::size_t s = 0; s < k; ++s)
      if (split.internal[s] == 1) centers.push_back(static_cast<Symbol>(s));
    if (centers.size() != 2) fail(ErrorCode::OracleInconsistent, "internal composition is not two vertices");
    Symbol X = centers[0], Y = centers[1];
    const CompositionMultiset& m2 = session.multiset(2);
    Composition x_side(k), y_side(k);
    std::int64_t x2 = 0, y2 = 0;
    for (const auto& [c, mult] : m2.entries()) {
      if (c[X] >= 1 && c[Y] >= 1) continue;
      if (c[X] >= 1) {
        Composition rest = c - unit(k, X);
        x_side += mult * rest;
        if (c[X] == 2) x2 += mult;
      } else if (c[Y] >= 1) {
        Composition rest = c - unit(k, Y);
        y_side += mult * rest;
        if (c[Y] == 2) y2 += mult;
      } else {
        fail(ErrorCode::OracleInconsistent, "edge avoids both centers");
      }
    }
    std::int64_t beta = total[X] - x2 - 1;  // X leaves on the Y center
    std::int64_t alpha = total[Y] - y2 - 1;  // Y leaves on the X center
    if (alpha < 0 || beta < 0) fail(ErrorCode::OracleInconsistent, "negative leaf count");
    x_side[Y] += alpha;
    y_side[X] += beta;
    std::int64_t lx = x_side.total(), ly = y_side.total();
    bool u_is_x = false;
    if (lu == lx && lv == ly)
      u_is_x = true;
    else if (lu == ly && lv == lx)
      u_is_x = false;
    else
      fail(ErrorCode::OracleInconsistent, "leaf counts match neither orientation");
    labeling[static_cast<std::size_t>(shape.u)] = u_is_x ? X : Y;
    labeling[static_cast<std::size_t>(shape.v)] = u_is_x ? Y : X;
    place_side(labeling, shape.leaves_u, u_is_x ? x_side : y_side);
    place_side(labeling, shape.leaves_v, u_is_x ? y_side : x_side);
    return finish(ledger, labeling);
  }

  Symbol A = *same;
  labeling[static_cast<std::size_t>(shape.u)] = A;
  labeling[static_cast<std::size_t>(shape.v)] = A;
  std::int64_t alpha = total[A];
  if (alpha == n) {
    std::fill(labeling.begin(), labeling.end(), A);
    return finish(ledger, labeling);
  }

  // Largest composition holding exactly one A: a center with all of its
  // non-A leaves, on the side with more of them.
  std::optional<Composition> found;
  int asked = 0;
  for (int i = n; i >= 1 && !found; --i) {
    if (++asked > n) fail(ErrorCode::BudgetExceeded, "single-A search exceeded n queries");
    for (const auto& [c, mult] : session.multiset(i).entries()) {
      if (c[A] == 1 && (!found || *found < c)) found = c;
    }
  }
  if (!found) fail(ErrorCode::OracleInconsistent, "no composition with a single A");
  Composition side1 = *found - unit(k, A);
  Composition non_a = total - alpha * unit(k, A);
  Composition side2 = non_a - side1;
  std::int64_t beta1 = side1.total(), beta2 = side2.total();

  auto build = [&](const Composition& u_non_a, const Composition& v_non_a) {
    Labeling l = labeling;
    Composition cu = u_non_a, cv = v_non_a;
    if (cu.total() > lu || cv.total() > lv) return std::optional<Labeling>{};
    cu[A] += lu - cu.total();
    cv[A] += lv - cv.total();
    place_side(l, shape.leaves_u, cu);
    place_side(l, shape.leaves_v, cv);
    return std::optional<Labeling>{l};
  };

  if (side1 == side2 || lu == lv) {
    auto l = build(side1, side2);
    if (!l) l = build(side2, side1);
    if (!l) fail(ErrorCode::OracleInconsistent, "non-A leaves do not fit");
    return finish(ledger, *l);
  }

  if (beta1 == beta2) {
    // Equal non-A counts with different contents: the A^3 count cannot
    // separate the sides, so compare the two orientations directly.
    std::vector<Labeling> options;
    if (auto l = build(side1, side2)) options.push_back(*l);
    if (auto l = build(side2, side1)) options.push_back(*l);
    auto kept = resolve_candidates(session, options);
    return finish_many(ledger, kept);
  }

  // Short side s, long side t with l_t = l_s + l.
  bool u_short = lu < lv;
  std::int64_t ls = u_short ? lu : lv, lt = u_short ? lv : lu, ell = lt - ls;
  Composition a3(k);
  a3[A] = 3;
  std::int64_t count_a3 = session.multiset(3).count(a3);
  std::int64_t num = ls * ls + lt * lt + beta1 * beta1 + beta2 * beta2 - 2 * count_a3 + alpha - 2 -
                     2 * (beta1 + beta2) * ls;
  if (num % (2 * ell) != 0) fail(ErrorCode::OracleInconsistent, "B_v is not an integer");
  std::int64_t b_long = num / (2 * ell);
  const Composition* long_side = nullptr;
  const Composition* short_side = nullptr;
  if (b_long == beta1) {
    long_side = &side1;
    short_side = &side2;
  } else if (b_long == beta2) {
    long_side = &side2;
    short_side = &side1;
  } else {
    fail(ErrorCode::OracleInconsistent, "B_v matches neither side");
  }
  auto l = u_short ? build(*short_side, *long_side) : build(*long_side, *short_side);
  if (!l) fail(ErrorCode::OracleInconsistent, "non-A leaves do not fit");
  return finish(ledger, *l);
}

// ---------------------------------------------------------------------------
// Sum-only reconstruction of S_{1,1,m} and T_m

namespace {

// Linear combination of sum answers: order t -> coefficient.
using Combo = std::map<int, std::int64_t>;

Combo operator+(Combo a, const Combo& b) {
  for (auto [t, c] : b) a[t] += c;
  return a;
}
Combo operator*(std::int64_t s, Combo a) {
  for (auto& [t, c] : a) c *= s;
  return a;
}
Combo operator-(const Combo& a, const Combo& b) { return a + (-1) * b; }
Combo S(int t) { return Combo{{t, 1}}; }
Combo D(int a, int b) { return S(a) - S(b); }

// Tracks every labeling consistent with the equations applied so far. Each
// equation fixes the unknown vertices it touches; twin pairs are kept in
// ascending symbol order.
class SumSolver {
 public:
  using Partial = std::vector<int>;

  SumSolver(QuerySession& session, std::vector<std::pair<int, int>> twins)
      : session_(session), index_(session.graph()), twins_(std::move(twins)) {
    hypotheses_.insert(Partial(static_cast<std::size_t>(session.order()), -1));
  }

  void apply(const Combo& combo) {
    int n = session_.order();
    std::size_t k = session_.k();
    std::vector<std::int64_t> target(k, 0);
    std::vector<std::int64_t> weight(static_cast<std::size_t>(n), 0);
    for (auto [t, c] : combo) {
      if (c == 0) continue;
      const Composition& s = session_.sum(t);
      for (std::size_t i = 0; i < k; ++i) target[i] += c * s[i];
      for (int v = 0; v < n; ++v) weight[static_cast<std::size_t>(v)] += c * index_.containing(t, v);
    }
    std::set<Partial> next;
    for (const Partial& h : hypotheses_) {
      std::vector<std::int64_t> residual = target;
      std::vector<int> unknown;
      for (int v = 0; v < n; ++v) {
        auto w = weight[static_cast<std::size_t>(v)];
        if (w == 0) continue;
        int sym = h[static_cast<std::size_t>(v)];
        if (sym < 0)
          unknown.push_back(v);
        else
          residual[static_cast<std::size_t>(sym)] -= w;
      }
      double space = std::pow(static_cast<double>(k), static_cast<double>(unknown.size()));
      if (space > 4'000'000.0) fail(ErrorCode::BudgetExceeded, "equation touches too many unknown vertices");
      Partial work = h;
      extend(work, unknown, 0, residual, weight, next);
    }
    if (next.empty()) fail(ErrorCode::OracleInconsistent, "sum answers admit no labeling");
    hypotheses_ = std::move(next);
  }

  /// Re-checks every cached answer individually.
  void confirm(const std::vector<int>& orders) {
    for (int t : orders) apply(S(t));
  }

  bool agreed(int v) const {
    int value = -2;
    for (const auto& h : hypotheses_) {
      int x = h[static_cast<std::size_t>(v)];
      if (x < 0) return false;
      if (value == -2) value = x;
      if (x != value) return false;
    }
    return true;
  }

  std::size_t size() const { return hypotheses_.size(); }

  std::vector<Labeling> labelings() const {
    std::vector<Labeling> out;
    for (const auto& h : hypotheses_) {
      Labeling l;
      for (int x : h) {
        if (x < 0) throw std::logic_error("schedule left a vertex undetermined");
        l.push_back(static_cast<Symbol>(x));
      }
      out.push_back(std::move(l));
    }
    return out;
  }

 private:
  void extend(Partial& h, const std::vector<int>& unknown, std::size_t i, std::vector<std::int64_t>& residual,
              const std::vector<std::int64_t>& weight, std::set<Partial>& out) {
    if (i == unknown.size()) {
      for (auto r : residual)
        if (r != 0) return;
      Partial copy = h;
      for (auto [a, b] : twins_) {
        int& x = copy[static_cast<std::size_t>(a)];
        int& y = copy[static_cast<std::size_t>(b)];
        if (x >= 0 && y >= 0 && x > y) std::swap(x, y);
      }
      out.insert(std::move(copy));
      return;
    }
    int v = unknown[i];
    auto w = weight[static_cast<std::size_t>(v)];
    for (std::size_t s = 0; s < residual.size(); ++s) {
      h[static_cast<std::size_t>(v)] = static_cast<int>(s);
      residual[s] -= w;
      extend(h, unknown, i + 1, residual, weight, out);
      residual[s] += w;
    }
    h[static_cast<std::size_t>(v)] = -1;
  }

  QuerySession& session_;
  SubgraphIndex index_;
  std::vector<std::pair<int, int>> twins_;
  std::set<Partial> hypotheses_;
};

std::vector<int> answered_orders(QueryLedger& ledger) {
  std::set<int> orders;
  for (const auto& r : ledger.transcript()) orders.insert(r.t);
  return {orders.begin(), orders.end()};
}

}  // namespace

ReconstructionResult reconstruct_s11m(QueryLedger& ledger) {
  const Graph& g = ledger.graph();
  if (is_star(g)) return reconstruct_star(ledger);
  auto shape = subdivided_star_shape(g);
  if (!shape || shape->branches.size() != 3) fail(ErrorCode::StructureMismatch, "carrier is not S_{1,1,m}");
  std::vector<int> twins_of_center;
  const std::vector<int>* tail = nullptr;
  for (const auto& b : shape->branches) {
    if (b.size() == 1 && twins_of_center.size() < 2)
      twins_of_center.push_back(b[0]);
    else if (tail == nullptr)
      tail = &b;
    else
      fail(ErrorCode::StructureMismatch, "carrier is not S_{1,1,m}");
  }
  if (twins_of_center.size() != 2 || tail == nullptr) fail(ErrorCode::StructureMismatch, "carrier is not S_{1,1,m}");
  std::sort(twins_of_center.begin(), twins_of_center.end());

  const int m = static_cast<int>(tail->size());
  const int n = m + 3;
  const std::int64_t ell = 3;
  // v_1 is the center, v_2..v_{m+1} the long branch.
  auto V = [&](int j) { return j == 1 ? shape->center : (*tail)[static_cast<std::size_t>(j - 2)]; };

  QuerySession session(ledger);
  SumSolver solver(session, {{twins_of_center[0], twins_of_center[1]}});
  const Combo L = ell * S(n) - S(n - 1);
  const Combo I = S(n - 1) - (ell - 1) * S(n);
  const Combo center = S(2) - L - 2 * I;

  solver.apply(center);  // v_1
  if (m == 2) {
    solver.apply(I);     // v_2
    solver.apply(S(3));  // u_1, u_2, v_3
    solver.apply(L);
  } else if (m % 2 == 1) {
    const int p = (m + 1) / 2;
    if (p == 2) {
      solver.apply(D(4, 3));  // v_3
      solver.apply(I);        // v_2
      solver.apply(D(3, 2));  // u_1, u_2
      solver.apply(L);        // v_4
    } else {
      solver.apply(D(p + 2, p + 1));  // v_{p+1}
      solver.apply(D(p + 1, p));      // v_{p-1}, v_p
      for (int i = 2; i <= p - 2; ++i) {
        int i2 = p + 1 - i;
        solver.apply(D(p + i + 1, p + i));  // v_{p+i}
        solver.apply(D(i2 + 1, i2));        // v_{i2-1}
      }
      solver.apply(D(2 * p, 2 * p - 1));      // v_{2p-1}
      solver.apply(D(2 * p + 1, 2 * p));      // v_{2p}
      solver.apply(L);                        // u_1, u_2
    }
  } else {
    const int p = m / 2;
    if (p == 2) {
      solver.apply(D(5, 4));  // v_2, v_4
      if (!solver.agreed(V(2)) || !solver.agreed(V(4))) {
        solver.apply(D(4, 3));  // v_3
        if (!solver.agreed(V(2)) || !solver.agreed(V(4))) solver.apply(2 * S(6) - S(2) - 3 * S(7));
      }
      solver.apply(I);        // v_3
      solver.apply(D(3, 2));  // u_1, u_2
      solver.apply(L);        // v_5
    } else {
      solver.apply(D(p + 1, p));  // v_{p-1}, v_p, v_{p+1}
      enum class Phase { Even, Odd, Collapse };
      Phase phase = Phase::Even;
      bool alternating = !solver.agreed(V(p));
      if (!alternating) solver.apply(D(p + 2, p + 1));  // v_{p+1}
      auto step = [&](const Combo& eq, Phase next) {
        solver.apply(eq);
        if (phase != Phase::Collapse) phase = solver.size() == 1 ? Phase::Collapse : next;
      };
      for (int j = 1; j <= p - 3; ++j) {
        step(D(p + 1 + j, p + 2 + j), Phase::Odd);  // v_{p+j+1}
        step(D(p - j + 1, p - j), Phase::Even);     // v_{p-j-1}
      }
      step(D(2 * p - 1, 2 * p), Phase::Odd);   // v_{2p}
      step(D(2 * p, 2 * p + 1), Phase::Even);  // v_{2p+1}
      if (alternating && phase != Phase::Collapse) solver.apply(S(1));  // pA + (p-1)B balance
      solver.apply(I);
      solver.apply(D(2 * p + 1, 2 * p + 2));  // v_{2p+1}
      solver.apply(L);                        // u_1, u_2
    }
  }
  solver.confirm(answered_orders(ledger));
  return finish_many(ledger, solver.labelings());
}

ReconstructionResult reconstruct_tm_odd(QueryLedger& ledger) {
  const Graph& g = ledger.graph();
  auto shape = triangle_tail_shape(g);
  if (!shape) fail(ErrorCode::StructureMismatch, "carrier is not a triangle with a tail");
  const int m = static_cast<int>(shape->path.size()) - 1;
  if (m % 2 == 0) fail(ErrorCode::EvenTail, "T_" + std::to_string(m) + " has an even tail and is confusable");

  QuerySession session(ledger);
  SumSolver solver(session, {{std::min(shape->u1, shape->u2), std::max(shape->u1, shape->u2)}});
  if (m == 1) {
    solver.apply(S(3) - 2 * S(1));  // v_1
    solver.apply(2 * S(1) - S(2));  // v_2
    solver.apply(S(1));             // u_1, u_2
  } else {
    const int p = (m + 1) / 2;
    if (p == 2) {
      solver.apply(D(3, 2));  // v_1, v_2
      solver.apply(D(4, 3));  // v_3
      solver.apply(D(5, 4));  // v_4
      solver.apply(S(1));     // u_1, u_2
    } else {
      solver.apply(D(p + 2, p + 1));  // v_{p+1}
      solver.apply(D(p + 1, p));      // v_{p-1}, v_p
      for (int i = 2; i <= p - 2; ++i) {
        int i2 = p + 1 - i;
        solver.apply(D(p + i + 1, p + i));  // v_{p+i}
        solver.apply(D(i2 + 1, i2));        // v_{i2-1}
      }
      solver.apply(D(2 * p, 2 * p - 1));  // v_{2p-1}
      solver.apply(D(3, 2));              // v_1
      solver.apply(D(2 * p + 1, 2 * p));  // v_{2p}
      solver.apply(S(1));                 // u_1, u_2
    }
  }
  solver.confirm(answered_orders(ledger));
  return finish_many(ledger, solver.labelings());
}

// ---------------------------------------------------------------------------
// Brute force

std::uint64_t brute_budget() {
  if (const char* env = std::getenv("RECON_BUDGET")) {
    try {
      auto value = std::stoull(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    fail(ErrorCode::UsageError, "RECON_BUDGET must be a positive integer");
  }
  return kDefaultBruteBudget;
}

ReconstructionResult brute_force_reconstruct(QueryLedger& ledger) { return brute_force_reconstruct(ledger, brute_budget()); }

ReconstructionResult brute_force_reconstruct(QueryLedger& ledger, std::uint64_t budget) {
  const Graph& g = ledger.graph();
  int n = g.order();
  int bound = g.is_tree() ? 12 : 8;
  if (n > bound)
    fail(ErrorCode::OrderTooLarge, "brute force limited to order " + std::to_string(bound) + " for this carrier");
  std::size_t k = ledger.k();
  if (k > 16) fail(ErrorCode::AlphabetTooLarge, "brute force limited to 16 symbols");

  QuerySession session(ledger);
  std::vector<std::vector<std::uint64_t>> target(static_cast<std::size_t>(n) + 1);
  auto pack = [](const Composition& c) {
    std::uint64_t key = 0;
    for (std::size_t s = 0; s < c.size(); ++s) key |= static_cast<std::uint64_t>(c[s]) << (4 * s);
    return key;
  };
  for (int t = 1; t <= n; ++t) {
    auto& row = target[static_cast<std::size_t>(t)];
    for (const auto& [c, mult] : session.multiset(t).entries())
      row.insert(row.end(), static_cast<std::size_t>(mult), pack(c));
    std::sort(row.begin(), row.end());
  }

  Labeling current;
  for (const auto& [c, mult] : session.multiset(1).entries())
    current.insert(current.end(), static_cast<std::size_t>(mult), only_symbol(c));
  std::sort(current.begin(), current.end());

  SubgraphIndex index(g);
  std::vector<int> orders;
  if (n >= 2) orders.push_back(2);
  for (int t = 3; t <= n; ++t) orders.push_back(t);

  std::vector<Labeling> matches;
  std::uint64_t tried = 0;
  std::vector<std::uint64_t> row;
  do {
    if (++tried > budget) fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " candidates");
    bool ok = true;
    for (int t : orders) {
      row.clear();
      for (VertexMask mask : index.of_order(t)) {
        std::uint64_t key = 0;
        for (VertexMask r = mask; r != 0; r &= r - 1)
          key += std::uint64_t{1} << (4 * current[static_cast<std::size_t>(std::countr_zero(r))]);
        row.push_back(key);
      }
      std::sort(row.begin(), row.end());
      if (row != target[static_cast<std::size_t>(t)]) {
        ok = false;
        break;
      }
    }
    if (ok) matches.push_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return finish_many(ledger, matches);
}

// ---------------------------------------------------------------------------
// Dispatch

std::vector<std::string> algorithm_names() {
  return {"star", "subdiv-once", "bistar-k2", "bistar", "s11m", "tm-odd", "brute"};
}

std::string choose_algorithm(const Graph& g, std::size_t k) {
  if (is_star(g)) return "star";
  if (auto shape = subdivided_star_shape(g)) {
    auto lens = shape->lengths();
    std::sort(lens.begin(), lens.end());
    if (lens.size() == 3 && lens[0] == 1 && lens[1] == 1) return "s11m";
    if (lens.back() <= 2 && k == 2) return "subdiv-once";
  }
  if (bistar_shape(g)) return k == 2 ? "bistar-k2" : "bistar";
  if (auto shape = triangle_tail_shape(g); shape && (shape->path.size() - 1) % 2 == 1) return "tm-odd";
  return "brute";
}

ReconstructionResult reconstruct_named(QueryLedger& ledger, const std::string& name) {
  if (name == "star") return reconstruct_star(ledger);
  if (name == "subdiv-once") return reconstruct_star_subdiv_once_k2(ledger);
  if (name == "bistar-k2") return reconstruct_bistar_k2(ledger);
  if (name == "bistar") return reconstruct_bistar(ledger);
  if (name == "s11m") return reconstruct_s11m(ledger);
  if (name == "tm-odd") return reconstruct_tm_odd(ledger);
  if (name == "brute") return brute_force_reconstruct(ledger);
  fail(ErrorCode::UsageError, "unknown algorithm '" + name + "'");
}

}  // namespace recon
