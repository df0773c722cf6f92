#include <memory>

#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "recon/catalog.hpp"
#include "recon/error.hpp"
#include "recon/reconstruct.hpp"

using namespace recon;

namespace {

using Algo = ReconstructionResult (*)(QueryLedger&);

struct Tally {
  std::int64_t runs = 0;
  std::int64_t max_sum = 0;
  std::int64_t max_multiset = 0;
  std::int64_t max_total = 0;
};

// Runs `algo` on every labeling of g over k symbols and checks the result.
Tally exhaust(const Graph& g, std::size_t k, Algo algo) {
  auto index = std::make_shared<const SubgraphIndex>(g);
  Alphabet alphabet = Alphabet::standard(k);
  Tally tally;
  for (const auto& ints : brute::all_labelings(g.order(), static_cast<int>(k))) {
    Labeling hidden(ints.begin(), ints.end());
    QueryLedger ledger(make_labeled(g, alphabet, hidden), index);
    ReconstructionResult r = algo(ledger);
    bool ok = r.status == Status::Unique && labelings_isomorphic(g, r.labeling, hidden);
    if (!ok) {
      FAIL_CHECK("wrong reconstruction of " << alphabet.format(hidden) << " on " << format_edges(g));
      return tally;
    }
    ++tally.runs;
    tally.max_sum = std::max(tally.max_sum, r.sum_queries);
    tally.max_multiset = std::max(tally.max_multiset, r.multiset_queries);
    tally.max_total = std::max(tally.max_total, r.sum_queries + r.multiset_queries);
  }
  return tally;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

LabeledGraph labeled(const Graph& g, std::size_t k, const std::string& text) { return make_labeled(g, k, text); }

}  // namespace

TEST_CASE("leaf/internal split and center lemma") {
  QueryLedger ledger(fixtures::fig2_labeled());
  QuerySession session(ledger);
  SplitLI split = split_leaves_internal(session);
  CHECK(split.internal == Composition({2, 1}));
  CHECK(split.leaves == Composition({2, 2}));
  CHECK(center_label(session, split) == 0);
  CHECK(ledger.total(QueryKind::Sum) == 3);

  QueryLedger p5(labeled(generate(FamilySpec::path(5)), 2, "AABAB"));
  QuerySession s5(p5);
  CHECK(code_of([&] { center_label(s5, split_leaves_internal(s5)); }) == ErrorCode::DegreeTooSmall);
  QueryLedger cyc(labeled(cycle(4), 2, "AABB"));
  CHECK(code_of([&] { split_leaves_internal(cyc); }) == ErrorCode::StructureMismatch);
}

TEST_CASE("session caches and derives sums from multisets") {
  QueryLedger ledger(fixtures::fig1_labeled());
  QuerySession session(ledger);
  session.multiset(3);
  session.multiset(3);
  Composition s3 = session.sum(3);
  session.sum(3);
  CHECK(ledger.total() == 1);
  CHECK(s3 == sum_of_order(fixtures::fig1_labeled(), SubgraphIndex(fixtures::fig1_tree()), 3));
}

TEST_CASE("stars: exhaustive soundness, two sum-queries") {
  QueryLedger s3(labeled(generate(FamilySpec::star(3)), 2, "ABAB"));
  auto r = reconstruct_star(s3);
  CHECK(r.labeling[0] == 0);
  CHECK(r.sum_queries == 2);
  CHECK(r.multiset_queries == 0);
  for (std::size_t k : {2, 3}) {
    for (int leaves = 1; leaves <= 6; ++leaves) {
      Tally t = exhaust(generate(FamilySpec::star(leaves)), k, reconstruct_star);
      CHECK(t.max_sum == 2);
      CHECK(t.max_multiset == 0);
    }
  }
  CHECK(code_of([] {
          QueryLedger l(labeled(generate(FamilySpec::path(4)), 2, "AABB"));
          reconstruct_star(l);
        }) == ErrorCode::StructureMismatch);
}

TEST_CASE("once-subdivided star trace") {
  QueryLedger ledger(fixtures::fig2_labeled());
  SubdivOnceTrace trace = trace_star_subdiv_once_k2(ledger);
  CHECK(trace.center_residual == Composition({2, 0}));
  CHECK(trace.center == 0);
  Alphabet ab = Alphabet::standard(2);
  CHECK(trace.branches.display(ab) == "{{2AB}}");
  CHECK(trace.residual.count(Composition({2, 0})) == 1);
  CHECK(trace.residual.count(Composition({1, 1})) == 6);
  CHECK(trace.residual.count(Composition({0, 2})) == 1);
  CHECK(trace.residual.cardinality() == 8);
  CHECK(labelings_isomorphic(ledger.graph(), trace.labeling, fixtures::fig2_labeled().labeling));
  CHECK(ledger.total() == 4);
  CHECK(ledger.total(QueryKind::Multiset) == 1);

  QueryLedger k3(labeled(generate(FamilySpec::subdivided_star({1, 1, 2})), 3, "ABCAB"));
  CHECK(code_of([&] { trace_star_subdiv_once_k2(k3); }) == ErrorCode::AlphabetTooLarge);
}

TEST_CASE("once-subdivided stars: exhaustive soundness at k=2") {
  std::vector<std::vector<int>> shapes;
  for (int twos = 0; twos <= 3; ++twos)
    for (int ones = 0; ones + 2 * twos <= 7; ++ones)
      if (ones + twos >= 3) {
        std::vector<int> b(static_cast<std::size_t>(ones), 1);
        b.insert(b.end(), static_cast<std::size_t>(twos), 2);
        shapes.push_back(b);
      }
  for (const auto& b : shapes) {
    Tally t = exhaust(generate(FamilySpec::subdivided_star(b)), 2, reconstruct_star_subdiv_once_k2);
    CHECK(t.max_total <= 4);
    CHECK(t.max_multiset <= 1);
  }
}

TEST_CASE("bistars: exhaustive soundness and budgets") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      Graph g = generate(FamilySpec::bistar(a, b));
      Tally t2 = exhaust(g, 2, reconstruct_bistar_k2);
      CHECK(t2.max_total <= 3);
      exhaust(g, 2, reconstruct_bistar);
      exhaust(g, 3, reconstruct_bistar);
    }
  }
  // Distinct center labels stay within three queries at k=3.
  Graph g = generate(FamilySpec::bistar(2, 3));
  auto index = std::make_shared<const SubgraphIndex>(g);
  Alphabet abc = Alphabet::standard(3);
  for (const auto& ints : brute::all_labelings(g.order(), 3)) {
    if (ints[0] == ints[1]) continue;
    QueryLedger ledger(make_labeled(g, abc, Labeling(ints.begin(), ints.end())), index);
    auto r = reconstruct_bistar(ledger);
    CHECK(r.sum_queries + r.multiset_queries <= 3);
  }
  QueryLedger one(labeled(g, 3, "ABCACBB"));
  auto r = reconstruct_bistar(one);
  CHECK(r.sum_queries + r.multiset_queries <= 3);
}

TEST_CASE("bistar with equal centers and equal non-A counts") {
  Graph g = generate(FamilySpec::bistar(2, 3));
  for (const char* text : {"AABACAA", "AACABAA", "AABCAAA"}) {
    QueryLedger ledger(labeled(g, 3, text));
    auto r = reconstruct_bistar(ledger);
    CHECK(r.status == Status::Unique);
    CHECK(labelings_isomorphic(g, r.labeling, Alphabet::standard(3).parse(text)));
  }
}

TEST_CASE("S_{1,1,m}: exhaustive sum-only soundness") {
  for (int m = 0; m <= 6; ++m) {
    Graph g = generate(FamilySpec::s11m(m));
    for (std::size_t k : {2, 3}) {
      Tally t = exhaust(g, k, reconstruct_s11m);
      CHECK(t.max_multiset == 0);
      CHECK(t.max_sum <= g.order());
    }
  }
}

TEST_CASE("T_m odd: exhaustive sum-only soundness") {
  for (int m : {1, 3, 5}) {
    Graph g = generate(FamilySpec::triangle_tail(m));
    for (std::size_t k : {2, 3}) {
      Tally t = exhaust(g, k, reconstruct_tm_odd);
      CHECK(t.max_multiset == 0);
      CHECK(t.max_sum <= g.order());
    }
  }
  QueryLedger t2(fixtures::t2_first());
  CHECK(code_of([&] { reconstruct_tm_odd(t2); }) == ErrorCode::EvenTail);
}

TEST_CASE("brute force agrees with the dedicated algorithms") {
  for (const auto& g : {generate(FamilySpec::star(3)), generate(FamilySpec::bistar(2, 2)),
                        generate(FamilySpec::s11m(2)), generate(FamilySpec::triangle_tail(1))}) {
    std::string name = choose_algorithm(g, 2);
    CHECK(name != "brute");
    auto index = std::make_shared<const SubgraphIndex>(g);
    for (const auto& ints : brute::all_labelings(g.order(), 2)) {
      Labeling hidden(ints.begin(), ints.end());
      QueryLedger a(make_labeled(g, Alphabet::standard(2), hidden), index);
      QueryLedger b(make_labeled(g, Alphabet::standard(2), hidden), index);
      auto fast = reconstruct_named(a, name);
      auto slow = brute_force_reconstruct(b);
      CHECK(slow.status == Status::Unique);
      CHECK(fast.labeling == slow.labeling);
    }
  }
}

TEST_CASE("brute force exposes confusable pairs") {
  QueryLedger gem_ledger(fixtures::gem_left());
  auto r = brute_force_reconstruct(gem_ledger);
  CHECK(r.status == Status::AmbiguousWitness);
  CHECK(r.candidates.size() == 2);
  CHECK(r.multiset_queries == 5);

  QueryLedger t2(fixtures::t2_first());
  CHECK(brute_force_reconstruct(t2).status == Status::AmbiguousWitness);
  QueryLedger small(labeled(generate(FamilySpec::path(6)), 2, "AABABB"));
  CHECK(code_of([&] { brute_force_reconstruct(small, 3); }) == ErrorCode::BudgetExceeded);
  QueryLedger big(labeled(cycle(9), 2, "AAAABBBBB"));
  CHECK(code_of([&] { brute_force_reconstruct(big); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("algorithm dispatch") {
  CHECK(choose_algorithm(generate(FamilySpec::star(4)), 3) == "star");
  CHECK(choose_algorithm(generate(FamilySpec::subdivided_star({1, 2, 2})), 2) == "subdiv-once");
  CHECK(choose_algorithm(generate(FamilySpec::s11m(4)), 3) == "s11m");
  CHECK(choose_algorithm(generate(FamilySpec::bistar(2, 3)), 2) == "bistar-k2");
  CHECK(choose_algorithm(generate(FamilySpec::bistar(2, 3)), 3) == "bistar");
  CHECK(choose_algorithm(generate(FamilySpec::triangle_tail(3)), 2) == "tm-odd");
  CHECK(choose_algorithm(generate(FamilySpec::triangle_tail(2)), 2) == "brute");
  CHECK(choose_algorithm(gem(), 2) == "brute");
  QueryLedger l(fixtures::fig1_labeled());
  CHECK(code_of([&] { reconstruct_named(l, "nope"); }) == ErrorCode::UsageError);
}
