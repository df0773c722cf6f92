#include "brute.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "recon/catalog.hpp"
#include "recon/confusability.hpp"
#include "recon/constructions.hpp"
#include "recon/error.hpp"
#include "recon/oracle.hpp"

using namespace recon;

namespace {

const Alphabet kAB = Alphabet::standard(2);
const Alphabet kABCD = Alphabet::standard(4);

LabeledPath word(const std::string& text, const Alphabet& alphabet = kABCD) { return alphabet.parse(text); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("reverse and interleave") {
  CHECK(kABCD.format(reverse(word("ABC"))) == "CBA");
  CHECK(kABCD.format(reverse(word("ABA"))) == "ABA");
  CHECK(kABCD.format(reverse(word("AAB"))) == "BAA");
  CHECK(kABCD.format(interleave(word("AB"), word("CD"))) == "ABCABDAB");
  CHECK(interleave(word("AAB"), word("ABA")).size() == 15);
  CHECK(interleave(word("AB"), {}) == word("AB"));
}

TEST_CASE("interleaved pairs are equicomposable") {
  auto pair = interleaved_pair(word("AB"), word("ABC"));
  CHECK(equicomposable(pair.first, pair.second));
  auto palin = interleaved_pair(word("AB"), word("ABA"));
  CHECK(palin.first.labeling == palin.second.labeling);
  auto aab = interleaved_pair(word("AAB"), word("AAB"));
  CHECK(equicomposable(aab.first, aab.second));
  CHECK_FALSE(labelings_isomorphic(aab.first.graph, aab.first.labeling, aab.second.labeling));

  for (int n1 = 2; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2)
      for (const auto& a : brute::all_labelings(n1, 2))
        for (const auto& b : brute::all_labelings(n2, 2)) {
          auto p = interleaved_pair(LabeledPath(a.begin(), a.end()), LabeledPath(b.begin(), b.end()), 2);
          CHECK(brute::full(p.first.graph, brute::to_ints(p.first.labeling), 2) ==
                brute::full(p.second.graph, brute::to_ints(p.second.labeling), 2));
        }
}

TEST_CASE("T_{2p} pairs") {
  auto p1 = tm_pair(1);
  CHECK(kAB.format(p1.first.labeling) == "BBABA");
  CHECK(kAB.format(p1.second.labeling) == "ABBAB");
  CHECK(p1.first.graph == generate(FamilySpec::triangle_tail(2)));
  auto p3 = tm_pair(3);
  CHECK(kAB.format(p3.first.labeling) == "BBABABABA");
  CHECK(kAB.format(p3.second.labeling) == "ABBABABAB");

  for (int p = 1; p <= 3; ++p) {
    auto pair = tm_pair(p);
    CHECK(pair.first.graph == generate(FamilySpec::triangle_tail(2 * p)));
    CHECK(brute::full(pair.first.graph, brute::to_ints(pair.first.labeling), 2) ==
          brute::full(pair.second.graph, brute::to_ints(pair.second.labeling), 2));
    CHECK_FALSE(labelings_isomorphic(pair.first.graph, pair.first.labeling, pair.second.labeling));
    auto m1 = multisets_by_order(pair.first), m2 = multisets_by_order(pair.second);
    CHECK(m1[1].count(Composition({0, 2})) == m2[1].count(Composition({0, 2})));
    for (int i = 1; i < p; ++i) {
      const auto& odd = m1[static_cast<std::size_t>(2 * i)];
      CHECK(odd.count(Composition({i, i + 1})) == p - i + 3);
      CHECK(odd.count(Composition({i + 1, i})) == p - i + 1);
    }
  }
  CHECK(code_of([] { tm_pair(0); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("attaching at the center of the interleaving") {
  // Direct position count of a_t.
  for (std::size_t n1 = 1; n1 <= 4; ++n1)
    for (std::size_t n2 = 1; n2 <= 7; n2 += 2) {
      LabeledPath p1(n1, 0), p2(n2, 0);
      p2[(n2 - 1) / 2] = 1;
      auto path = interleave(p1, p2);
      auto pos = std::find(path.begin(), path.end(), Symbol{1}) - path.begin();
      CHECK(interleave_center(n1, n2) == pos);
    }

  LabeledGraph triangle = make_labeled(generate(FamilySpec::complete(3)), 2, "ABB");
  auto pair = attach_at_center(triangle, 0, word("AB", kAB), word("ABB", kAB));
  CHECK(pair.first.order() == 14);
  CHECK(equicomposable(pair.first, pair.second));
  LabeledGraph single = make_labeled(generate(FamilySpec::path(1)), 2, "B");
  auto pendant = attach_at_center(single, 0, word("AB", kAB), word("AAB", kAB));
  CHECK(equicomposable(pendant.first, pendant.second));
  CHECK(code_of([&] { attach_at_center(triangle, 0, word("AB", kAB), word("ABBA", kAB)); }) == ErrorCode::EvenP2Length);
  CHECK(code_of([&] { attach_at_center(triangle, 0, word("A", kAB), word("ABB", kAB)); }) == ErrorCode::InvalidSpec);

  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      Labeling base(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = static_cast<Symbol>((v * 7 + n) % 2);
      LabeledGraph lg = make_labeled(g, kAB, base);
      for (int x = 0; x < n; ++x)
        for (const auto& a : brute::all_labelings(2, 2))
          for (const auto& b : brute::all_labelings(3, 2)) {
            auto out = attach_at_center(lg, x, LabeledPath(a.begin(), a.end()), LabeledPath(b.begin(), b.end()));
            CHECK(equicomposable(out.first, out.second));
          }
    }
}

TEST_CASE("non-palindromic path classes") {
  auto k2m3 = nonpalindromic_path_classes(2, 3);
  REQUIRE(k2m3.size() == 2);
  CHECK(kAB.format(k2m3[0]) == "AAB");
  CHECK(kAB.format(k2m3[1]) == "ABB");
  CHECK(nonpalindromic_path_classes(2, 2).size() == 1);
  CHECK(nonpalindromic_path_classes(2, 4).size() == 6);
  for (std::size_t k = 2; k <= 4; ++k)
    for (int m = 2; m <= 6; ++m) {
      std::size_t km = 1, half = 1;
      for (int i = 0; i < m; ++i) km *= k;
      for (int i = 0; i < (m + 1) / 2; ++i) half *= k;
      CHECK(nonpalindromic_path_classes(k, m).size() == (km - half) / 2);
    }
  CHECK(code_of([] { nonpalindromic_path_classes(1, 3); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { nonpalindromic_path_classes(10, 9); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("subdivided star family") {
  auto base = subdivided_star_family(2, 3, {false, false});
  CHECK(base.order() == 29);
  CHECK(base.graph == generate(FamilySpec::subdivided_star({7, 7, 7, 7})));
  CHECK(subdivided_star_family(2, 3, {false, false}).labeling == base.labeling);
  CHECK(code_of([] { subdivided_star_family(2, 3, {true}); }) == ErrorCode::BitLengthMismatch);

  std::vector<LabeledGraph> members;
  for (int mask = 0; mask < 4; ++mask) members.push_back(subdivided_star_family(2, 3, {(mask & 1) != 0, (mask & 2) != 0}));
  std::string fp = fingerprint(full_multiset(members[0]));
  for (std::size_t i = 0; i < members.size(); ++i) {
    CHECK(fingerprint(full_multiset(members[i])) == fp);
    for (std::size_t j = i + 1; j < members.size(); ++j)
      CHECK_FALSE(labelings_isomorphic(base.graph, members[i].labeling, members[j].labeling));
  }
}
