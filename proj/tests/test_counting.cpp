#include "brute.hpp"
#include "doctest.h"
#include "recon/catalog.hpp"
#include "recon/counting.hpp"
#include "recon/error.hpp"

using namespace recon;

namespace {

std::vector<FamilySpec> instances() {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= 8; ++n) out.push_back(FamilySpec::path(n));
  for (int n = 1; n <= 6; ++n) out.push_back(FamilySpec::complete(n));
  for (int n = 1; n <= 7; ++n) out.push_back(FamilySpec::star(n));
  for (int m = 1; m <= 5; ++m) out.push_back(FamilySpec::s11m(m));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) out.push_back(FamilySpec::bistar(m, n));
  // Every subdivided star with at most 8 vertices (branch lengths nonincreasing).
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int left, int cap) {
    if (current.size() >= 3) out.push_back(FamilySpec::subdivided_star(current));
    for (int len = std::min(left, cap); len >= 1; --len) {
      current.push_back(len);
      grow(left - len, len);
      current.pop_back();
    }
  };
  grow(7, 7);
  return out;
}

}  // namespace

TEST_CASE("closed forms on the quoted values") {
  CHECK(chi_closed(FamilySpec::path(4), 2).value == 10);
  CHECK(chi_closed(FamilySpec::complete(3), 2).value == 4);
  CHECK(chi_closed(FamilySpec::s11m(3), 2).value == 48);
  CHECK(chi_closed(FamilySpec::s11m(1), 2).value == 8);
  CHECK(chi_enumerate(generate(FamilySpec::path(2)), 2).value == 3);
  CHECK(chi_enumerate(generate(FamilySpec::bistar(2, 2)), 2).value == chi_closed(FamilySpec::bistar(2, 2), 2).value);
  CHECK(chi_closed(FamilySpec::path(64), 2).value == (BigInt(1) << 63) + (BigInt(1) << 31));
  CHECK(report_line(chi_closed(FamilySpec::path(4), 2)) == "CHI path:4 2 10 closed-form");
  try {
    chi_closed(FamilySpec::triangle_tail(2), 2);
    FAIL("expected UnsupportedFamily");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedFamily);
  }
}

TEST_CASE("closed forms match enumeration") {
  for (const auto& spec : instances()) {
    Graph g = generate(spec);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto closed = chi_closed(spec, k).value;
      auto counted = chi_enumerate(g, k).value;
      CHECK_MESSAGE(closed == counted, spec.to_string() << " k=" << k);
      if (g.order() <= 6) CHECK(counted == brute::chi(g, static_cast<int>(k)));
      if (k == 1) CHECK(counted == 1);
      if (k > 1) CHECK(chi_closed(spec, k - 1).value <= closed);
    }
  }
}

TEST_CASE("palindromic paths") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 3; ++k) {
      long long palindromes = 0, half = 1;
      for (const auto& l : brute::all_labelings(n, k)) palindromes += std::equal(l.begin(), l.end(), l.rbegin());
      for (int i = 0; i < (n + 1) / 2; ++i) half *= k;
      CHECK(palindromes == half);
    }
}

TEST_CASE("density ratio") {
  CHECK(density_ratio(4, 2) == BigRational(4, 5));
  BigRational r20 = density_ratio(20, 2);
  CHECK(abs(r20 - BigRational(3, 2)) < BigRational(1, 100));
  BigRational previous = density_ratio(6, 2);
  for (int n = 8; n <= 40; n += 2) {
    BigRational now = density_ratio(n, 2);
    CHECK(abs(now - BigRational(3, 2)) <= abs(previous - BigRational(3, 2)));
    previous = now;
  }
}

TEST_CASE("enumeration budget") {
  try {
    chi_enumerate(generate(FamilySpec::path(10)), 5);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}
