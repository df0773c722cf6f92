#include "recon/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "recon/error.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

std::string to_string(CountMethod method) { return method == CountMethod::ClosedForm ? "closed-form" : "enumeration"; }

BigInt binomial(const BigInt& n, unsigned r) {
  if (n < r) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

namespace {

BigInt power(std::size_t k, long e) { return boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(e)); }

BigInt chi_path(std::size_t k, long n) { return (power(k, n) + power(k, (n + 1) / 2)) / 2; }

BigInt chi_complete(std::size_t k, long n) { return binomial(BigInt(n) + k - 1, static_cast<unsigned>(n)); }

// k * prod over equal-length groups of binom(k^i + n_i - 1, n_i).
BigInt chi_subdivided(std::size_t k, const std::vector<int>& branches) {
  std::map<int, unsigned> groups;
  for (int len : branches) ++groups[len];
  BigInt out = k;
  for (auto [len, count] : groups) out *= binomial(power(k, len) + count - 1, count);
  return out;
}

BigInt chi_bistar(std::size_t k, long m, long n) {
  BigInt side_m = binomial(BigInt(m) + k - 1, static_cast<unsigned>(m));
  BigInt side_n = binomial(BigInt(n) + k - 1, static_cast<unsigned>(n));
  if (m != n) return BigInt(k) * k * side_m * side_n;
  BigInt one = BigInt(k) * side_n;
  return (one * one + one) / 2;
}

}  // namespace

CountResult chi_closed(const FamilySpec& spec, std::size_t k) {
  if (k < 1) fail(ErrorCode::InvalidSpec, "k must be at least 1");
  const auto& p = spec.params;
  Graph g = generate(spec);
  CountResult r{spec.to_string(), k, 0, CountMethod::ClosedForm};
  switch (spec.kind) {
    case FamilySpec::Kind::Path:
      r.value = chi_path(k, p[0]);
      break;
    case FamilySpec::Kind::Complete:
      r.value = chi_complete(k, p[0]);
      break;
    case FamilySpec::Kind::Star:
      r.value = p[0] == 1 ? chi_path(k, 2) : BigInt(k) * binomial(BigInt(p[0]) + k - 1, static_cast<unsigned>(p[0]));
      break;
    case FamilySpec::Kind::SubdividedStar:
      r.value = p.size() <= 2 ? chi_path(k, g.order()) : chi_subdivided(k, p);
      break;
    case FamilySpec::Kind::Bistar:
      r.value = chi_bistar(k, p[0], p[1]);
      break;
    case FamilySpec::Kind::TriangleTail:
      fail(ErrorCode::UnsupportedFamily, "no closed form for " + spec.to_string());
  }
  return r;
}

CountResult chi_enumerate(const Graph& g, std::size_t k, const std::string& family) {
  if (k < 1) fail(ErrorCode::InvalidSpec, "k must be at least 1");
  int n = g.order();
  double space = std::pow(static_cast<double>(k), n);
  if (space > static_cast<double>(brute_budget()))
    fail(ErrorCode::BudgetExceeded, std::to_string(k) + "^" + std::to_string(n) + " labelings exceed the budget");
  auto group = automorphism_group(g);
  auto total = static_cast<std::uint64_t>(space + 0.5);
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) weight[static_cast<std::size_t>(v)] = v == 0 ? 1 : weight[static_cast<std::size_t>(v - 1)] * k;

  std::vector<bool> seen(total, false);
  Labeling l(static_cast<std::size_t>(n), 0);
  std::uint64_t orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!seen[code]) {
      ++orbits;
      for (int v = 0; v < n; ++v) l[static_cast<std::size_t>(v)] = static_cast<Symbol>(code / weight[static_cast<std::size_t>(v)] % k);
      for (const auto& sigma : group) {
        std::uint64_t image = 0;
        for (int v = 0; v < n; ++v)
          image += l[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])] * weight[static_cast<std::size_t>(v)];
        seen[image] = true;
      }
    }
  }
  return CountResult{family.empty() ? format_edges(g) : family, k, orbits, CountMethod::Enumeration};
}

BigRational density_ratio(int n, std::size_t k) {
  if (n < 4) fail(ErrorCode::OrderOutOfRange, "density ratio needs n >= 4");
  BigInt s = chi_closed(FamilySpec::s11m(n - 3), k).value;
  BigInt p = chi_closed(FamilySpec::path(n), k).value;
  return BigRational(s, p);
}

std::string report_line(const CountResult& result) {
  return "CHI " + result.family + " " + std::to_string(result.k) + " " + result.value.str() + " " +
         to_string(result.method);
}

}  // namespace recon
