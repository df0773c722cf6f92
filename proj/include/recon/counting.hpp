#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "recon/catalog.hpp"

namespace recon {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class CountMethod { ClosedForm, Enumeration };
std::string to_string(CountMethod method);

struct CountResult {
  std::string family;
  std::size_t k = 0;
  BigInt value;
  CountMethod method = CountMethod::ClosedForm;
};

BigInt binomial(const BigInt& n, unsigned r);

/// Number of non-isomorphic labelings over k symbols from the family's
/// closed form. Subdivided stars with at most two branches, and Star(1), are
/// paths and use the path formula.
CountResult chi_closed(const FamilySpec& spec, std::size_t k);

/// Orbit count under the automorphism group, k^n labelings visited once.
CountResult chi_enumerate(const Graph& g, std::size_t k, const std::string& family = "");

/// chi(S_{1,1,n-3}) / chi(P_n) for n >= 4.
BigRational density_ratio(int n, std::size_t k);

/// "CHI <spec> <k> <value> <method>".
std::string report_line(const CountResult& result);

}  // namespace recon
