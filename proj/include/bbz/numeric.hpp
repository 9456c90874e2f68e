#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Error taxonomy shared by the whole library.  The CLI maps these onto its
// exit-code contract (2 schema, 3 invariant, 4 cap).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt factorial(long long n);

/// Classical Moebius function.
int moebius(long long n);

/// Divisors of n > 0 in ascending order.
std::vector<long long> divisors_ascending(long long n);

bool is_integer(const BigRat& r);

/// Exact conversion to an integer; throws invariant_error naming `what`
/// when r has a nontrivial denominator.
BigInt rat_to_integer(const BigRat& r, const char* what);

/// Canonical rendering: plain integer when the denominator is 1,
/// "num/den" otherwise.
std::string rat_to_string(const BigRat& r);

} // namespace bbz
