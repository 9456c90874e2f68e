#include "bbz/numeric.hpp"

#include <numeric>

namespace bbz {

BigInt factorial(long long n) {
  if (n < 0) throw domain_error("factorial of negative integer");
  BigInt r = 1;
  for (long long k = 2; k <= n; ++k) r *= k;
  return r;
}

int moebius(long long n) {
  if (n <= 0) throw domain_error("moebius requires n > 0");
  int r = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<long long> divisors_ascending(long long n) {
  if (n <= 0) throw domain_error("divisors of nonpositive integer");
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_integer(const BigRat& r) { return denominator(r) == 1; }

BigInt rat_to_integer(const BigRat& r, const char* what) {
  if (!is_integer(r))
    throw invariant_error(std::string(what) + " is not an integer: " + rat_to_string(r));
  return numerator(r);
}

std::string rat_to_string(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace bbz
