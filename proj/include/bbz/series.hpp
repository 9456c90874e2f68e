#pragma once

#include <map>
#include <string>
#include <vector>

#include "bbz/cartan.hpp"
#include "bbz/numeric.hpp"

namespace bbz {

/// Componentwise truncation window.  alpha lies in the box iff
/// alpha_i <= limit_i for every i and supp(alpha) is covered by the limits.
class DegreeBox {
public:
  DegreeBox() = default;
  explicit DegreeBox(std::map<int, long long> limits);
  static DegreeBox cube(const std::vector<int>& vertices, long long limit);

  bool contains(const RootVec& alpha) const;
  long long limit(int v) const;
  long long total() const; // sum of limits = maximal height in the box
  const std::map<int, long long>& limits() const { return lim_; }
  std::vector<int> vertices() const;

  /// Every alpha in the box including 0, sorted by height then lex.
  std::vector<RootVec> enumerate() const;

  bool operator==(const DegreeBox&) const = default;

private:
  std::map<int, long long> lim_; // no zero limits stored
};

/// Sparse formal series over the monoid Q_+ with exact rational coefficients,
/// truncated to a box.  The stored key beta represents the monomial e^{-beta}.
class FormalSeries {
public:
  explicit FormalSeries(DegreeBox box) : box_(std::move(box)) {}
  static FormalSeries constant(const DegreeBox& box, const BigRat& c);
  static FormalSeries one(const DegreeBox& box) { return constant(box, 1); }

  const DegreeBox& box() const { return box_; }
  const std::map<RootVec, BigRat>& terms() const { return t_; }
  BigRat coeff(const RootVec& beta) const;
  bool is_zero() const { return t_.empty(); }

  /// Adds c * e^{-beta}; silently drops terms outside the box (truncation
  /// contract) and never stores zero coefficients.
  void add_term(const RootVec& beta, const BigRat& c);

  FormalSeries& operator+=(const FormalSeries&);
  FormalSeries& operator-=(const FormalSeries&);
  FormalSeries operator+(const FormalSeries&) const;
  FormalSeries operator-(const FormalSeries&) const;
  FormalSeries operator*(const BigRat& c) const;

  bool operator==(const FormalSeries&) const = default;

private:
  DegreeBox box_;
  std::map<RootVec, BigRat> t_;
};

FormalSeries mul(const FormalSeries& a, const FormalSeries& b);

/// a^n for signed n; n < 0 requires an invertible constant term.
FormalSeries pow(const FormalSeries& a, long long n);

/// -log(1-u) = sum_{n>=1} u^n / n; u must have zero constant term.
FormalSeries neg_log_one_minus(const FormalSeries& u);

/// Sorted "coeff * e^{-(...)}" lines.
std::string to_text(const FormalSeries& s);

} // namespace bbz
