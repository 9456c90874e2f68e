#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bbz/numeric.hpp"

namespace bbz {

/// Finitely supported integer vector over the vertex index set.  Nonnegative
/// vectors are the elements of Q_+ (sums of simple roots); signed values
/// appear transiently under the Weyl action and inside weight offsets.
class RootVec {
public:
  using Map = std::map<int, long long>;

  RootVec() = default;
  static RootVec unit(int v, long long k = 1);

  long long coeff(int v) const;
  void set_coeff(int v, long long k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_nonnegative() const;
  long long height() const; // sum of coefficients
  std::vector<int> support() const;
  long long coefficient_gcd() const; // gcd of |coeffs|, 0 for the zero vector
  bool supported_on(const std::set<int>& vs) const;

  /// Componentwise a_i <= b_i (absent coefficients count as 0).
  bool dominated_by(const RootVec& other) const;

  RootVec& operator+=(const RootVec&);
  RootVec& operator-=(const RootVec&);
  RootVec operator+(const RootVec&) const;
  RootVec operator-(const RootVec&) const;
  RootVec scaled(long long k) const;
  RootVec divided(long long d) const; // exact division or domain_error

  bool operator==(const RootVec&) const = default;
  bool operator<(const RootVec& o) const { return coeffs_ < o.coeffs_; }

  const Map& terms() const { return coeffs_; }

private:
  Map coeffs_; // invariant: no stored zeros
};

/// All positive d dividing every coefficient of alpha, ascending.
std::vector<long long> divisors_of(const RootVec& alpha);

/// Display/order helper: height first, then map-lexicographic.
bool height_lex_less(const RootVec& a, const RootVec& b);

std::string to_string(const RootVec& v);

/// Weight = symbolic base plus a root-lattice offset.  The base contributes
/// <h_i, base> = (rho part) + custom[i]; every weight the pipeline touches is
/// of the form rho - s - gamma or lambda - gamma, so full weight-lattice
/// coordinates are never needed.
class Weight {
public:
  static Weight zero();
  static Weight rho();
  static Weight custom(std::map<int, long long> pairings);

  Weight shifted(const RootVec& delta) const; // offset += delta
  Weight plus_rho() const;                    // base gains the rho component

  long long base_pairing(int i) const;
  bool base_has_rho() const { return rho_; }
  bool same_base(const Weight& o) const;

  const RootVec& offset() const { return offset_; }
  RootVec& offset() { return offset_; }

private:
  bool rho_ = false;
  std::map<int, long long> custom_;
  RootVec offset_;
};

enum class VertexClass { Real, Isotropic, ImaginaryNonIso };

/// Borcherds-Cartan data: entry rule (explicit matrix or closed form),
/// symmetrizers, charge, and a finite declared window.  Any access outside
/// the window is an error, never silent truncation.
class BorcherdsCartanDatum {
public:
  using EntryFn = std::function<long long(int, int)>;
  using ChargeFn = std::function<BigInt(int)>;

  BorcherdsCartanDatum(std::vector<int> vertices,
                       std::vector<std::vector<long long>> matrix,
                       std::vector<long long> symmetrizers = {},
                       std::map<int, BigInt> charge = {});

  static BorcherdsCartanDatum from_rule(std::vector<int> window, EntryFn entries,
                                        std::map<int, long long> symmetrizers = {},
                                        ChargeFn charge = {});

  const std::vector<int>& window() const { return window_; }
  bool in_window(int i) const { return wset_.count(i) != 0; }

  long long entry(int i, int j) const; // a_ij
  long long symmetrizer(int i) const;  // s_i
  BigInt charge(int i) const;          // f(i)
  VertexClass classify(int i) const;

  std::vector<int> real_vertices() const;
  std::vector<int> imaginary_vertices() const;

  long long pairing(int i, const RootVec& beta) const; // <h_i, beta>
  long long pairing(int i, const Weight& w) const;     // <h_i, w>
  long long bilinear(const RootVec& a, const RootVec& b) const;
  long long bilinear(const Weight& a, const RootVec& b) const;

private:
  std::vector<int> window_;
  std::set<int> wset_;
  EntryFn entries_;
  std::map<int, long long> sym_;
  ChargeFn charge_;

  void check_index(int i) const;
  void validate() const;
};

struct ExpandedDatum {
  BorcherdsCartanDatum datum;              // over fresh ids 0..N-1, charge == 1
  std::vector<std::pair<int, int>> origin; // expanded id -> (original vertex, copy 1..f(i))
};

/// Block-expand the charge into the index set I~ = {(i,p) | 1 <= p <= f(i)}.
/// Throws cap_error when the expanded window would exceed `cap` (signals
/// "use native charge weights instead").
ExpandedDatum expand_charge(const BorcherdsCartanDatum&, long long cap = 64);

/// Minimal positive integral symmetrizers for the matrix on `vertices`,
/// or schema_error when none exist.
std::map<int, long long> minimal_symmetrizers(const std::vector<int>& vertices,
                                              const std::function<long long(int, int)>& entry);

} // namespace bbz
