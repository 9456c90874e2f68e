#include "bbz/cartan.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

namespace bbz {

// ---------------------------------------------------------------- RootVec

RootVec RootVec::unit(int v, long long k) {
  RootVec r;
  r.set_coeff(v, k);
  return r;
}

long long RootVec::coeff(int v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? 0 : it->second;
}

void RootVec::set_coeff(int v, long long k) {
  if (k == 0)
    coeffs_.erase(v);
  else
    coeffs_[v] = k;
}

bool RootVec::is_nonnegative() const {
  for (auto& [v, k] : coeffs_)
    if (k < 0) return false;
  return true;
}

long long RootVec::height() const {
  long long h = 0;
  for (auto& [v, k] : coeffs_) h += k;
  return h;
}

std::vector<int> RootVec::support() const {
  std::vector<int> s;
  s.reserve(coeffs_.size());
  for (auto& [v, k] : coeffs_) s.push_back(v);
  return s;
}

long long RootVec::coefficient_gcd() const {
  long long g = 0;
  for (auto& [v, k] : coeffs_) g = std::gcd(g, k < 0 ? -k : k);
  return g;
}

bool RootVec::supported_on(const std::set<int>& vs) const {
  for (auto& [v, k] : coeffs_)
    if (!vs.count(v)) return false;
  return true;
}

bool RootVec::dominated_by(const RootVec& other) const {
  for (auto& [v, k] : coeffs_)
    if (k > other.coeff(v)) return false;
  for (auto& [v, k] : other.coeffs_)
    if (coeff(v) > k) return false; // covers negative entries of `other`
  return true;
}

RootVec& RootVec::operator+=(const RootVec& o) {
  for (auto& [v, k] : o.coeffs_) set_coeff(v, coeff(v) + k);
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  for (auto& [v, k] : o.coeffs_) set_coeff(v, coeff(v) - k);
  return *this;
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  r += o;
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  r -= o;
  return r;
}

RootVec RootVec::scaled(long long k) const {
  RootVec r;
  if (k != 0)
    for (auto& [v, c] : coeffs_) r.coeffs_[v] = c * k;
  return r;
}

RootVec RootVec::divided(long long d) const {
  if (d <= 0) throw domain_error("division of RootVec by nonpositive integer");
  RootVec r;
  for (auto& [v, c] : coeffs_) {
    if (c % d != 0) throw domain_error("RootVec not divisible by " + std::to_string(d));
    r.coeffs_[v] = c / d;
  }
  return r;
}

std::vector<long long> divisors_of(const RootVec& alpha) {
  if (alpha.is_zero()) throw domain_error("divisors_of: zero vector");
  if (!alpha.is_nonnegative()) throw domain_error("divisors_of: negative coefficient");
  return divisors_ascending(alpha.coefficient_gcd());
}

bool height_lex_less(const RootVec& a, const RootVec& b) {
  long long ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

std::string to_string(const RootVec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [vert, k] : v.terms()) {
    if (!first) os << (k >= 0 ? "+" : "");
    first = false;
    if (k != 1) os << k << "*";
    os << "a" << vert;
  }
  return os.str();
}

// ----------------------------------------------------------------- Weight

Weight Weight::zero() { return Weight{}; }

Weight Weight::rho() {
  Weight w;
  w.rho_ = true;
  return w;
}

Weight Weight::custom(std::map<int, long long> pairings) {
  Weight w;
  for (auto& [v, k] : pairings)
    if (k != 0) w.custom_[v] = k;
  return w;
}

Weight Weight::shifted(const RootVec& delta) const {
  Weight w = *this;
  w.offset_ += delta;
  return w;
}

Weight Weight::plus_rho() const {
  if (rho_) throw domain_error("weight base already contains rho");
  Weight w = *this;
  w.rho_ = true;
  return w;
}

long long Weight::base_pairing(int i) const {
  long long p = rho_ ? 1 : 0;
  auto it = custom_.find(i);
  if (it != custom_.end()) p += it->second;
  return p;
}

bool Weight::same_base(const Weight& o) const {
  return rho_ == o.rho_ && custom_ == o.custom_;
}

// ------------------------------------------------------------------ Datum

BorcherdsCartanDatum::BorcherdsCartanDatum(std::vector<int> vertices,
                                           std::vector<std::vector<long long>> matrix,
                                           std::vector<long long> symmetrizers,
                                           std::map<int, BigInt> charge)
    : window_(std::move(vertices)) {
  const size_t n = window_.size();
  if (matrix.size() != n) throw schema_error("matrix size does not match vertex list");
  for (auto& row : matrix)
    if (row.size() != n) throw schema_error("matrix is not square");
  wset_.insert(window_.begin(), window_.end());
  if (wset_.size() != n) throw schema_error("duplicate vertex id");

  std::map<int, size_t> pos;
  for (size_t k = 0; k < n; ++k) pos[window_[k]] = k;
  auto mat = std::make_shared<std::vector<std::vector<long long>>>(std::move(matrix));
  auto posmap = std::make_shared<std::map<int, size_t>>(std::move(pos));
  entries_ = [mat, posmap](int i, int j) { return (*mat)[posmap->at(i)][posmap->at(j)]; };

  if (symmetrizers.empty()) {
    sym_ = minimal_symmetrizers(window_, entries_);
  } else {
    if (symmetrizers.size() != n) throw schema_error("symmetrizer count does not match vertex list");
    for (size_t k = 0; k < n; ++k) sym_[window_[k]] = symmetrizers[k];
  }

  auto ch = std::make_shared<std::map<int, BigInt>>(std::move(charge));
  charge_ = [ch](int i) {
    auto it = ch->find(i);
    return it == ch->end() ? BigInt(1) : it->second;
  };
  validate();
}

BorcherdsCartanDatum BorcherdsCartanDatum::from_rule(std::vector<int> window, EntryFn entries,
                                                     std::map<int, long long> symmetrizers,
                                                     ChargeFn charge) {
  BorcherdsCartanDatum d;
  d.window_ = std::move(window);
  d.wset_.insert(d.window_.begin(), d.window_.end());
  if (d.wset_.size() != d.window_.size()) throw schema_error("duplicate vertex id");
  d.entries_ = std::move(entries);
  if (symmetrizers.empty())
    d.sym_ = minimal_symmetrizers(d.window_, d.entries_);
  else
    d.sym_ = std::move(symmetrizers);
  if (charge)
    d.charge_ = std::move(charge);
  else
    d.charge_ = [](int) { return BigInt(1); };
  d.validate();
  return d;
}

void BorcherdsCartanDatum::check_index(int i) const {
  if (!in_window(i))
    throw domain_error("vertex " + std::to_string(i) + " outside the declared window");
}

long long BorcherdsCartanDatum::entry(int i, int j) const {
  check_index(i);
  check_index(j);
  return entries_(i, j);
}

long long BorcherdsCartanDatum::symmetrizer(int i) const {
  check_index(i);
  auto it = sym_.find(i);
  if (it == sym_.end()) throw schema_error("missing symmetrizer for vertex " + std::to_string(i));
  return it->second;
}

BigInt BorcherdsCartanDatum::charge(int i) const {
  check_index(i);
  return charge_(i);
}

VertexClass BorcherdsCartanDatum::classify(int i) const {
  long long a = entry(i, i);
  if (a == 2) return VertexClass::Real;
  if (a == 0) return VertexClass::Isotropic;
  return VertexClass::ImaginaryNonIso;
}

std::vector<int> BorcherdsCartanDatum::real_vertices() const {
  std::vector<int> r;
  for (int v : window_)
    if (classify(v) == VertexClass::Real) r.push_back(v);
  return r;
}

std::vector<int> BorcherdsCartanDatum::imaginary_vertices() const {
  std::vector<int> r;
  for (int v : window_)
    if (classify(v) != VertexClass::Real) r.push_back(v);
  return r;
}

long long BorcherdsCartanDatum::pairing(int i, const RootVec& beta) const {
  long long p = 0;
  for (auto& [j, k] : beta.terms()) p += k * entry(i, j);
  return p;
}

long long BorcherdsCartanDatum::pairing(int i, const Weight& w) const {
  check_index(i);
  return w.base_pairing(i) + pairing(i, w.offset());
}

long long BorcherdsCartanDatum::bilinear(const RootVec& a, const RootVec& b) const {
  // (alpha_i, alpha_j) = s_i a_ij
  long long r = 0;
  for (auto& [i, ki] : a.terms())
    for (auto& [j, kj] : b.terms()) r += ki * kj * symmetrizer(i) * entry(i, j);
  return r;
}

long long BorcherdsCartanDatum::bilinear(const Weight& a, const RootVec& b) const {
  // (alpha_j, lambda) = s_j <h_j, lambda>
  long long r = 0;
  for (auto& [j, kj] : b.terms()) r += kj * symmetrizer(j) * pairing(j, a);
  return r;
}

void BorcherdsCartanDatum::validate() const {
  for (int i : window_) {
    long long aii = entries_(i, i);
    if (aii != 2 && (aii > 0 || aii % 2 != 0))
      throw invariant_error("diagonal entry a_" + std::to_string(i) + std::to_string(i) +
                            " not in {2,0,-2,-4,...}");
    long long si = symmetrizer(i);
    if (si <= 0) throw invariant_error("symmetrizer must be a positive integer");
    if (aii == 2 && charge_(i) != 1)
      throw invariant_error("charge must be 1 on real vertex " + std::to_string(i));
    if (charge_(i) < 1) throw invariant_error("charge must be a positive integer");
  }
  for (int i : window_)
    for (int j : window_) {
      if (i == j) continue;
      long long aij = entries_(i, j), aji = entries_(j, i);
      if (aij > 0) throw invariant_error("off-diagonal entry a_ij > 0");
      if ((aij == 0) != (aji == 0)) throw invariant_error("a_ij = 0 but a_ji != 0");
      if (symmetrizer(i) * aij != symmetrizer(j) * aji)
        throw invariant_error("symmetrizability fails at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
}

ExpandedDatum expand_charge(const BorcherdsCartanDatum& d, long long cap) {
  long long total = 0;
  for (int v : d.window()) {
    BigInt f = d.charge(v);
    if (f > cap) // any single large f already blows the window
      throw cap_error("expanded window would exceed the cap; use native charge weights");
    total += f.convert_to<long long>();
    if (total > cap)
      throw cap_error("expanded window would exceed the cap; use native charge weights");
  }
  std::vector<std::pair<int, int>> origin;
  std::map<int, long long> sym;
  for (int v : d.window()) {
    long long f = d.charge(v).convert_to<long long>();
    for (int p = 1; p <= f; ++p) {
      sym[(int)origin.size()] = d.symmetrizer(v);
      origin.emplace_back(v, p);
    }
  }
  std::vector<int> window((size_t)total);
  for (int k = 0; k < total; ++k) window[k] = k;
  auto org = std::make_shared<std::vector<std::pair<int, int>>>(origin);
  const BorcherdsCartanDatum* base = &d;
  auto entries = [org, base](int i, int j) {
    return base->entry((*org)[i].first, (*org)[j].first);
  };
  // The expanded datum borrows the original's entry rule; callers keep the
  // original alive for the expanded datum's lifetime (test-scale use only).
  auto datum = BorcherdsCartanDatum::from_rule(window, entries, sym, {});
  return ExpandedDatum{std::move(datum), std::move(origin)};
}

std::map<int, long long> minimal_symmetrizers(const std::vector<int>& vertices,
                                              const std::function<long long(int, int)>& entry) {
  // Propagate s_i a_ij = s_j a_ji along the graph of nonzero off-diagonal
  // entries; each component is scaled to minimal positive integers.
  std::map<int, BigRat> ratio;
  std::map<int, long long> result;
  std::set<int> done;
  for (int start : vertices) {
    if (done.count(start)) continue;
    std::vector<int> comp{start};
    ratio[start] = 1;
    done.insert(start);
    for (size_t k = 0; k < comp.size(); ++k) {
      int i = comp[k];
      for (int j : vertices) {
        if (i == j) continue;
        long long aij = entry(i, j), aji = entry(j, i);
        if (aij == 0 && aji == 0) continue;
        if (aij == 0 || aji == 0) throw schema_error("not symmetrizable: a_ij = 0 != a_ji");
        BigRat want = ratio[i] * BigRat(aij) / BigRat(aji); // s_j = s_i a_ij / a_ji
        if (done.count(j)) {
          if (ratio[j] != want) throw schema_error("not symmetrizable: inconsistent ratios");
        } else {
          ratio[j] = want;
          done.insert(j);
          comp.push_back(j);
        }
      }
    }
    BigInt lcm_den = 1;
    for (int i : comp) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(ratio[i]));
    BigInt gcd_num = 0;
    for (int i : comp) {
      BigInt scaled = numerator(ratio[i]) * (lcm_den / denominator(ratio[i]));
      if (scaled <= 0) throw schema_error("not symmetrizable: nonpositive symmetrizer");
      gcd_num = boost::multiprecision::gcd(gcd_num, scaled);
    }
    for (int i : comp) {
      BigInt s = numerator(ratio[i]) * (lcm_den / denominator(ratio[i])) / gcd_num;
      result[i] = s.convert_to<long long>();
    }
  }
  return result;
}

} // namespace bbz
