#include "bbz/series.hpp"

#include <algorithm>
#include <sstream>

namespace bbz {

DegreeBox::DegreeBox(std::map<int, long long> limits) {
  for (auto& [v, l] : limits) {
    if (l < 0) throw domain_error("negative box limit");
    if (l > 0) lim_[v] = l;
  }
}

DegreeBox DegreeBox::cube(const std::vector<int>& vertices, long long limit) {
  std::map<int, long long> m;
  for (int v : vertices) m[v] = limit;
  return DegreeBox(std::move(m));
}

bool DegreeBox::contains(const RootVec& alpha) const {
  for (auto& [v, k] : alpha.terms()) {
    if (k < 0) return false;
    if (k > limit(v)) return false;
  }
  return true;
}

long long DegreeBox::limit(int v) const {
  auto it = lim_.find(v);
  return it == lim_.end() ? 0 : it->second;
}

long long DegreeBox::total() const {
  long long t = 0;
  for (auto& [v, l] : lim_) t += l;
  return t;
}

std::vector<int> DegreeBox::vertices() const {
  std::vector<int> r;
  for (auto& [v, l] : lim_) r.push_back(v);
  return r;
}

std::vector<RootVec> DegreeBox::enumerate() const {
  std::vector<RootVec> out{RootVec{}};
  for (auto& [v, l] : lim_) {
    std::vector<RootVec> next;
    next.reserve(out.size() * (l + 1));
    for (auto& base : out)
      for (long long k = 0; k <= l; ++k) {
        RootVec r = base;
        r.set_coeff(v, k);
        next.push_back(std::move(r));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), height_lex_less);
  return out;
}

FormalSeries FormalSeries::constant(const DegreeBox& box, const BigRat& c) {
  FormalSeries s(box);
  s.add_term(RootVec{}, c);
  return s;
}

BigRat FormalSeries::coeff(const RootVec& beta) const {
  auto it = t_.find(beta);
  return it == t_.end() ? BigRat(0) : it->second;
}

void FormalSeries::add_term(const RootVec& beta, const BigRat& c) {
  if (c == 0 || !box_.contains(beta)) return;
  auto [it, fresh] = t_.emplace(beta, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (!(box_ == o.box_)) throw domain_error("series box mismatch");
  for (auto& [b, c] : o.t_) add_term(b, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  if (!(box_ == o.box_)) throw domain_error("series box mismatch");
  for (auto& [b, c] : o.t_) add_term(b, -c);
  return *this;
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
  FormalSeries r = *this;
  r += o;
  return r;
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const {
  FormalSeries r = *this;
  r -= o;
  return r;
}

FormalSeries FormalSeries::operator*(const BigRat& c) const {
  FormalSeries r(box_);
  if (c != 0)
    for (auto& [b, v] : t_) r.add_term(b, v * c);
  return r;
}

FormalSeries mul(const FormalSeries& a, const FormalSeries& b) {
  if (!(a.box() == b.box())) throw domain_error("series box mismatch");
  const FormalSeries& small = a.terms().size() <= b.terms().size() ? a : b;
  const FormalSeries& large = a.terms().size() <= b.terms().size() ? b : a;
  FormalSeries r(a.box());
  for (auto& [b1, c1] : small.terms())
    for (auto& [b2, c2] : large.terms()) r.add_term(b1 + b2, c1 * c2);
  return r;
}

static FormalSeries invert(const FormalSeries& a) {
  BigRat c0 = a.coeff(RootVec{});
  if (c0 == 0) throw domain_error("series with zero constant term is not invertible");
  // inv[beta] = -(1/c0) * sum_{0 < gamma <= beta} a[gamma] inv[beta-gamma]
  FormalSeries inv(a.box());
  std::vector<RootVec> order = a.box().enumerate(); // height-then-lex: prefixes ready
  std::map<RootVec, BigRat> vals;
  for (auto& beta : order) {
    if (beta.is_zero()) {
      vals[beta] = 1 / c0;
      continue;
    }
    BigRat acc = 0;
    for (auto& [gamma, cg] : a.terms()) {
      if (gamma.is_zero() || !gamma.dominated_by(beta)) continue;
      auto it = vals.find(beta - gamma);
      if (it != vals.end()) acc += cg * it->second;
    }
    if (acc != 0) vals[beta] = -acc / c0;
  }
  for (auto& [b, c] : vals) inv.add_term(b, c);
  return inv;
}

FormalSeries pow(const FormalSeries& a, long long n) {
  if (n == 0) return FormalSeries::one(a.box());
  FormalSeries base = n > 0 ? a : invert(a);
  unsigned long long e = n > 0 ? (unsigned long long)n : (unsigned long long)(-n);
  FormalSeries acc = FormalSeries::one(a.box());
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

FormalSeries neg_log_one_minus(const FormalSeries& u) {
  if (u.coeff(RootVec{}) != 0)
    throw domain_error("neg_log_one_minus requires zero constant term");
  FormalSeries result(u.box());
  FormalSeries p = FormalSeries::one(u.box());
  long long H = u.box().total();
  for (long long n = 1; n <= H; ++n) {
    p = mul(p, u);
    if (p.is_zero()) break;
    result += p * BigRat(1, n);
  }
  return result;
}

std::string to_text(const FormalSeries& s) {
  if (s.is_zero()) return "0";
  std::vector<RootVec> keys;
  for (auto& [b, c] : s.terms()) keys.push_back(b);
  std::sort(keys.begin(), keys.end(), height_lex_less);
  std::ostringstream os;
  for (auto& b : keys) {
    os << rat_to_string(s.coeff(b));
    if (!b.is_zero()) os << " * e^-(" << to_string(b) << ")";
    os << "\n";
  }
  return os.str();
}

} // namespace bbz
