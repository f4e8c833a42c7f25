#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qs/gaussq.hpp"

namespace qs {

// Element of R_d = C[eps]/(eps^d), stored as d coefficients in ascending eps-power.
class TruncScalar {
 public:
  explicit TruncScalar(int order);
  explicit TruncScalar(std::vector<GaussQ> coeffs);

  static TruncScalar constant(int order, const GaussQ& value);
  static TruncScalar monomial(int order, int power, const GaussQ& value = 1);

  // "[c0, c1, ...]"
  static TruncScalar parse(std::string_view text);
  std::string str() const;

  int order() const { return static_cast<int>(coeffs_.size()); }
  const GaussQ& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  GaussQ& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<GaussQ>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_unit() const { return !coeffs_.front().is_zero(); }
  // coefficient of eps^(d-1)
  const GaussQ& residue() const { return coeffs_.back(); }

  TruncScalar& operator+=(const TruncScalar& o);
  TruncScalar& operator-=(const TruncScalar& o);
  TruncScalar& operator*=(const GaussQ& c);

  friend TruncScalar operator+(TruncScalar a, const TruncScalar& b) { return a += b; }
  friend TruncScalar operator-(TruncScalar a, const TruncScalar& b) { return a -= b; }
  friend TruncScalar operator*(TruncScalar a, const GaussQ& c) { return a *= c; }
  friend TruncScalar operator*(const GaussQ& c, TruncScalar a) { return a *= c; }
  friend TruncScalar operator*(const TruncScalar& a, const TruncScalar& b);
  TruncScalar operator-() const;

  friend bool operator==(const TruncScalar& a, const TruncScalar& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<GaussQ> coeffs_;
};

TruncScalar trunc_mul(const TruncScalar& a, const TruncScalar& b);
TruncScalar trunc_inv(const TruncScalar& a);
// <f, g>_d: coefficient of eps^(d-1) in f*g.
GaussQ residue_pair(const TruncScalar& f, const TruncScalar& g);
// R_c -> R_d, eps_c -> eps_d^(d/c).
TruncScalar embed_subring(const TruncScalar& a, int d);

}  // namespace qs
