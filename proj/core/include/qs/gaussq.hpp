#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace qs {

// Exact element of Q(i).
class GaussQ {
 public:
  GaussQ() = default;
  template <std::integral T>
  GaussQ(T value) : re_(static_cast<long>(value)) {}
  GaussQ(mpq_class re, mpq_class im = 0);

  // Accepts "a", "a/b", "a/b+c/di", "c/di", "i", "-i".
  static GaussQ parse(std::string_view text);
  std::string str() const;

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussQ conj() const { return GaussQ(re_, -im_); }
  GaussQ inverse() const;

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator/=(const GaussQ& o);

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  GaussQ operator-() const { return GaussQ(-re_, -im_); }

  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace qs
