#pragma once

#include <cstddef>
#include <vector>

#include "qs/matrix.hpp"
#include "qs/trunc.hpp"

namespace qs {

// The free R_order-module C^rank (x) R_order. Its C-basis {v_j eps^k} is ordered
// vertex-major, then by ascending eps-power: index j * order + k.
struct ModShape {
  std::size_t rank = 0;
  int order = 1;

  std::size_t dim() const { return rank * static_cast<std::size_t>(order); }
  friend bool operator==(const ModShape&, const ModShape&) = default;
};

// N^power * m, where N is multiplication by eps on the row module.
QMatrix shift_rows(const QMatrix& m, ModShape rows, int power);
// m * N^power, where N is multiplication by eps on the column module.
QMatrix shift_cols(const QMatrix& m, ModShape cols, int power);

// An R_base-linear map src -> dst, where R_base acts on a module of order a
// through eps_base -> eps_a^(a/base).
class RMap {
 public:
  RMap(ModShape src, ModShape dst, int base, QMatrix flat);

  static RMap zero(ModShape src, ModShape dst, int base);
  static RMap identity(ModShape shape);
  // sum_k xi_k eps^k with xi_k : C^src_rank -> C^dst_rank
  static RMap from_coeffs(std::size_t src_rank, std::size_t dst_rank, int d, const std::vector<QMatrix>& coeffs);
  // The R_base-linear map sending v_j eps^l (l < src.order/base) to column j*(src.order/base)+l of images.
  static RMap from_generators(ModShape src, ModShape dst, int base, const QMatrix& images);
  // The R_base-linear map whose projection onto the top eps_base-layer of dst is `top`.
  static RMap from_top_rows(ModShape src, ModShape dst, int base, const QMatrix& top);

  const ModShape& src() const { return src_; }
  const ModShape& dst() const { return dst_; }
  int base() const { return base_; }
  const QMatrix& flat() const { return flat_; }

  QMatrix generators() const;
  QMatrix top_rows() const;
  // eps^k coefficient; requires src.order == dst.order == base
  QMatrix coeff(int k) const;
  QMatrix residue_matrix() const { return coeff(0); }

  bool is_endomorphism() const { return src_ == dst_ && base_ == src_.order; }
  bool is_linear_over(int c) const;

  RMap& operator+=(const RMap& o);
  RMap& operator-=(const RMap& o);
  RMap& operator*=(const GaussQ& s);
  friend RMap operator+(RMap a, const RMap& b) { return a += b; }
  friend RMap operator-(RMap a, const RMap& b) { return a -= b; }
  friend RMap operator*(RMap a, const GaussQ& s) { return a *= s; }
  friend RMap operator*(const GaussQ& s, RMap a) { return a *= s; }
  RMap operator-() const;

  friend bool operator==(const RMap& a, const RMap& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.base_ == b.base_ && a.flat_ == b.flat_;
  }

 protected:
  void require_same_shape(const RMap& o) const;

  ModShape src_;
  ModShape dst_;
  int base_ = 1;
  QMatrix flat_;
};

// f o g. The composite is linear over gcd of the two bases.
RMap compose(const RMap& f, const RMap& g);
inline RMap operator*(const RMap& f, const RMap& g) { return compose(f, g); }

// R_d-linear endomorphism of C^rank (x) R_d.
class REnd : public RMap {
 public:
  explicit REnd(RMap map);

  static REnd identity(std::size_t rank, int d);
  static REnd zero(std::size_t rank, int d);
  static REnd scalar(std::size_t rank, const TruncScalar& s);
  static REnd from_coeffs(std::size_t rank, int d, const std::vector<QMatrix>& coeffs);

  std::size_t rank() const { return src_.rank; }
  int order() const { return src_.order; }

  friend REnd operator+(const REnd& a, const REnd& b);
  friend REnd operator-(const REnd& a, const REnd& b);
  friend REnd operator*(const REnd& a, const REnd& b);
  friend REnd operator*(const TruncScalar& s, const REnd& a);
  friend REnd operator*(const GaussQ& s, const REnd& a);
  REnd operator-() const;
};

// Throws NotInvertible when the residue matrix is singular.
REnd inverse(const REnd& g);

// tr over R_c of an R_c-linear endomorphism of C^n (x) R_d, viewed as a free R_c-module.
TruncScalar trace_over(const RMap& z, int c);
// sum_k tr(xi_k) eps^k
TruncScalar trace_r(const RMap& f);
// <X, Y>_c = residue of tr_{R_c}(XY)
GaussQ pair(const RMap& x, const RMap& y, int c);
// <X, Y>_d for R_d-linear X, Y
GaussQ pair_d(const RMap& x, const RMap& y, int d);

// sum_{k < d/c} N^k Z N^(d/c-1-k) for Z R_c-linear on C^n (x) R_d; c defaults to Z.base().
REnd pr_cd(const RMap& z);
REnd pr_cd(const RMap& z, int c);

// X : W (x) R_c -> V (x) R_d, R_c-linear  ->  X^{R_d} : W (x) R_d -> V (x) R_d
RMap extend_scalars(const RMap& x);
// Y : V (x) R_d -> W (x) R_c, R_c-linear  ->  Y^{R_d} : V (x) R_d -> W (x) R_d
RMap extend_scalars_rev(const RMap& y);

enum class ExtensionKind { Forward, Reverse };
// Inverse of extend_scalars (Forward) or extend_scalars_rev (Reverse) for R_d-linear F.
RMap restrict_scalars(const RMap& f, int c, ExtensionKind kind);

}  // namespace qs
