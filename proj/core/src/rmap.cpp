#include "qs/rmap.hpp"

#include <numeric>
#include <string>

#include "qs/error.hpp"

namespace qs {

namespace {

std::size_t idx(std::size_t j, int order, int power) {
  return j * static_cast<std::size_t>(order) + static_cast<std::size_t>(power);
}

void require_divides(int c, int d) {
  if (c < 1 || d % c != 0) {
    throw Error(ErrorCode::NotDivisible, std::to_string(c) + " does not divide " + std::to_string(d));
  }
}

std::string shape_str(const ModShape& s) {
  return "(rank " + std::to_string(s.rank) + ", order " + std::to_string(s.order) + ")";
}

}  // namespace

QMatrix shift_rows(const QMatrix& m, ModShape rows, int power) {
  if (m.rows() != rows.dim()) throw Error(ErrorCode::ShapeMismatch, "shift_rows dimension mismatch");
  QMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < rows.rank; ++j) {
    for (int k = power; k < rows.order; ++k) {
      for (std::size_t c = 0; c < m.cols(); ++c) out(idx(j, rows.order, k), c) = m(idx(j, rows.order, k - power), c);
    }
  }
  return out;
}

QMatrix shift_cols(const QMatrix& m, ModShape cols, int power) {
  if (m.cols() != cols.dim()) throw Error(ErrorCode::ShapeMismatch, "shift_cols dimension mismatch");
  QMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < cols.rank; ++j) {
    for (int k = 0; k + power < cols.order; ++k) {
      for (std::size_t r = 0; r < m.rows(); ++r) out(r, idx(j, cols.order, k)) = m(r, idx(j, cols.order, k + power));
    }
  }
  return out;
}

RMap::RMap(ModShape src, ModShape dst, int base, QMatrix flat)
    : src_(src), dst_(dst), base_(base), flat_(std::move(flat)) {
  if (src_.order < 1 || dst_.order < 1) throw Error(ErrorCode::InvalidValue, "module order must be positive");
  require_divides(base_, src_.order);
  require_divides(base_, dst_.order);
  if (flat_.rows() != dst_.dim() || flat_.cols() != src_.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "flat matrix does not match " + shape_str(src_) + " -> " + shape_str(dst_));
  }
  if (!is_linear_over(base_)) {
    throw Error(ErrorCode::NotLinearOverBase, "map is not linear over R_" + std::to_string(base_));
  }
}

bool RMap::is_linear_over(int c) const {
  if (c < 1 || src_.order % c != 0 || dst_.order % c != 0) return false;
  return shift_cols(flat_, src_, src_.order / c) == shift_rows(flat_, dst_, dst_.order / c);
}

RMap RMap::zero(ModShape src, ModShape dst, int base) { return RMap(src, dst, base, QMatrix(dst.dim(), src.dim())); }

RMap RMap::identity(ModShape shape) { return RMap(shape, shape, shape.order, QMatrix::identity(shape.dim())); }

RMap RMap::from_coeffs(std::size_t src_rank, std::size_t dst_rank, int d, const std::vector<QMatrix>& coeffs) {
  if (static_cast<int>(coeffs.size()) != d) throw Error(ErrorCode::LengthMismatch, "expected one coefficient per power");
  QMatrix flat(dst_rank * static_cast<std::size_t>(d), src_rank * static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const QMatrix& xi = coeffs[static_cast<std::size_t>(k)];
    if (xi.rows() != dst_rank || xi.cols() != src_rank) throw Error(ErrorCode::ShapeMismatch, "coefficient shape");
    for (std::size_t i = 0; i < dst_rank; ++i) {
      for (std::size_t j = 0; j < src_rank; ++j) {
        if (xi(i, j).is_zero()) continue;
        for (int l = 0; l + k < d; ++l) flat(idx(i, d, k + l), idx(j, d, l)) = xi(i, j);
      }
    }
  }
  return RMap({src_rank, d}, {dst_rank, d}, d, std::move(flat));
}

RMap RMap::from_generators(ModShape src, ModShape dst, int base, const QMatrix& images) {
  require_divides(base, src.order);
  require_divides(base, dst.order);
  const int fs = src.order / base;
  const int fd = dst.order / base;
  if (images.rows() != dst.dim() || images.cols() != src.rank * static_cast<std::size_t>(fs)) {
    throw Error(ErrorCode::ShapeMismatch, "generator images have the wrong shape");
  }
  QMatrix flat(dst.dim(), src.dim());
  QMatrix layer = images;
  for (int m = 0; m < base; ++m) {
    for (std::size_t j = 0; j < src.rank; ++j) {
      for (int l = 0; l < fs; ++l) {
        std::size_t col = idx(j, src.order, l + m * fs);
        std::size_t gen = idx(j, fs, l);
        for (std::size_t r = 0; r < dst.dim(); ++r) flat(r, col) = layer(r, gen);
      }
    }
    layer = shift_rows(layer, dst, fd);
  }
  return RMap(src, dst, base, std::move(flat));
}

RMap RMap::from_top_rows(ModShape src, ModShape dst, int base, const QMatrix& top) {
  require_divides(base, src.order);
  require_divides(base, dst.order);
  const int fs = src.order / base;
  const int fd = dst.order / base;
  if (top.rows() != dst.rank * static_cast<std::size_t>(fd) || top.cols() != src.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "top rows have the wrong shape");
  }
  QMatrix flat(dst.dim(), src.dim());
  for (int k = 0; k < base; ++k) {
    QMatrix layer = shift_cols(top, src, fs * (base - 1 - k));
    for (std::size_t j = 0; j < dst.rank; ++j) {
      for (int l = 0; l < fd; ++l) {
        std::size_t row = idx(j, dst.order, l + k * fd);
        std::size_t from = idx(j, fd, l);
        for (std::size_t c = 0; c < src.dim(); ++c) flat(row, c) = layer(from, c);
      }
    }
  }
  return RMap(src, dst, base, std::move(flat));
}

QMatrix RMap::generators() const {
  const int fs = src_.order / base_;
  QMatrix out(dst_.dim(), src_.rank * static_cast<std::size_t>(fs));
  for (std::size_t j = 0; j < src_.rank; ++j) {
    for (int l = 0; l < fs; ++l) {
      for (std::size_t r = 0; r < dst_.dim(); ++r) out(r, idx(j, fs, l)) = flat_(r, idx(j, src_.order, l));
    }
  }
  return out;
}

QMatrix RMap::top_rows() const {
  const int fd = dst_.order / base_;
  QMatrix out(dst_.rank * static_cast<std::size_t>(fd), src_.dim());
  for (std::size_t j = 0; j < dst_.rank; ++j) {
    for (int l = 0; l < fd; ++l) {
      for (std::size_t c = 0; c < src_.dim(); ++c) {
        out(idx(j, fd, l), c) = flat_(idx(j, dst_.order, dst_.order - fd + l), c);
      }
    }
  }
  return out;
}

QMatrix RMap::coeff(int k) const {
  if (src_.order != base_ || dst_.order != base_) {
    throw Error(ErrorCode::NotLinearOverBase, "coefficients need an R_d-linear map between order-d modules");
  }
  QMatrix out(dst_.rank, src_.rank);
  for (std::size_t i = 0; i < dst_.rank; ++i) {
    for (std::size_t j = 0; j < src_.rank; ++j) out(i, j) = flat_(idx(i, base_, k), idx(j, base_, 0));
  }
  return out;
}

void RMap::require_same_shape(const RMap& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_)) throw Error(ErrorCode::ShapeMismatch, "maps have different shapes");
}

RMap& RMap::operator+=(const RMap& o) {
  require_same_shape(o);
  flat_ += o.flat_;
  base_ = std::gcd(base_, o.base_);
  return *this;
}

RMap& RMap::operator-=(const RMap& o) {
  require_same_shape(o);
  flat_ -= o.flat_;
  base_ = std::gcd(base_, o.base_);
  return *this;
}

RMap& RMap::operator*=(const GaussQ& s) {
  flat_ *= s;
  return *this;
}

RMap RMap::operator-() const {
  RMap out = *this;
  out.flat_ = -out.flat_;
  return out;
}

RMap compose(const RMap& f, const RMap& g) {
  if (!(g.dst() == f.src())) {
    throw Error(ErrorCode::ShapeMismatch, "cannot compose: codomain " + shape_str(g.dst()) + " vs domain " +
                                              shape_str(f.src()));
  }
  return RMap(g.src(), f.dst(), std::gcd(f.base(), g.base()), f.flat() * g.flat());
}

REnd::REnd(RMap map) : RMap(std::move(map)) {
  if (!is_endomorphism()) throw Error(ErrorCode::NotEndomorphism, "expected an R_d-linear endomorphism");
}

REnd REnd::identity(std::size_t rank, int d) { return REnd(RMap::identity({rank, d})); }

REnd REnd::zero(std::size_t rank, int d) { return REnd(RMap::zero({rank, d}, {rank, d}, d)); }

REnd REnd::scalar(std::size_t rank, const TruncScalar& s) {
  std::vector<QMatrix> coeffs;
  for (int k = 0; k < s.order(); ++k) coeffs.push_back(s[k] * QMatrix::identity(rank));
  return REnd(RMap::from_coeffs(rank, rank, s.order(), coeffs));
}

REnd REnd::from_coeffs(std::size_t rank, int d, const std::vector<QMatrix>& coeffs) {
  return REnd(RMap::from_coeffs(rank, rank, d, coeffs));
}

REnd operator+(const REnd& a, const REnd& b) { return REnd(static_cast<const RMap&>(a) + b); }
REnd operator-(const REnd& a, const REnd& b) { return REnd(static_cast<const RMap&>(a) - b); }
REnd operator*(const REnd& a, const REnd& b) { return REnd(compose(a, b)); }
REnd operator*(const TruncScalar& s, const REnd& a) {
  if (s.order() != a.order()) throw Error(ErrorCode::MismatchedOrder, "scalar order differs from module order");
  return REnd::scalar(a.rank(), s) * a;
}
REnd operator*(const GaussQ& s, const REnd& a) { return REnd(static_cast<const RMap&>(a) * s); }
REnd REnd::operator-() const { return REnd(RMap::operator-()); }

REnd inverse(const REnd& g) {
  if (rank(g.residue_matrix()) < g.rank()) throw Error(ErrorCode::NotInvertible, "residue matrix is singular");
  auto inv = inverse(g.flat());
  if (!inv) throw Error(ErrorCode::NotInvertible, "matrix is singular");
  return REnd(RMap(g.src(), g.dst(), g.order(), std::move(*inv)));
}

TruncScalar trace_over(const RMap& z, int c) {
  if (!(z.src() == z.dst())) throw Error(ErrorCode::NotEndomorphism, "trace of a map between different modules");
  const ModShape& s = z.src();
  require_divides(c, s.order);
  if (z.base() % c != 0 && !z.is_linear_over(c)) {
    throw Error(ErrorCode::NotLinearOverBase, "map is not linear over R_" + std::to_string(c));
  }
  const int f = s.order / c;
  TruncScalar out(c);
  for (int m = 0; m < c; ++m) {
    GaussQ acc;
    for (std::size_t i = 0; i < s.rank; ++i) {
      for (int k = 0; k < f; ++k) acc += z.flat()(idx(i, s.order, k + m * f), idx(i, s.order, k));
    }
    out[m] = acc;
  }
  return out;
}

TruncScalar trace_r(const RMap& f) {
  if (!f.is_endomorphism()) throw Error(ErrorCode::NotEndomorphism, "trace_r needs an R_d-linear endomorphism");
  return trace_over(f, f.src().order);
}

GaussQ pair(const RMap& x, const RMap& y, int c) { return trace_over(compose(x, y), c).residue(); }

GaussQ pair_d(const RMap& x, const RMap& y, int d) {
  RMap xy = compose(x, y);
  if (xy.src().order != d || !xy.is_linear_over(d)) {
    throw Error(ErrorCode::NotEndomorphism, "pair_d needs XY to be an R_d-linear endomorphism");
  }
  return trace_over(xy, d).residue();
}

REnd pr_cd(const RMap& z) { return pr_cd(z, z.base()); }

REnd pr_cd(const RMap& z, int c) {
  if (!(z.src() == z.dst())) throw Error(ErrorCode::NotEndomorphism, "pr_cd needs an endomorphism");
  const ModShape& s = z.src();
  require_divides(c, s.order);
  if (!z.is_linear_over(c)) throw Error(ErrorCode::NotLinearOverBase, "map is not linear over R_" + std::to_string(c));
  const int f = s.order / c;
  QMatrix acc(s.dim(), s.dim());
  for (int k = 0; k < f; ++k) acc += shift_rows(shift_cols(z.flat(), s, f - 1 - k), s, k);
  return REnd(RMap(s, s, s.order, std::move(acc)));
}

RMap extend_scalars(const RMap& x) {
  const int c = x.src().order;
  const int d = x.dst().order;
  require_divides(c, d);
  if (!x.is_linear_over(c)) throw Error(ErrorCode::NotLinearOverBase, "map is not linear over R_" + std::to_string(c));
  ModShape src{x.src().rank, d};
  QMatrix flat(x.dst().dim(), src.dim());
  for (std::size_t j = 0; j < src.rank; ++j) {
    QMatrix column = x.flat().block(0, idx(j, c, 0), x.dst().dim(), 1);
    for (int p = 0; p < d; ++p) {
      flat.set_block(0, idx(j, d, p), column);
      column = shift_rows(column, x.dst(), 1);
    }
  }
  return RMap(src, x.dst(), d, std::move(flat));
}

RMap extend_scalars_rev(const RMap& y) {
  const int c = y.dst().order;
  const int d = y.src().order;
  require_divides(c, d);
  if (!y.is_linear_over(c)) throw Error(ErrorCode::NotLinearOverBase, "map is not linear over R_" + std::to_string(c));
  const int f = d / c;
  ModShape dst{y.dst().rank, d};
  QMatrix flat(dst.dim(), y.src().dim());
  for (int k = 0; k < f; ++k) {
    QMatrix layer = shift_cols(y.flat(), y.src(), f - 1 - k);
    for (std::size_t j = 0; j < dst.rank; ++j) {
      for (int m = 0; m < c; ++m) {
        std::size_t row = idx(j, d, m * f + k);
        std::size_t from = idx(j, c, m);
        for (std::size_t col = 0; col < flat.cols(); ++col) flat(row, col) = layer(from, col);
      }
    }
  }
  return RMap(y.src(), dst, d, std::move(flat));
}

RMap restrict_scalars(const RMap& f, int c, ExtensionKind kind) {
  const int d = f.src().order;
  if (f.dst().order != d || !f.is_linear_over(d)) {
    throw Error(ErrorCode::NotLinearOverBase, "restrict_scalars needs an R_d-linear map between order-d modules");
  }
  require_divides(c, d);
  const int ratio = d / c;
  if (kind == ExtensionKind::Forward) {
    ModShape src{f.src().rank, c};
    QMatrix flat(f.dst().dim(), src.dim());
    for (std::size_t j = 0; j < src.rank; ++j) {
      for (int m = 0; m < c; ++m) {
        flat.set_block(0, idx(j, c, m), f.flat().block(0, idx(j, d, m * ratio), f.dst().dim(), 1));
      }
    }
    return RMap(src, f.dst(), c, std::move(flat));
  }
  ModShape dst{f.dst().rank, c};
  QMatrix flat(dst.dim(), f.src().dim());
  for (std::size_t j = 0; j < dst.rank; ++j) {
    for (int m = 0; m < c; ++m) {
      flat.set_block(idx(j, c, m), 0, f.flat().block(idx(j, d, m * ratio + ratio - 1), 0, 1, f.src().dim()));
    }
  }
  return RMap(f.src(), dst, c, std::move(flat));
}

}  // namespace qs
