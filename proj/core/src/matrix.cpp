#include "qs/matrix.hpp"

namespace qs {

QMatrix to_q(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussQ(m(r, c));
  }
  return out;
}

QMatrix hconcat(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hconcat row counts differ");
  QMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

QMatrix vconcat(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "vconcat column counts differ");
  QMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Echelon row_echelon(QMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    GaussQ inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussQ factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<std::size_t> independent_columns(const QMatrix& m) { return row_echelon(m).pivots; }

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = row_echelon(hconcat(m, QMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

}  // namespace qs
