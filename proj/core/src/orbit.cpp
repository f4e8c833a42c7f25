#include "qs/orbit.hpp"

#include "qs/error.hpp"

namespace qs {

namespace {

RMap selection(std::size_t src_rank, const std::vector<std::size_t>& rows, int d) {
  QMatrix s(rows.size(), src_rank);
  for (std::size_t t = 0; t < rows.size(); ++t) s(t, rows[t]) = GaussQ(1);
  std::vector<QMatrix> coeffs{s};
  for (int k = 1; k < d; ++k) coeffs.emplace_back(rows.size(), src_rank);
  return RMap::from_coeffs(src_rank, rows.size(), d, coeffs);
}

REnd scalar_id(std::size_t rank, const TruncScalar& s) { return REnd::scalar(rank, s); }

}  // namespace

OrbitSpec::OrbitSpec(int d, std::vector<OrbitBlock> blocks) : d_(d), blocks_(std::move(blocks)) {
  if (d_ < 1) throw Error(ErrorCode::InvalidSpec, "order must be positive");
  if (blocks_.size() < 2) throw Error(ErrorCode::InvalidSpec, "an orbit spec needs at least two blocks");
  for (const auto& b : blocks_) {
    if (b.theta.order() != d_) throw Error(ErrorCode::MismatchedOrder, "theta must lie in R_" + std::to_string(d_));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if (!(blocks_[i].theta - blocks_[j].theta).is_unit()) {
        throw Error(ErrorCode::InvalidSpec, "theta_" + std::to_string(i) + " - theta_" + std::to_string(j) +
                                                " is not a unit");
      }
    }
  }
}

std::size_t OrbitSpec::leg_rank(std::size_t i) const {
  std::size_t acc = 0;
  for (std::size_t j = i; j < blocks_.size(); ++j) acc += blocks_[j].dim;
  return acc;
}

std::size_t OrbitSpec::block_offset(std::size_t i) const { return rank() - leg_rank(i); }

TruncScalar OrbitSpec::lambda(std::size_t i) const { return blocks_[i].theta - blocks_[i - 1].theta; }

REnd OrbitSpec::theta_matrix() const {
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(d_), QMatrix(rank(), rank()));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const std::size_t off = block_offset(i);
    for (std::size_t r = 0; r < blocks_[i].dim; ++r) {
      for (int k = 0; k < d_; ++k) coeffs[static_cast<std::size_t>(k)](off + r, off + r) = blocks_[i].theta[k];
    }
  }
  return REnd::from_coeffs(rank(), d_, coeffs);
}

std::vector<REnd> orbit_idempotents(const OrbitSpec& spec, const REnd& a) {
  if (a.order() != spec.order() || a.rank() != spec.rank()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix does not match the orbit spec");
  }
  const std::size_t n = spec.rank();
  std::vector<REnd> out;
  for (std::size_t i = 0; i < spec.blocks().size(); ++i) {
    REnd acc = REnd::identity(n, spec.order());
    for (std::size_t j = 0; j < spec.blocks().size(); ++j) {
      if (j == i) continue;
      TruncScalar scale = trunc_inv(spec.theta(i) - spec.theta(j));
      acc = acc * (scale * (a - scalar_id(n, spec.theta(j))));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Membership orbit_membership(const OrbitSpec& spec, const REnd& a) {
  Membership out;
  const std::size_t n = spec.rank();
  const int d = spec.order();
  if (a.order() != d || a.rank() != n) {
    out.reason = "shape does not match the orbit spec";
    return out;
  }
  REnd poly = REnd::identity(n, d);
  for (std::size_t j = 0; j < spec.blocks().size(); ++j) poly = poly * (a - scalar_id(n, spec.theta(j)));
  if (!poly.flat().is_zero()) {
    out.reason = "prod_j (A - theta_j) is nonzero";
    return out;
  }
  out.idempotents = orbit_idempotents(spec, a);
  REnd sum = REnd::zero(n, d);
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    const REnd& pi = out.idempotents[i];
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      REnd prod = pi * out.idempotents[j];
      if (i == j ? !(prod == pi) : !prod.flat().is_zero()) {
        out.reason = "idempotents are not orthogonal";
        return out;
      }
    }
    if (!(a * pi == scalar_id(n, spec.theta(i)) * pi)) {
      out.reason = "A does not act by theta_" + std::to_string(i) + " on its eigenmodule";
      return out;
    }
    if (rank(pi.residue_matrix()) != spec.blocks()[i].dim) {
      out.reason = "eigenmodule " + std::to_string(i) + " has the wrong rank";
      return out;
    }
    sum = sum + pi;
  }
  if (!(sum == REnd::identity(n, d))) {
    out.reason = "idempotents do not sum to the identity";
    return out;
  }
  out.member = true;
  return out;
}

FreeBasis free_basis_of_image(const REnd& e) {
  const std::size_t n = e.rank();
  const int d = e.order();
  std::vector<std::size_t> cols = independent_columns(e.residue_matrix());
  const std::size_t r = cols.size();
  std::vector<QMatrix> coeffs;
  for (int k = 0; k < d; ++k) {
    QMatrix ek = e.coeff(k);
    QMatrix uk(n, r);
    for (std::size_t t = 0; t < r; ++t) uk.set_block(0, t, ek.block(0, cols[t], n, 1));
    coeffs.push_back(std::move(uk));
  }
  RMap basis = RMap::from_coeffs(r, n, d, coeffs);
  std::vector<std::size_t> rows = independent_columns(basis.residue_matrix().transpose());
  RMap select = selection(n, rows, d);
  REnd square(compose(select, basis));
  RMap coords = compose(inverse(square), select);
  return {std::move(basis), std::move(coords)};
}

RMap leg_down(const OrbitSpec& spec, const LegPoint& pt, std::size_t i) {
  if (i == 0) {
    return extend_scalars(RMap({spec.rank(), 1}, {spec.leg_rank(1), spec.order()}, 1, pt.a));
  }
  return pt.down.at(i - 1);
}

RMap leg_up(const OrbitSpec& spec, const LegPoint& pt, std::size_t i) {
  if (i == 0) {
    return extend_scalars_rev(RMap({spec.leg_rank(1), spec.order()}, {spec.rank(), 1}, 1, pt.b));
  }
  return pt.up.at(i - 1);
}

REnd leg_nu(const OrbitSpec& spec, const LegPoint& pt) {
  REnd prod(compose(leg_up(spec, pt, 0), leg_down(spec, pt, 0)));
  return scalar_id(spec.rank(), spec.theta(0)) - prod;
}

MomentValue leg_moment(const OrbitSpec& spec, const LegPoint& pt) {
  MomentValue out;
  const std::size_t l = spec.legs();
  for (std::size_t i = 1; i <= l; ++i) {
    REnd value(compose(leg_down(spec, pt, i - 1), leg_up(spec, pt, i - 1)));
    if (i < l) value = value - REnd(compose(leg_up(spec, pt, i), leg_down(spec, pt, i)));
    out.push_back(std::move(value));
  }
  return out;
}

MomentValue leg_residual(const OrbitSpec& spec, const LegPoint& pt) {
  MomentValue out = leg_moment(spec, pt);
  for (std::size_t i = 1; i <= spec.legs(); ++i) {
    out[i - 1] = out[i - 1] + scalar_id(spec.leg_rank(i), spec.lambda(i));
  }
  return out;
}

bool leg_nondegenerate(const OrbitSpec& spec, const LegPoint& pt) {
  for (std::size_t i = 0; i < spec.legs(); ++i) {
    if (rank(leg_up(spec, pt, i).residue_matrix()) != spec.leg_rank(i + 1)) return false;
    if (rank(leg_down(spec, pt, i).residue_matrix()) != spec.leg_rank(i + 1)) return false;
  }
  return true;
}

LegPoint canonical_leg_point(const OrbitSpec& spec) {
  const int d = spec.order();
  LegPoint pt;
  for (std::size_t i = 0; i < spec.legs(); ++i) {
    const std::size_t ri = spec.leg_rank(i);
    const std::size_t rn = spec.leg_rank(i + 1);
    const std::size_t skip = spec.blocks()[i].dim;
    // inclusion V_{i+1} -> V_i
    QMatrix incl(ri, rn);
    for (std::size_t t = 0; t < rn; ++t) incl(skip + t, t) = GaussQ(1);
    std::vector<QMatrix> up{incl};
    // (-Theta + theta_i) restricted to V_i, landing in V_{i+1}
    std::vector<QMatrix> down;
    for (int k = 0; k < d; ++k) {
      if (k > 0) up.emplace_back(ri, rn);
      QMatrix m(rn, ri);
      std::size_t row = 0;
      for (std::size_t j = i + 1; j < spec.blocks().size(); ++j) {
        GaussQ value = spec.theta(i)[k] - spec.theta(j)[k];
        for (std::size_t t = 0; t < spec.blocks()[j].dim; ++t, ++row) m(row, skip + row) = value;
      }
      down.push_back(std::move(m));
    }
    RMap up_map = RMap::from_coeffs(rn, ri, d, up);
    RMap down_map = RMap::from_coeffs(ri, rn, d, down);
    if (i == 0) {
      pt.a = restrict_scalars(down_map, 1, ExtensionKind::Forward).flat();
      pt.b = restrict_scalars(up_map, 1, ExtensionKind::Reverse).flat();
    } else {
      pt.down.push_back(std::move(down_map));
      pt.up.push_back(std::move(up_map));
    }
  }
  return pt;
}

std::vector<FreeBasis> leg_flag(const OrbitSpec& spec, const REnd& a) {
  std::vector<REnd> pi = orbit_idempotents(spec, a);
  std::vector<FreeBasis> out;
  const std::size_t n = spec.rank();
  out.push_back({RMap::identity({n, spec.order()}), RMap::identity({n, spec.order()})});
  for (std::size_t i = 1; i <= spec.legs(); ++i) {
    REnd e = REnd::zero(n, spec.order());
    for (std::size_t j = i; j < pi.size(); ++j) e = e + pi[j];
    out.push_back(free_basis_of_image(e));
  }
  return out;
}

LegPoint leg_factorize(const OrbitSpec& spec, const REnd& a) {
  Membership m = orbit_membership(spec, a);
  if (!m.member) throw Error(ErrorCode::NotInOrbit, m.reason);
  std::vector<FreeBasis> flag = leg_flag(spec, a);
  LegPoint pt;
  const std::size_t n = spec.rank();
  for (std::size_t i = 0; i < spec.legs(); ++i) {
    RMap shifted = scalar_id(n, spec.theta(i)) - a;
    RMap down = compose(flag[i + 1].coords, compose(shifted, flag[i].basis));
    RMap up = compose(flag[i].coords, flag[i + 1].basis);
    if (i == 0) {
      pt.a = restrict_scalars(down, 1, ExtensionKind::Forward).flat();
      pt.b = restrict_scalars(up, 1, ExtensionKind::Reverse).flat();
    } else {
      pt.down.push_back(std::move(down));
      pt.up.push_back(std::move(up));
    }
  }
  return pt;
}

LegPoint act_on_leg(const OrbitSpec& spec, const LegPoint& pt, const std::vector<REnd>& g) {
  if (g.size() != spec.legs()) throw Error(ErrorCode::LengthMismatch, "one group element per leg vertex");
  std::vector<REnd> inv;
  for (const auto& x : g) inv.push_back(inverse(x));
  LegPoint out;
  for (std::size_t i = 0; i < spec.legs(); ++i) {
    RMap down = compose(g[i], leg_down(spec, pt, i));
    RMap up = compose(leg_up(spec, pt, i), inv[i]);
    if (i > 0) {
      down = compose(down, inv[i - 1]);
      up = compose(g[i - 1], up);
    }
    if (i == 0) {
      out.a = restrict_scalars(down, 1, ExtensionKind::Forward).flat();
      out.b = restrict_scalars(up, 1, ExtensionKind::Reverse).flat();
    } else {
      out.down.push_back(std::move(down));
      out.up.push_back(std::move(up));
    }
  }
  return out;
}

std::size_t orbit_dimension(const OrbitSpec& spec) {
  const std::size_t n = spec.rank();
  const int d = spec.order();
  REnd theta = spec.theta_matrix();
  const std::size_t basis = n * n * static_cast<std::size_t>(d);
  QMatrix ad(basis, basis);
  std::size_t col = 0;
  for (int k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c, ++col) {
        std::vector<QMatrix> coeffs(static_cast<std::size_t>(d), QMatrix(n, n));
        coeffs[static_cast<std::size_t>(k)](r, c) = GaussQ(1);
        REnd xi = REnd::from_coeffs(n, d, coeffs);
        REnd bracket = xi * theta - theta * xi;
        std::size_t row = 0;
        for (int p = 0; p < d; ++p) {
          QMatrix cp = bracket.coeff(p);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b, ++row) ad(row, col) = cp(a, b);
          }
        }
      }
    }
  }
  return rank(ad);
}

std::size_t orbit_dimension_formula(const OrbitSpec& spec) {
  std::size_t squares = 0;
  for (const auto& b : spec.blocks()) squares += b.dim * b.dim;
  return static_cast<std::size_t>(spec.order()) * (spec.rank() * spec.rank() - squares);
}

ShiftDecomposition shift_decompose(const REnd& a) {
  const int d = a.order();
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(d), QMatrix(a.rank(), a.rank()));
  QMatrix top = a.coeff(d - 1);
  coeffs.back() = top;
  return {top, a - REnd::from_coeffs(a.rank(), d, coeffs)};
}

REnd shift_map(const REnd& b, const QMatrix& m, const GaussQ& zeta) {
  const int d = b.order();
  if (!b.coeff(d - 1).is_zero()) throw Error(ErrorCode::TopSliceNotZero, "top eps-slice of B is nonzero");
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(d), QMatrix(b.rank(), b.rank()));
  coeffs.back() = m + zeta * QMatrix::identity(b.rank());
  return b - REnd::from_coeffs(b.rank(), d, coeffs);
}

}  // namespace qs
