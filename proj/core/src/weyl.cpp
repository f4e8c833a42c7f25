#include "qs/weyl.hpp"

#include <string>

#include "qs/error.hpp"

namespace qs {

namespace {

void require_vertex(const QuiverMult& q, std::size_t i) {
  if (i >= q.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
}

std::int64_t to_int(const GaussQ& x) {
  if (!x.is_real() || x.re().get_den() != 1) throw Error(ErrorCode::InvalidValue, "expected an integer entry");
  return x.re().get_num().get_si();
}

template <class Action>
ZMatrix matrix_of(const QuiverMult& q, Action action) {
  const std::size_t n = param_dim(q);
  ZMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<GaussQ> e(n);
    e[col] = GaussQ(1);
    std::vector<GaussQ> image = flatten(action(unflatten(q, e)));
    for (std::size_t row = 0; row < n; ++row) out(row, col) = to_int(image[row]);
  }
  return out;
}

}  // namespace

ParamVector zero_params(const QuiverMult& q) {
  ParamVector out;
  for (int d : q.multiplicities()) out.emplace_back(d);
  return out;
}

void check_params(const QuiverMult& q, const ParamVector& lambda) {
  if (lambda.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "parameter has the wrong length");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].order() != q.mult(i)) {
      throw Error(ErrorCode::MismatchedOrder, "parameter at vertex '" + q.vertices()[i].name + "' must lie in R_" +
                                                  std::to_string(q.mult(i)));
    }
  }
}

std::vector<std::size_t> param_offsets(const QuiverMult& q) {
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (int d : q.multiplicities()) {
    out.push_back(acc);
    acc += static_cast<std::size_t>(d);
  }
  return out;
}

std::size_t param_dim(const QuiverMult& q) {
  std::size_t acc = 0;
  for (int d : q.multiplicities()) acc += static_cast<std::size_t>(d);
  return acc;
}

std::vector<GaussQ> flatten(const ParamVector& lambda) {
  std::vector<GaussQ> out;
  for (const auto& x : lambda) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  return out;
}

ParamVector unflatten(const QuiverMult& q, const std::vector<GaussQ>& coords) {
  if (coords.size() != param_dim(q)) throw Error(ErrorCode::LengthMismatch, "coordinate vector has the wrong length");
  ParamVector out;
  auto it = coords.begin();
  for (int d : q.multiplicities()) {
    out.emplace_back(std::vector<GaussQ>(it, it + d));
    it += d;
  }
  return out;
}

DimVector reflect_dim(const QuiverMult& q, std::size_t i, const DimVector& v) {
  require_vertex(q, i);
  if (v.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  ZMatrix c = cartan(q).cartan;
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < v.size(); ++j) acc = detail::checked_add(acc, detail::checked_mul(c(i, j), v[j]));
  DimVector out = v;
  out[i] -= acc;
  return out;
}

ParamVector reflect_param(const QuiverMult& q, std::size_t i, const ParamVector& lambda) {
  require_vertex(q, i);
  check_params(q, lambda);
  ZMatrix c = cartan(q).cartan;
  const int di = q.mult(i);
  ParamVector out = lambda;
  out[i] = -lambda[i];
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    if (j == i || c(i, j) == 0) continue;
    const int dj = q.mult(j);
    const int dij = gcd_mult(q, i, j);
    for (int l = 0; l < dij; ++l) {
      const GaussQ& coeff = lambda[i][di - (di / dij) * l - 1];
      out[j][dj - (dj / dij) * l - 1] -= coeff * GaussQ(c(i, j));
    }
  }
  return out;
}

ParamVector transpose_action(const QuiverMult& q, std::size_t i, const ParamVector& kappa) {
  require_vertex(q, i);
  check_params(q, kappa);
  ZMatrix c = cartan(q).cartan;
  const int di = q.mult(i);
  TruncScalar shift(di);
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    if (c(i, j) == 0) continue;
    const int dij = gcd_mult(q, i, j);
    const int fij = q.mult(j) / dij;
    const int fji = di / dij;
    for (int m = 0; m < dij; ++m) shift[fji * m] += GaussQ(c(i, j)) * kappa[j][fij * m];
  }
  ParamVector out = kappa;
  out[i] -= shift;
  return out;
}

ZMatrix dim_reflection_matrix(const QuiverMult& q, std::size_t i) {
  require_vertex(q, i);
  const std::size_t n = q.vertex_count();
  ZMatrix c = cartan(q).cartan;
  ZMatrix out = ZMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) out(i, j) -= c(i, j);
  return out;
}

ZMatrix param_reflection_matrix(const QuiverMult& q, std::size_t i) {
  return matrix_of(q, [&](const ParamVector& x) { return reflect_param(q, i, x); });
}

ZMatrix transpose_action_matrix(const QuiverMult& q, std::size_t i) {
  return matrix_of(q, [&](const ParamVector& x) { return transpose_action(q, i, x); });
}

ZMatrix pairing_matrix(const QuiverMult& q) {
  ZMatrix out(param_dim(q), param_dim(q));
  auto offsets = param_offsets(q);
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    const int d = q.mult(j);
    for (int a = 0; a < d; ++a) out(offsets[j] + a, offsets[j] + (d - 1 - a)) = 1;
  }
  return out;
}

bool LiftedCartan::symmetrizable() const {
  for (std::size_t a = 0; a < index.size(); ++a) {
    for (std::size_t b = 0; b < index.size(); ++b) {
      if (mult[a] * cartan(a, b) != mult[b] * cartan(b, a)) return false;
    }
  }
  return true;
}

LiftedCartan lift_cartan(const QuiverMult& q) {
  ZMatrix c = cartan(q).cartan;
  LiftedCartan out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    for (int k = 0; k < q.mult(i); ++k) {
      out.index.emplace_back(i, k);
      out.mult.push_back(q.mult(i));
    }
  }
  const std::size_t n = out.index.size();
  out.cartan = ZMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto [i, k] = out.index[a];
    for (std::size_t b = 0; b < n; ++b) {
      const auto [j, l] = out.index[b];
      const int dij = gcd_mult(q, i, j);
      const int fij = q.mult(j) / dij;
      const int fji = q.mult(i) / dij;
      for (int m = 0; m < dij; ++m) {
        if (k == fji * m && l == fij * m) out.cartan(a, b) = c(i, j);
      }
    }
  }
  return out;
}

ZMatrix lifted_reflection(const LiftedCartan& lc, std::size_t idx) {
  const std::size_t n = lc.index.size();
  ZMatrix out = ZMatrix::identity(n);
  for (std::size_t b = 0; b < n; ++b) out(idx, b) -= lc.cartan(idx, b);
  return out;
}

ZMatrix lifted_product(const LiftedCartan& lc, std::size_t i) {
  ZMatrix out = ZMatrix::identity(lc.index.size());
  for (std::size_t a = 0; a < lc.index.size(); ++a) {
    if (lc.index[a].first == i) out = out * lifted_reflection(lc, a);
  }
  return out;
}

std::optional<int> coxeter_order(const QuiverMult& q, std::size_t i, std::size_t j) {
  require_vertex(q, i);
  require_vertex(q, j);
  if (i == j) throw Error(ErrorCode::SameVertex, "coxeter order needs two distinct vertices");
  ZMatrix c = cartan(q).cartan;
  switch (c(i, j) * c(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return std::nullopt;
  }
}

Report verify_coxeter(const QuiverMult& q) {
  Report report;
  const std::size_t n = q.vertex_count();
  std::vector<ZMatrix> r, s;
  for (std::size_t i = 0; i < n; ++i) {
    r.push_back(param_reflection_matrix(q, i));
    s.push_back(dim_reflection_matrix(q, i));
  }
  const ZMatrix r_id = ZMatrix::identity(param_dim(q));
  const ZMatrix s_id = ZMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = q.vertices()[i].name;
    report.add("r_" + name + "^2 = 1", r[i] * r[i] == r_id);
    report.add("s_" + name + "^2 = 1", s[i] * s[i] == s_id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto m = coxeter_order(q, i, j);
      if (!m) continue;
      const std::string tag = q.vertices()[i].name + "," + q.vertices()[j].name;
      const std::string exp = "^" + std::to_string(*m) + " = 1";
      report.add("(r r)_{" + tag + "}" + exp, power(r[i] * r[j], static_cast<unsigned>(*m)) == r_id);
      report.add("(s s)_{" + tag + "}" + exp, power(s[i] * s[j], static_cast<unsigned>(*m)) == s_id);
    }
  }
  return report;
}

std::vector<GaussQ> rho(const QuiverMult& q, const ParamVector& lambda) {
  check_params(q, lambda);
  std::vector<GaussQ> out;
  for (const auto& x : lambda) out.push_back(x.residue());
  return out;
}

ZMatrix rho_matrix(const QuiverMult& q) {
  ZMatrix out(q.vertex_count(), param_dim(q));
  auto offsets = param_offsets(q);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) out(i, offsets[i] + q.mult(i) - 1) = 1;
  return out;
}

}  // namespace qs
