#include "qs/regularize.hpp"

#include <algorithm>
#include <set>

#include "qs/error.hpp"

namespace qs {

namespace {

std::int64_t arrows_between(const QuiverMult& q, std::size_t a, std::size_t b) {
  std::int64_t n = 0;
  for (const auto& h : q.arrows()) {
    if ((h.source == a && h.target == b) || (h.source == b && h.target == a)) ++n;
  }
  return n;
}

std::set<std::size_t> neighbours(const QuiverMult& q, std::size_t a) {
  std::set<std::size_t> out;
  for (const auto& h : q.arrows()) {
    if (h.source == a) out.insert(h.target);
    if (h.target == a) out.insert(h.source);
  }
  return out;
}

std::optional<std::size_t> leg_position(const LegDescriptor& leg, std::size_t vertex) {
  auto it = std::find(leg.vertices.begin(), leg.vertices.end(), vertex);
  if (it == leg.vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - leg.vertices.begin());
}

bool is_leg_arrow(const LegDescriptor& leg, const Arrow& h) {
  return leg_position(leg, h.source).has_value() && leg_position(leg, h.target).has_value();
}

}  // namespace

void validate_leg(const QuiverMult& q, const LegDescriptor& leg) {
  const auto& vs = leg.vertices;
  if (vs.size() < 2) throw Error(ErrorCode::InvalidLeg, "a leg needs a base vertex and at least one leg vertex");
  std::set<std::size_t> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) throw Error(ErrorCode::InvalidLeg, "leg vertices repeat");
  for (auto x : vs) {
    if (x >= q.vertex_count()) throw Error(ErrorCode::UnknownVertex, "leg vertex index out of range");
  }
  if (q.mult(vs[0]) != 1) throw Error(ErrorCode::InvalidLeg, "base vertex must have multiplicity 1");
  const int d = q.mult(vs[1]);
  if (d < 2) throw Error(ErrorCode::InvalidLeg, "leg multiplicity must exceed 1");
  if (leg.d != d) throw Error(ErrorCode::InvalidLeg, "leg descriptor multiplicity disagrees with the quiver");
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (q.mult(vs[i]) != d) throw Error(ErrorCode::InvalidLeg, "leg vertices must share one multiplicity");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const std::int64_t n = arrows_between(q, vs[i], vs[j]);
      if (j == i + 1 && n != 1) {
        throw Error(ErrorCode::InvalidLeg, "consecutive leg vertices must be joined by exactly one arrow");
      }
      if (j > i + 1 && n != 0) throw Error(ErrorCode::InvalidLeg, "non-consecutive leg vertices are joined");
    }
  }
  for (const auto& h : q.arrows()) {
    auto ps = leg_position(leg, h.source);
    auto pt = leg_position(leg, h.target);
    if ((ps && *ps >= 1 && !pt) || (pt && *pt >= 1 && !ps)) {
      throw Error(ErrorCode::InvalidLeg, "arrow '" + h.name + "' joins the leg to the rest of the quiver");
    }
  }
}

LegDescriptor make_leg(const QuiverMult& q, const std::vector<std::string>& names) {
  LegDescriptor leg;
  for (const auto& n : names) leg.vertices.push_back(q.vertex_index(n));
  if (leg.vertices.size() < 2) throw Error(ErrorCode::InvalidLeg, "a leg needs a base vertex and at least one leg vertex");
  leg.d = q.mult(leg.vertices[1]);
  validate_leg(q, leg);
  return leg;
}

std::vector<LegDescriptor> find_legs(const QuiverMult& q) {
  std::vector<LegDescriptor> out;
  for (std::size_t base = 0; base < q.vertex_count(); ++base) {
    if (q.mult(base) != 1) continue;
    for (std::size_t first : neighbours(q, base)) {
      const int d = q.mult(first);
      if (d < 2) continue;
      LegDescriptor leg{{base, first}, d};
      bool ok = true;
      while (ok) {
        const std::size_t cur = leg.vertices.back();
        const std::size_t prev = leg.vertices[leg.vertices.size() - 2];
        std::set<std::size_t> next = neighbours(q, cur);
        next.erase(prev);
        if (next.empty()) break;
        const std::size_t x = *next.begin();
        if (next.size() > 1 || q.mult(x) != d || leg_position(leg, x)) {
          ok = false;
        } else {
          leg.vertices.push_back(x);
        }
      }
      if (!ok) continue;
      try {
        validate_leg(q, leg);
        out.push_back(std::move(leg));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

QuiverMult regularize_quiver(const QuiverMult& q, const LegDescriptor& leg) {
  validate_leg(q, leg);
  std::vector<Vertex> vertices = q.vertices();
  for (std::size_t i = 1; i < leg.vertices.size(); ++i) vertices[leg.vertices[i]].mult = 1;
  const std::size_t base = leg.vertices[0];
  std::vector<Arrow> arrows;
  for (const auto& h : q.arrows()) {
    if (!is_leg_arrow(leg, h)) arrows.push_back(h);
  }
  const std::vector<Arrow> kept = arrows;
  for (const auto& h : kept) {
    for (std::size_t i = 1; i < leg.vertices.size(); ++i) {
      const std::size_t v = leg.vertices[i];
      const std::string name = h.name + "_to_" + q.vertices()[v].name;
      if (h.target == base) arrows.push_back({name, h.source, v});
      if (h.source == base) arrows.push_back({name, v, h.target});
    }
  }
  for (std::size_t i = 0; i < leg.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < leg.vertices.size(); ++j) {
      for (int k = 0; k < leg.d - 2; ++k) {
        const std::string name = "reg_" + q.vertices()[leg.vertices[i]].name + "_" +
                                 q.vertices()[leg.vertices[j]].name + "_" + std::to_string(k);
        arrows.push_back({name, leg.vertices[i], leg.vertices[j]});
      }
    }
  }
  return QuiverMult(std::move(vertices), std::move(arrows));
}

DimVector regularize_dim(const QuiverMult& q, const LegDescriptor& leg, const DimVector& v) {
  validate_leg(q, leg);
  if (v.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  DimVector out = v;
  for (std::size_t i = 0; i + 1 < leg.vertices.size(); ++i) {
    out[leg.vertices[i]] = v[leg.vertices[i]] - v[leg.vertices[i + 1]];
  }
  return out;
}

ParamVector regularize_lambda(const QuiverMult& q, const LegDescriptor& leg, const ParamVector& lambda) {
  validate_leg(q, leg);
  check_params(q, lambda);
  ParamVector out = lambda;
  GaussQ acc = lambda[leg.vertices[0]][0];
  for (std::size_t i = 1; i < leg.vertices.size(); ++i) {
    acc += lambda[leg.vertices[i]].residue();
    out[leg.vertices[i]] = TruncScalar::constant(1, acc);
  }
  return out;
}

HypothesisReport check_theorem_hypotheses(const QuiverMult& q, const LegDescriptor& leg, const ParamVector& lambda,
                                          const DimVector& v) {
  HypothesisReport out;
  DimVector vc = regularize_dim(q, leg, v);
  check_params(q, lambda);
  const std::size_t l = leg.length();
  for (std::size_t i = 0; i < l; ++i) {
    if (vc[leg.vertices[i]] < 0) out.negative_dims.push_back(i);
  }
  for (std::size_t i = 1; i <= l; ++i) {
    TruncScalar acc(leg.d);
    for (std::size_t j = i; j <= l; ++j) {
      acc += lambda[leg.vertices[j]];
      if (!acc.is_unit()) out.non_units.emplace_back(i, j);
    }
  }
  if (l == 1) out.corollary = lambda[leg.vertices[1]].is_unit();
  return out;
}

ZMatrix phi_matrix(const QuiverMult& q, const LegDescriptor& leg) {
  validate_leg(q, leg);
  ZMatrix out = ZMatrix::identity(q.vertex_count());
  for (std::size_t i = 0; i + 1 < leg.vertices.size(); ++i) out(leg.vertices[i], leg.vertices[i + 1]) = -1;
  return out;
}

ZMatrix phi_inverse_matrix(const QuiverMult& q, const LegDescriptor& leg) {
  validate_leg(q, leg);
  ZMatrix out = ZMatrix::identity(q.vertex_count());
  for (std::size_t i = 0; i < leg.vertices.size(); ++i) {
    for (std::size_t k = i + 1; k < leg.vertices.size(); ++k) out(leg.vertices[i], leg.vertices[k]) = 1;
  }
  return out;
}

ZMatrix psi_matrix(const QuiverMult& q, const LegDescriptor& leg) {
  const QuiverMult regular = regularize_quiver(q, leg);
  auto from = param_offsets(q);
  auto to = param_offsets(regular);
  ZMatrix out(param_dim(regular), param_dim(q));
  std::vector<bool> on_leg(q.vertex_count(), false);
  for (std::size_t i = 1; i < leg.vertices.size(); ++i) on_leg[leg.vertices[i]] = true;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (on_leg[v]) continue;
    for (int k = 0; k < q.mult(v); ++k) out(to[v] + k, from[v] + k) = 1;
  }
  const std::size_t base = leg.vertices[0];
  for (std::size_t i = 1; i < leg.vertices.size(); ++i) {
    const std::size_t row = to[leg.vertices[i]];
    out(row, from[base]) = 1;
    for (std::size_t j = 1; j <= i; ++j) out(row, from[leg.vertices[j]] + leg.d - 1) = 1;
  }
  return out;
}

ZMatrix leg_transposition(const QuiverMult& q, const LegDescriptor& leg, std::size_t i) {
  if (i < 1 || i > leg.length()) throw Error(ErrorCode::InvalidLeg, "transposition index outside [1, l]");
  const std::size_t a = leg.vertices[i - 1];
  const std::size_t b = leg.vertices[i];
  ZMatrix out = ZMatrix::identity(q.vertex_count());
  out(a, a) = 0;
  out(b, b) = 0;
  out(a, b) = 1;
  out(b, a) = 1;
  return out;
}

ZMatrix leg_transposition_params(const QuiverMult& regular, const LegDescriptor& leg, std::size_t i) {
  if (i < 1 || i > leg.length()) throw Error(ErrorCode::InvalidLeg, "transposition index outside [1, l]");
  auto off = param_offsets(regular);
  const std::size_t a = off[leg.vertices[i - 1]];
  const std::size_t b = off[leg.vertices[i]];
  if (regular.mult(leg.vertices[i - 1]) != 1 || regular.mult(leg.vertices[i]) != 1) {
    throw Error(ErrorCode::InvalidLeg, "expected the regularized quiver");
  }
  ZMatrix out = ZMatrix::identity(param_dim(regular));
  out(a, a) = 0;
  out(b, b) = 0;
  out(a, b) = 1;
  out(b, a) = 1;
  return out;
}

Report verify_isometry(const QuiverMult& q, const LegDescriptor& leg) {
  Report report;
  const QuiverMult regular = regularize_quiver(q, leg);
  ZMatrix phi = phi_matrix(q, leg);
  ZMatrix lhs = phi.transpose() * cartan(regular).symmetrized() * phi;
  report.add("phi^t D-check C-check phi = D C", lhs == cartan(q).symmetrized());
  report.add("phi phi^-1 = 1", phi * phi_inverse_matrix(q, leg) == ZMatrix::identity(q.vertex_count()));
  return report;
}

Report verify_semidirect(const QuiverMult& q, const LegDescriptor& leg) {
  Report report;
  const QuiverMult regular = regularize_quiver(q, leg);
  const ZMatrix phi = phi_matrix(q, leg);
  const ZMatrix phi_inv = phi_inverse_matrix(q, leg);
  const std::size_t l = leg.length();
  std::vector<bool> on_leg(q.vertex_count(), false);
  for (std::size_t i = 1; i <= l; ++i) on_leg[leg.vertices[i]] = true;
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    const ZMatrix conj = phi * dim_reflection_matrix(q, k) * phi_inv;
    const std::string& name = q.vertices()[k].name;
    if (on_leg[k]) {
      const std::size_t pos = *leg_position(leg, k);
      report.add("phi s_" + name + " phi^-1 = sigma_" + std::to_string(pos), conj == leg_transposition(q, leg, pos));
    } else {
      report.add("phi s_" + name + " phi^-1 = s-check_" + name, conj == dim_reflection_matrix(regular, k));
    }
  }
  for (std::size_t i = 1; i <= l; ++i) {
    const ZMatrix sigma = leg_transposition(q, leg, i);
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
      std::size_t image = k;
      if (k == leg.vertices[i - 1]) image = leg.vertices[i];
      if (k == leg.vertices[i]) image = leg.vertices[i - 1];
      const ZMatrix lhs = sigma * dim_reflection_matrix(regular, k) * sigma;
      report.add("sigma_" + std::to_string(i) + " s-check_" + q.vertices()[k].name + " sigma_" + std::to_string(i),
                 lhs == dim_reflection_matrix(regular, image));
    }
  }
  return report;
}

Report verify_param_equivariance(const QuiverMult& q, const LegDescriptor& leg) {
  Report report;
  const QuiverMult regular = regularize_quiver(q, leg);
  const ZMatrix psi = psi_matrix(q, leg);
  const ZMatrix psi_t = pairing_matrix(q) * psi.transpose() * pairing_matrix(regular);
  const ZMatrix phi = phi_matrix(q, leg);
  std::vector<bool> on_leg(q.vertex_count(), false);
  for (std::size_t i = 1; i <= leg.length(); ++i) on_leg[leg.vertices[i]] = true;
  for (std::size_t k = 0; k < q.vertex_count(); ++k) {
    const std::string& name = q.vertices()[k].name;
    const ZMatrix r = param_reflection_matrix(q, k);
    const ZMatrix st = transpose_action_matrix(q, k);
    const ZMatrix s = dim_reflection_matrix(q, k);
    if (on_leg[k]) {
      const std::size_t pos = *leg_position(leg, k);
      const ZMatrix sigma = leg_transposition_params(regular, leg, pos);
      const ZMatrix sigma_dim = leg_transposition(q, leg, pos);
      report.add("psi r_" + name + " = sigma psi", psi * r == sigma * psi);
      report.add("s~_" + name + " psi^t = psi^t sigma", st * psi_t == psi_t * sigma);
      report.add("phi s_" + name + " = sigma phi", phi * s == sigma_dim * phi);
    } else {
      report.add("psi r_" + name + " = r-check psi", psi * r == param_reflection_matrix(regular, k) * psi);
      report.add("s~_" + name + " psi^t = psi^t s~-check", st * psi_t == psi_t * transpose_action_matrix(regular, k));
      report.add("phi s_" + name + " = s-check phi", phi * s == dim_reflection_matrix(regular, k) * phi);
    }
  }
  return report;
}

}  // namespace qs
