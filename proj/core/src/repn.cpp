#include "qs/repn.hpp"

#include <string>

#include "qs/error.hpp"

namespace qs {

ModShape vertex_shape(const QuiverMult& q, const DimVector& v, std::size_t i) {
  if (i >= v.size() || v.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  if (v[i] < 0) throw Error(ErrorCode::NegativeDimension, "dimension vector has a negative entry");
  return {static_cast<std::size_t>(v[i]), q.mult(i)};
}

ModShape arrow_source(const QuiverMult& q, const DimVector& v, const HArrow& a) {
  return vertex_shape(q, v, a.source);
}

Representation::Representation(QuiverPtr q, DimVector v, std::vector<RMap> maps)
    : quiver_(std::move(q)), dims_(std::move(v)) {
  if (!quiver_) throw Error(ErrorCode::InvalidValue, "representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  for (auto x : dims_) {
    if (x < 0) throw Error(ErrorCode::NegativeDimension, "dimension vector has a negative entry");
  }
  DoubleQuiver dq(*quiver_);
  if (maps.size() != dq.size()) throw Error(ErrorCode::LengthMismatch, "expected one map per arrow of the double");
  maps_.reserve(maps.size());
  for (std::size_t h = 0; h < dq.size(); ++h) {
    const HArrow& a = dq[h];
    RMap& m = maps[h];
    if (!(m.src() == shape(a.source)) || !(m.dst() == shape(a.target))) {
      throw Error(ErrorCode::ShapeMismatch, "map for arrow " + std::to_string(h) + " has the wrong shape");
    }
    maps_.emplace_back(m.src(), m.dst(), a.order, m.flat());
  }
}

Representation Representation::zero(QuiverPtr q, DimVector v) {
  DoubleQuiver dq(*q);
  std::vector<RMap> maps;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    maps.push_back(RMap::zero(vertex_shape(*q, v, dq[h].source), vertex_shape(*q, v, dq[h].target), dq[h].order));
  }
  return Representation(std::move(q), std::move(v), std::move(maps));
}

ModShape Representation::shape(std::size_t i) const { return vertex_shape(*quiver_, dims_, i); }

void Representation::require_compatible(const Representation& o) const {
  if (!(*quiver_ == *o.quiver_) || dims_ != o.dims_) {
    throw Error(ErrorCode::ShapeMismatch, "representations live on different spaces");
  }
}

Representation& Representation::operator+=(const Representation& o) {
  require_compatible(o);
  for (std::size_t h = 0; h < maps_.size(); ++h) maps_[h] += o.maps_[h];
  return *this;
}

Representation& Representation::operator-=(const Representation& o) {
  require_compatible(o);
  for (std::size_t h = 0; h < maps_.size(); ++h) maps_[h] -= o.maps_[h];
  return *this;
}

Representation operator*(const GaussQ& s, Representation a) {
  for (auto& m : a.maps_) m *= s;
  return a;
}

bool operator==(const Representation& a, const Representation& b) {
  return *a.quiver_ == *b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

MomentValue moment_map(const Representation& rep) {
  const QuiverMult& q = rep.quiver();
  DoubleQuiver dq(q);
  MomentValue out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const ModShape s = rep.shape(i);
    QMatrix acc(s.dim(), s.dim());
    for (std::size_t h : dq.into(i)) {
      const HArrow& a = dq[h];
      QMatrix prod = rep.map(h).flat() * rep.map(dq.bar(h)).flat();
      for (int k = 0; k < a.f; ++k) {
        QMatrix term = shift_rows(shift_cols(prod, s, a.f - k - 1), s, k);
        if (a.sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
    }
    out.emplace_back(RMap(s, s, s.order, std::move(acc)));
  }
  return out;
}

MomentValue mesh_check(const Representation& rep, const ParamVector& lambda) {
  const QuiverMult& q = rep.quiver();
  check_params(q, lambda);
  MomentValue mu = moment_map(rep);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = mu[i] + REnd::scalar(rep.shape(i).rank, lambda[i]);
  return mu;
}

bool is_zero(const MomentValue& value) {
  for (const auto& x : value) {
    if (!x.flat().is_zero()) return false;
  }
  return true;
}

bool in_level_set(const Representation& rep, const ParamVector& lambda) { return is_zero(mesh_check(rep, lambda)); }

GaussQ level_sum(const QuiverMult& q, const ParamVector& lambda, const DimVector& v) {
  check_params(q, lambda);
  if (v.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "dimension vector length");
  GaussQ acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += GaussQ(v[i]) * lambda[i].residue();
  return acc;
}

bool level_check(const QuiverMult& q, const ParamVector& lambda, const DimVector& v) {
  return level_sum(q, lambda, v).is_zero();
}

GaussQ perpendicularity_defect(const MomentValue& mu) {
  GaussQ acc;
  for (const auto& x : mu) acc += trace_r(x).residue();
  return acc;
}

GaussQ moment_pairing(const MomentValue& x, const MomentValue& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "moment values of different length");
  GaussQ acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += pair_d(x[i], y[i], x[i].order());
  return acc;
}

GaussQ symplectic_form(const Representation& t1, const Representation& t2) {
  DoubleQuiver dq(t1.quiver());
  GaussQ acc;
  for (std::size_t h = 0; h < dq.original_count(); ++h) {
    const std::size_t hb = dq.bar(h);
    const int c = dq[h].order;
    acc += pair(t1.map(h), t2.map(hb), c);
    acc -= pair(t2.map(h), t1.map(hb), c);
  }
  return acc;
}

GaussQ symplectic_form_doubled(const Representation& t1, const Representation& t2) {
  DoubleQuiver dq(t1.quiver());
  GaussQ acc;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    const std::size_t hb = dq.bar(h);
    const int c = dq[h].order;
    GaussQ wedge = pair(t1.map(h), t2.map(hb), c) - pair(t2.map(h), t1.map(hb), c);
    acc += dq[h].sign > 0 ? wedge : -wedge;
  }
  return acc * GaussQ(mpq_class(1, 2));
}

Representation infinitesimal_action(const Representation& rep, const MomentValue& xi) {
  DoubleQuiver dq(rep.quiver());
  std::vector<RMap> maps;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    const HArrow& a = dq[h];
    maps.push_back(compose(xi[a.target], rep.map(h)) - compose(rep.map(h), xi[a.source]));
  }
  return Representation(rep.quiver_ptr(), rep.dims(), std::move(maps));
}

HamiltonianCheck moment_derivative_check(const Representation& rep, const Representation& delta,
                                         const MomentValue& xi) {
  MomentValue full = moment_map(rep + delta);
  MomentValue base = moment_map(rep);
  MomentValue quad = moment_map(delta);
  MomentValue derivative;
  for (std::size_t i = 0; i < full.size(); ++i) derivative.push_back(full[i] - base[i] - quad[i]);
  return {moment_pairing(derivative, xi), symplectic_form(infinitesimal_action(rep, xi), delta)};
}

Representation gauge(const Representation& rep, const std::vector<REnd>& g) {
  const QuiverMult& q = rep.quiver();
  if (g.size() != q.vertex_count()) throw Error(ErrorCode::LengthMismatch, "one group element per vertex");
  std::vector<REnd> inv;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i].src() == rep.shape(i))) throw Error(ErrorCode::ShapeMismatch, "group element has the wrong shape");
    inv.push_back(inverse(g[i]));
  }
  DoubleQuiver dq(q);
  std::vector<RMap> maps;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    maps.push_back(compose(compose(g[dq[h].target], rep.map(h)), inv[dq[h].source]));
  }
  return Representation(rep.quiver_ptr(), rep.dims(), std::move(maps));
}

Representation random_rep(QuiverPtr q, const DimVector& v, SplitMix64& rng, int bound) {
  DoubleQuiver dq(*q);
  std::vector<RMap> maps;
  for (std::size_t h = 0; h < dq.size(); ++h) {
    const HArrow& a = dq[h];
    maps.push_back(random_rmap(rng, vertex_shape(*q, v, a.source), vertex_shape(*q, v, a.target), a.order, bound));
  }
  return Representation(std::move(q), v, std::move(maps));
}

Representation random_rep(QuiverPtr q, const DimVector& v, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_rep(std::move(q), v, rng);
}

std::vector<REnd> random_group_element(const QuiverMult& q, const DimVector& v, SplitMix64& rng) {
  std::vector<REnd> out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    out.push_back(random_gauge(rng, static_cast<std::size_t>(v[i]), q.mult(i)));
  }
  return out;
}

MomentValue random_lie_element(const QuiverMult& q, const DimVector& v, SplitMix64& rng) {
  MomentValue out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    out.push_back(random_end(rng, static_cast<std::size_t>(v[i]), q.mult(i)));
  }
  return out;
}

}  // namespace qs
