#include "qs/reflect.hpp"

#include "qs/error.hpp"
#include "qs/random.hpp"

namespace qs {

std::size_t tilde_dim(const QuiverMult& q, const DimVector& v, std::size_t i) {
  DoubleQuiver dq(q);
  std::size_t acc = 0;
  for (std::size_t h : dq.into(i)) acc += static_cast<std::size_t>(v[dq[h].source]) * dq[h].f_bar;
  return acc;
}

VertexSplit split_at(const Representation& rep, std::size_t i) {
  const QuiverMult& q = rep.quiver();
  if (i >= q.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
  DoubleQuiver dq(q);
  VertexSplit out;
  out.vertex = i;
  out.arrows = dq.into(i);
  for (std::size_t h : out.arrows) {
    out.offsets.push_back(out.tilde_dim);
    out.tilde_dim += static_cast<std::size_t>(rep.dims()[dq[h].source]) * dq[h].f_bar;
  }
  const std::size_t vi = rep.shape(i).dim();
  out.into = QMatrix(vi, out.tilde_dim);
  out.out = QMatrix(out.tilde_dim, vi);
  for (std::size_t t = 0; t < out.arrows.size(); ++t) {
    const std::size_t h = out.arrows[t];
    QMatrix x = rep.map(h).generators();
    if (dq[h].sign < 0) x = -x;
    out.into.set_block(0, out.offsets[t], x);
    out.out.set_block(out.offsets[t], 0, rep.map(dq.bar(h)).top_rows());
  }
  return out;
}

Representation join_at(const Representation& rest, std::size_t i, std::int64_t new_dim, const QMatrix& into,
                       const QMatrix& out) {
  const QuiverMult& q = rest.quiver();
  DoubleQuiver dq(q);
  DimVector v = rest.dims();
  v[i] = new_dim;
  const ModShape vi = vertex_shape(q, v, i);
  std::vector<RMap> maps = rest.maps();
  std::size_t offset = 0;
  for (std::size_t h : dq.into(i)) {
    const HArrow& a = dq[h];
    const ModShape vs = vertex_shape(q, v, a.source);
    const std::size_t width = vs.rank * static_cast<std::size_t>(a.f_bar);
    QMatrix x = into.block(0, offset, vi.dim(), width);
    if (a.sign < 0) x = -x;
    maps[h] = RMap::from_generators(vs, vi, a.order, x);
    maps[dq.bar(h)] = RMap::from_top_rows(vi, vs, a.order, out.block(offset, 0, width, vi.dim()));
    offset += width;
  }
  if (into.cols() != offset || out.rows() != offset) throw Error(ErrorCode::ShapeMismatch, "blocks do not fit V~_i");
  return Representation(rest.quiver_ptr(), std::move(v), std::move(maps));
}

namespace {

struct ExtendedBlocks {
  RMap into;  // V~_i (x) R -> V_i (x) R
  RMap out;   // V_i (x) R -> V~_i (x) R
};

ExtendedBlocks extend_blocks(const VertexSplit& s, ModShape vi) {
  return {extend_scalars(RMap({s.tilde_dim, 1}, vi, 1, s.into)),
          extend_scalars_rev(RMap(vi, {s.tilde_dim, 1}, 1, s.out))};
}

}  // namespace

PhiImage phi(const Representation& rep, std::size_t i) {
  VertexSplit s = split_at(rep, i);
  ExtendedBlocks e = extend_blocks(s, rep.shape(i));
  PhiImage out{-REnd(compose(e.out, e.into)), {}};
  DoubleQuiver dq(rep.quiver());
  for (std::size_t h = 0; h < dq.size(); ++h) {
    if (dq[h].source == i || dq[h].target == i) {
      out.others.emplace_back(std::nullopt);
    } else {
      out.others.emplace_back(rep.map(h));
    }
  }
  return out;
}

REnd split_moment(const Representation& rep, std::size_t i) {
  ExtendedBlocks e = extend_blocks(split_at(rep, i), rep.shape(i));
  return REnd(compose(e.into, e.out));
}

Representation reflection_functor(const Representation& rep, std::size_t i, const ParamVector& lambda) {
  const QuiverMult& q = rep.quiver();
  check_params(q, lambda);
  const TruncScalar& li = lambda[i];
  if (!li.is_unit()) throw Error(ErrorCode::NotAUnit, "lambda at '" + q.vertices()[i].name + "' is not a unit");
  const std::int64_t new_dim = reflect_dim(q, i, rep.dims())[i];
  if (new_dim < 0) throw Error(ErrorCode::EmptyLevelSet, "s_i(v)_i is negative");
  const ModShape vi = rep.shape(i);
  const REnd mu_i = moment_map(rep)[i];
  if (!(mu_i == REnd::scalar(vi.rank, -li))) {
    throw Error(ErrorCode::NotInLevelSet, "mu_i(B) != -lambda_i Id at '" + q.vertices()[i].name + "'");
  }

  const std::size_t nt = tilde_dim(q, rep.dims(), i);
  REnd a = phi(rep, i).a;
  REnd shifted = a - REnd::scalar(nt, li);
  REnd e = -trunc_inv(li) * shifted;
  FreeBasis fb = free_basis_of_image(e);
  if (static_cast<std::int64_t>(fb.basis.src().rank) != new_dim) {
    throw Error(ErrorCode::InvalidValue, "image of the idempotent has an unexpected rank");
  }
  const std::size_t r = fb.basis.src().rank;
  RMap new_into = compose(REnd::scalar(r, li), compose(fb.coords, e));
  QMatrix into = restrict_scalars(new_into, 1, ExtensionKind::Forward).flat();
  QMatrix out = restrict_scalars(fb.basis, 1, ExtensionKind::Reverse).flat();

  DimVector v = rep.dims();
  v[i] = new_dim;
  Representation rest = Representation::zero(rep.quiver_ptr(), v);
  std::vector<RMap> maps = rest.maps();
  DoubleQuiver dq(q);
  for (std::size_t h = 0; h < dq.size(); ++h) {
    if (dq[h].source != i && dq[h].target != i) maps[h] = rep.map(h);
  }
  return join_at(Representation(rep.quiver_ptr(), v, std::move(maps)), i, new_dim, into, out);
}

Representation random_level_point(QuiverPtr q, const ParamVector& lambda, const DimVector& v, std::size_t i,
                                  std::uint64_t seed) {
  check_params(*q, lambda);
  if (i >= q->vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
  const TruncScalar& li = lambda[i];
  if (!li.is_unit()) throw Error(ErrorCode::NotAUnit, "lambda at '" + q->vertices()[i].name + "' is not a unit");
  const std::size_t nt = tilde_dim(*q, v, i);
  const auto vi = static_cast<std::size_t>(v[i]);
  if (vi > nt) throw Error(ErrorCode::EmptyLevelSet, "s_i(v)_i is negative");
  const int d = q->mult(i);

  OrbitSpec spec(d, {{nt - vi, TruncScalar(d)}, {vi, li}});
  LegPoint base = canonical_leg_point(spec);
  SplitMix64 rng(seed);
  REnd g = random_gauge(rng, nt, d);
  REnd h = random_gauge(rng, vi, d);
  RMap into = compose(compose(h, leg_down(spec, base, 0)), inverse(g));
  RMap out = compose(compose(g, leg_up(spec, base, 0)), inverse(h));

  Representation rest = random_rep(q, v, rng);
  return join_at(rest, i, v[i], restrict_scalars(into, 1, ExtensionKind::Forward).flat(),
                 restrict_scalars(out, 1, ExtensionKind::Reverse).flat());
}

REnd induced_gauge(const QuiverMult& q, const DimVector& v, const std::vector<REnd>& g, std::size_t i) {
  DoubleQuiver dq(q);
  const int di = q.mult(i);
  const std::size_t nt = tilde_dim(q, v, i);
  std::vector<QMatrix> coeffs(static_cast<std::size_t>(di), QMatrix(nt, nt));
  std::size_t offset = 0;
  for (std::size_t h : dq.into(i)) {
    const HArrow& a = dq[h];
    const REnd& gs = g[a.source];
    const int ds = q.mult(a.source);
    const auto vs = static_cast<std::size_t>(v[a.source]);
    const std::size_t width = vs * static_cast<std::size_t>(a.f_bar);
    // g_s written over R_{d_h} in the basis V_h, then eps_h -> eps_i^{f_h}
    for (int k = 0; k < a.order; ++k) {
      QMatrix& target = coeffs[static_cast<std::size_t>(k * a.f)];
      for (std::size_t jr = 0; jr < vs; ++jr) {
        for (int lr = 0; lr < a.f_bar; ++lr) {
          for (std::size_t jc = 0; jc < vs; ++jc) {
            for (int lc = 0; lc < a.f_bar; ++lc) {
              const std::size_t row = jr * static_cast<std::size_t>(ds) + static_cast<std::size_t>(lr + k * a.f_bar);
              const std::size_t col = jc * static_cast<std::size_t>(ds) + static_cast<std::size_t>(lc);
              target(offset + jr * a.f_bar + lr, offset + jc * a.f_bar + lc) = gs.flat()(row, col);
            }
          }
        }
      }
    }
    offset += width;
  }
  return REnd::from_coeffs(nt, di, coeffs);
}

namespace {

std::vector<GaussQ> invariants(const Representation& rep) {
  DoubleQuiver dq(rep.quiver());
  std::vector<GaussQ> out;
  for (std::size_t h = 0; h < dq.original_count(); ++h) {
    TruncScalar t = trace_over(compose(rep.map(h), rep.map(dq.bar(h))), dq[h].order);
    out.insert(out.end(), t.coeffs().begin(), t.coeffs().end());
  }
  return out;
}

struct WordResult {
  Representation rep;
  ParamVector lambda;
};

WordResult apply_word(Representation rep, ParamVector lambda, std::size_t first, std::size_t second, int length) {
  for (int step = 0; step < length; ++step) {
    const std::size_t k = step % 2 == 0 ? first : second;
    rep = reflection_functor(rep, k, lambda);
    lambda = reflect_param(rep.quiver(), k, lambda);
  }
  return {std::move(rep), std::move(lambda)};
}

}  // namespace

BraidExperiment braid_experiment(const Representation& rep, const ParamVector& lambda, std::size_t i,
                                 std::size_t j) {
  BraidExperiment out;
  auto m = coxeter_order(rep.quiver(), i, j);
  if (!m) {
    out.note = "m_ij is infinite";
    return out;
  }
  if (!in_level_set(rep, lambda)) {
    out.note = "point is not on the full level set";
    return out;
  }
  try {
    WordResult left = apply_word(rep, lambda, i, j, *m);
    WordResult right = apply_word(rep, lambda, j, i, *m);
    out.applicable = true;
    out.dims_agree = left.rep.dims() == right.rep.dims();
    out.params_agree = left.lambda == right.lambda;
    out.invariants_agree = out.dims_agree && invariants(left.rep) == invariants(right.rep);
  } catch (const Error& e) {
    out.note = e.what();
  }
  return out;
}

}  // namespace qs
