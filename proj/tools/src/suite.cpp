#include "qs_cli/suite.hpp"

#include <algorithm>
#include <functional>

#include "qs/error.hpp"
#include "qs/orbit.hpp"
#include "qs/quiver.hpp"
#include "qs/random.hpp"
#include "qs/reflect.hpp"
#include "qs/regularize.hpp"
#include "qs_cli/json_io.hpp"

namespace qs::suite {

namespace {

class Recorder {
 public:
  Recorder(SuiteResult& result, std::string quiver, std::uint64_t seed)
      : result_(result), quiver_(std::move(quiver)), seed_(seed) {}

  void check(const std::string& name, bool passed, const std::string& detail = {}) {
    ++result_.checks;
    if (!passed) result_.failures.push_back({quiver_, name, seed_, detail});
  }
  void report(const Report& r) {
    for (const auto& c : r.checks) check(c.name, c.passed, c.detail);
  }
  // runs body, turning an unexpected exception into a failed check
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }

 private:
  SuiteResult& result_;
  std::string quiver_;
  std::uint64_t seed_;
};

DimVector random_dims(SplitMix64& rng, const QuiverMult& q, int max) {
  DimVector v;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) v.push_back(rng.uniform(0, max));
  return v;
}

ParamVector random_params(SplitMix64& rng, const QuiverMult& q) {
  ParamVector out;
  for (int d : q.multiplicities()) out.push_back(random_scalar(rng, d));
  return out;
}

void coxeter_suite(const CorpusEntry& e, SuiteResult& result, std::uint64_t seed, std::size_t entry,
                   std::size_t trials) {
  const QuiverMult& q = *e.quiver;
  Recorder rec(result, e.name, seed);
  rec.guard("coxeter", [&] {
    rec.report(verify_coxeter(q));
    const ZMatrix p = pairing_matrix(q);
    const ZMatrix rho_m = rho_matrix(q);
    const LiftedCartan lc = lift_cartan(q);
    rec.check("lifted Cartan is symmetrizable", lc.symmetrizable());
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      const std::string& name = q.vertices()[i].name;
      const ZMatrix r = param_reflection_matrix(q, i);
      const ZMatrix st = transpose_action_matrix(q, i);
      rec.check("s~_" + name + " is the transpose of r_" + name, p * r.transpose() * p == st);
      rec.check("s~_" + name + " = prod_k s_(" + name + ",k)", lifted_product(lc, i) == st);
      rec.check("rho r_" + name + " = s_" + name + "^t rho", rho_m * r == dim_reflection_matrix(q, i).transpose() * rho_m);
    }
  });
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, "coxeter", entry, t);
    Recorder trial(result, e.name, s);
    trial.guard("level compatibility", [&] {
      SplitMix64 rng(s);
      DimVector v = random_dims(rng, q, 3);
      ParamVector lambda = random_params(rng, q);
      const std::size_t i = t % q.vertex_count();
      trial.check("level sum is W-invariant",
                  level_sum(q, lambda, v) == level_sum(q, reflect_param(q, i, lambda), reflect_dim(q, i, v)));
    });
  }
}

void moment_suite(const CorpusEntry& e, SuiteResult& result, std::uint64_t seed, std::size_t entry,
                  std::size_t trials) {
  const QuiverMult& q = *e.quiver;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, "moment", entry, t);
    Recorder rec(result, e.name, s);
    rec.guard("moment", [&] {
      SplitMix64 rng(s);
      DimVector v = random_dims(rng, q, 2);
      Representation rep = random_rep(e.quiver, v, rng);
      MomentValue mu = moment_map(rep);
      rec.check("perpendicularity", perpendicularity_defect(mu).is_zero());
      for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        rec.check("mu_" + q.vertices()[i].name + " matches the split formula", split_moment(rep, i) == mu[i]);
      }
      std::vector<REnd> g = random_group_element(q, v, rng);
      MomentValue moved = moment_map(gauge(rep, g));
      bool equivariant = true;
      for (std::size_t i = 0; i < q.vertex_count(); ++i) equivariant = equivariant && moved[i] == g[i] * mu[i] * inverse(g[i]);
      rec.check("gauge equivariance", equivariant);
      Representation delta = random_rep(e.quiver, v, rng);
      MomentValue xi = random_lie_element(q, v, rng);
      rec.check("hamiltonian identity", moment_derivative_check(rep, delta, xi).holds());
      const GaussQ w = symplectic_form(rep, delta);
      rec.check("omega is antisymmetric", w == -symplectic_form(delta, rep));
      rec.check("omega agrees with the doubled sum", w == symplectic_form_doubled(rep, delta));
    });
  }
}

void functor_suite(const CorpusEntry& e, SuiteResult& result, std::uint64_t seed, std::size_t entry,
                   std::size_t trials) {
  const QuiverMult& q = *e.quiver;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, "functor", entry, t);
    Recorder rec(result, e.name, s);
    rec.guard("functor", [&] {
      SplitMix64 rng(s);
      const std::size_t i = t % q.vertex_count();
      DimVector v = random_dims(rng, q, 2);
      const auto nt = static_cast<std::int64_t>(tilde_dim(q, v, i));
      v[i] = std::min(v[i], nt);
      ParamVector lambda = random_params(rng, q);
      lambda[i] = random_unit(rng, q.mult(i));
      Representation rep = random_level_point(e.quiver, lambda, v, i, rng.next());
      MomentValue mu = moment_map(rep);
      rec.check("sampled point lies on mu_i = -lambda_i", mu[i] == REnd::scalar(v[i], -lambda[i]));

      Representation image = reflection_functor(rep, i, lambda);
      ParamVector reflected = reflect_param(q, i, lambda);
      MomentValue mu2 = moment_map(image);
      rec.check("(a) mu'_i = lambda_i Id", mu2[i] == REnd::scalar(image.dims()[i], lambda[i]));
      bool shifted = true;
      for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        if (j == i) continue;
        REnd expected = -REnd::scalar(v[j], reflected[j] - lambda[j]);
        shifted = shifted && (mu2[j] - mu[j]) == expected;
      }
      rec.check("(b) mu'_j - mu_j = -(r_i(lambda)_j - lambda_j) Id", shifted);
      rec.check("(c) dim V'_i = s_i(v)_i", image.dims() == reflect_dim(q, i, v));
      Representation back = reflection_functor(image, i, reflected);
      rec.check("(d) Phi_i(F_i F_i B) = Phi_i(B)", phi(back, i) == phi(rep, i));

      DimVector too_big = v;
      too_big[i] = nt + 1;
      bool raised = false;
      try {
        reflection_functor(random_rep(e.quiver, too_big, rng), i, lambda);
      } catch (const Error& err) {
        raised = err.code() == ErrorCode::EmptyLevelSet;
      }
      rec.check("(e) EmptyLevelSet when s_i(v)_i < 0", raised);
    });
  }
}

OrbitSpec random_spec(SplitMix64& rng) {
  const int d = static_cast<int>(rng.uniform(1, 3));
  const auto blocks = static_cast<std::size_t>(rng.uniform(2, 3));
  std::vector<std::int64_t> constants;
  while (constants.size() < blocks) {
    std::int64_t c = rng.uniform(-4, 4);
    if (std::find(constants.begin(), constants.end(), c) == constants.end()) constants.push_back(c);
  }
  std::vector<OrbitBlock> out;
  std::size_t total = 0;
  for (std::size_t k = 0; k < blocks; ++k) {
    TruncScalar theta = random_scalar(rng, d, 2);
    theta[0] = GaussQ(constants[k]);
    auto dim = static_cast<std::size_t>(rng.uniform(0, 2));
    total += dim;
    out.push_back({dim, theta});
  }
  if (total == 0) out.back().dim = 1;
  return OrbitSpec(d, std::move(out));
}

void orbit_suite(SuiteResult& result, std::uint64_t seed, std::size_t trials) {
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, "orbit", 0, t);
    Recorder rec(result, "-", s);
    rec.guard("orbit", [&] {
      SplitMix64 rng(s);
      OrbitSpec spec = random_spec(rng);
      const std::size_t n = spec.rank();
      REnd g = random_gauge(rng, n, spec.order());
      REnd a = g * spec.theta_matrix() * inverse(g);
      rec.check("conjugate is a member", orbit_membership(spec, a).member);
      LegPoint pt = leg_factorize(spec, a);
      rec.check("nu(B) = A", leg_nu(spec, pt) == a);
      MomentValue residual = leg_residual(spec, pt);
      rec.check("leg moment equals -lambda Id", is_zero(residual));
      rec.check("leg point is nondegenerate", leg_nondegenerate(spec, pt));

      std::vector<QMatrix> coeffs(static_cast<std::size_t>(spec.order()), QMatrix(n, n));
      coeffs[static_cast<std::size_t>(rng.uniform(0, spec.order() - 1))](0, 0) = GaussQ(rng.uniform(1, 3));
      REnd off = a + REnd::from_coeffs(n, spec.order(), coeffs);
      rec.check("trace-shifted matrix is not a member", !orbit_membership(spec, off).member);
    });
  }
}

void regularize_suite(const CorpusEntry& e, SuiteResult& result, std::uint64_t seed, std::size_t entry,
                      std::size_t trials) {
  const QuiverMult& q = *e.quiver;
  Recorder rec(result, e.name, seed);
  std::vector<LegDescriptor> legs;
  rec.guard("find legs", [&] { legs = find_legs(q); });
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const LegDescriptor& leg = legs[k];
    rec.guard("regularize", [&] {
      rec.report(verify_isometry(q, leg));
      rec.report(verify_semidirect(q, leg));
      rec.report(verify_param_equivariance(q, leg));
    });
    const QuiverMult regular = regularize_quiver(q, leg);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = trial_seed(seed, "regularize", entry * 64 + k, t);
      Recorder trial(result, e.name, s);
      trial.guard("regularize trial", [&] {
        SplitMix64 rng(s);
        DimVector v = random_dims(rng, q, 2);
        for (std::size_t p = leg.length(); p-- > 0;) {
          v[leg.vertices[p]] = v[leg.vertices[p + 1]] + rng.uniform(0, 2);
        }
        ParamVector lambda = random_params(rng, q);
        DimVector vc = regularize_dim(q, leg, v);
        ParamVector lc = regularize_lambda(q, leg, lambda);
        trial.check("expected dimension is preserved", expected_dim(q, v) == expected_dim(regular, vc));
        trial.check("level sum is preserved", level_sum(q, lambda, v) == level_sum(regular, lc, vc));
      });
    }
  }
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite, std::size_t entry, std::size_t trial) {
  std::uint64_t label = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : suite) label = (label ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  SplitMix64 rng(seed ^ (label * 0x9e3779b97f4a7c15ULL));
  rng.next();
  SplitMix64 e = rng.fork(entry + 1);
  return e.fork(trial + 1).next();
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::InvalidValue, "'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".quiver") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    out.push_back({f.stem().string(), std::make_shared<const QuiverMult>(parse_quiver(io::read_text_file(f.string())))});
  }
  return out;
}

std::vector<SuiteResult> run_suite(const std::vector<CorpusEntry>& corpus, std::string_view suite, std::uint64_t seed,
                                   std::size_t trials) {
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    selected.emplace_back(suite);
  } else {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  }
  std::vector<SuiteResult> out;
  for (const auto& name : selected) {
    SuiteResult result{name, 0, {}};
    if (name == "orbit") {
      orbit_suite(result, seed, trials);
    } else {
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        if (name == "coxeter") coxeter_suite(corpus[k], result, seed, k, trials);
        if (name == "moment") moment_suite(corpus[k], result, seed, k, trials);
        if (name == "functor") functor_suite(corpus[k], result, seed, k, trials);
        if (name == "regularize") regularize_suite(corpus[k], result, seed, k, trials);
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace qs::suite
