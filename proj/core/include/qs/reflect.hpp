#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qs/orbit.hpp"
#include "qs/repn.hpp"

namespace qs {

// V~_i = (+)_{t(h) = i} V_h with V_h = (+)_{l < f_hbar} V_s(h) eps^l.
struct VertexSplit {
  std::size_t vertex = 0;
  std::vector<std::size_t> arrows;   // h with t(h) = i, in index order
  std::vector<std::size_t> offsets;  // start of V_h inside V~_i
  std::size_t tilde_dim = 0;
  QMatrix into;  // B_{i<-} = (sgn(h) alpha_h^-1 B_h)_h : V~_i -> V_i (x) R_{d_i}
  QMatrix out;   // B_{<-i} = (beta_hbar^-1 B_hbar)_h : V_i (x) R_{d_i} -> V~_i
};

std::size_t tilde_dim(const QuiverMult& q, const DimVector& v, std::size_t i);
VertexSplit split_at(const Representation& rep, std::size_t i);
// Reassembles a representation from C-linear blocks at vertex i; maps not touching i come from `rest`.
Representation join_at(const Representation& rest, std::size_t i, std::int64_t new_dim, const QMatrix& into,
                       const QMatrix& out);

// Phi_i(B) = (-B_{<-i}^R B_{i<-}^R, B_{!=i})
struct PhiImage {
  REnd a;
  std::vector<std::optional<RMap>> others;  // nullopt for arrows touching i

  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};
PhiImage phi(const Representation& rep, std::size_t i);
// B_{i<-}^R B_{<-i}^R, an independent route to mu_i
REnd split_moment(const Representation& rep, std::size_t i);

// F_i : mu_i = -lambda_i Id  ->  mu'_i = lambda_i Id.
// Throws NotAUnit, EmptyLevelSet, NotInLevelSet.
Representation reflection_functor(const Representation& rep, std::size_t i, const ParamVector& lambda);

// (g, h) . B0 with B0 the canonical point on mu_i = -lambda_i Id; the other maps are random.
Representation random_level_point(QuiverPtr q, const ParamVector& lambda, const DimVector& v, std::size_t i,
                                  std::uint64_t seed);

// The automorphism of V~_i (x) R_{d_i} induced by g = (g_j)_j.
REnd induced_gauge(const QuiverMult& q, const DimVector& v, const std::vector<REnd>& g, std::size_t i);

// Experimental: compares the two alternating words of length m_ij in F_i, F_j on a point of the full
// level set. Only reported, never asserted.
struct BraidExperiment {
  bool applicable = false;
  std::string note;
  bool dims_agree = false;
  bool params_agree = false;
  bool invariants_agree = false;
};
BraidExperiment braid_experiment(const Representation& rep, const ParamVector& lambda, std::size_t i,
                                 std::size_t j);

}  // namespace qs
