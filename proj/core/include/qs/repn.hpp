#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qs/quiver.hpp"
#include "qs/random.hpp"
#include "qs/rmap.hpp"
#include "qs/weyl.hpp"

namespace qs {

using QuiverPtr = std::shared_ptr<const QuiverMult>;

// B = (B_h)_{h in H}, B_h : V_s(h) (x) R_{d_s(h)} -> V_t(h) (x) R_{d_t(h)} linear over R_{d_h}.
// Maps are indexed like DoubleQuiver.
class Representation {
 public:
  Representation(QuiverPtr q, DimVector v, std::vector<RMap> maps);

  static Representation zero(QuiverPtr q, DimVector v);

  const QuiverMult& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  const std::vector<RMap>& maps() const { return maps_; }
  const RMap& map(std::size_t h) const { return maps_[h]; }
  ModShape shape(std::size_t i) const;

  Representation& operator+=(const Representation& o);
  Representation& operator-=(const Representation& o);
  friend Representation operator+(Representation a, const Representation& b) { return a += b; }
  friend Representation operator-(Representation a, const Representation& b) { return a -= b; }
  friend Representation operator*(const GaussQ& s, Representation a);

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  void require_compatible(const Representation& o) const;

  QuiverPtr quiver_;
  DimVector dims_;
  std::vector<RMap> maps_;
};

ModShape vertex_shape(const QuiverMult& q, const DimVector& v, std::size_t i);
ModShape arrow_source(const QuiverMult& q, const DimVector& v, const HArrow& a);

// mu_i(B) = sum_{t(h)=i} sgn(h) sum_{k < f_h} N^k B_h B_hbar N^(f_h-k-1)
using MomentValue = std::vector<REnd>;
MomentValue moment_map(const Representation& rep);
// mu_i(B) + lambda_i Id, zero exactly on the level set mu = -lambda
MomentValue mesh_check(const Representation& rep, const ParamVector& lambda);
bool in_level_set(const Representation& rep, const ParamVector& lambda);
bool is_zero(const MomentValue& value);

// sum_i v_i res(lambda_i)
GaussQ level_sum(const QuiverMult& q, const ParamVector& lambda, const DimVector& v);
bool level_check(const QuiverMult& q, const ParamVector& lambda, const DimVector& v);
// sum_i res(tr mu_i); vanishes identically
GaussQ perpendicularity_defect(const MomentValue& mu);
// sum_i <x_i, y_i>_{d_i}
GaussQ moment_pairing(const MomentValue& x, const MomentValue& y);

// omega(t1, t2) = sum_{h in Omega} <t1_h, t2_hbar>_{d_h} - <t2_h, t1_hbar>_{d_h}
GaussQ symplectic_form(const Representation& t1, const Representation& t2);
// 1/2 sum_{h in H} sgn(h) <dB_h ^ dB_hbar>, the doubled form of the same 2-form
GaussQ symplectic_form_doubled(const Representation& t1, const Representation& t2);

// xi*_B : h -> xi_t(h) B_h - B_h xi_s(h)
Representation infinitesimal_action(const Representation& rep, const MomentValue& xi);

struct HamiltonianCheck {
  GaussQ lhs;  // <D mu(B)[delta], xi>
  GaussQ rhs;  // omega(xi*_B, delta)
  bool holds() const { return lhs == rhs; }
};
HamiltonianCheck moment_derivative_check(const Representation& rep, const Representation& delta,
                                         const MomentValue& xi);

// B_h -> g_t(h) B_h g_s(h)^-1
Representation gauge(const Representation& rep, const std::vector<REnd>& g);

Representation random_rep(QuiverPtr q, const DimVector& v, SplitMix64& rng, int bound = 3);
Representation random_rep(QuiverPtr q, const DimVector& v, std::uint64_t seed);
std::vector<REnd> random_group_element(const QuiverMult& q, const DimVector& v, SplitMix64& rng);
MomentValue random_lie_element(const QuiverMult& q, const DimVector& v, SplitMix64& rng);

}  // namespace qs
