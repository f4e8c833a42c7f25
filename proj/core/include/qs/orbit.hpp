#pragma once

#include <string>
#include <vector>

#include "qs/repn.hpp"
#include "qs/rmap.hpp"

namespace qs {

struct OrbitBlock {
  std::size_t dim = 0;
  TruncScalar theta{1};
};

// Theta = (+)_i theta_i Id_{W_i} on V = (+)_i W_i, with theta_i - theta_j a unit for i != j.
class OrbitSpec {
 public:
  OrbitSpec(int d, std::vector<OrbitBlock> blocks);

  int order() const { return d_; }
  const std::vector<OrbitBlock>& blocks() const { return blocks_; }
  const TruncScalar& theta(std::size_t i) const { return blocks_[i].theta; }
  // l, the leg length
  std::size_t legs() const { return blocks_.size() - 1; }
  std::size_t rank() const { return leg_rank(0); }
  // dim V_i = sum_{j >= i} dim W_j
  std::size_t leg_rank(std::size_t i) const;
  std::size_t block_offset(std::size_t i) const;
  // lambda_i = theta_i - theta_{i-1}, i >= 1
  TruncScalar lambda(std::size_t i) const;
  REnd theta_matrix() const;

 private:
  int d_;
  std::vector<OrbitBlock> blocks_;
};

struct Membership {
  bool member = false;
  std::string reason;
  std::vector<REnd> idempotents;
};

// pi_i = prod_{j != i} (theta_i - theta_j)^-1 (A - theta_j)
std::vector<REnd> orbit_idempotents(const OrbitSpec& spec, const REnd& a);
Membership orbit_membership(const OrbitSpec& spec, const REnd& a);

// Free basis of the image of an idempotent: lift of the lexicographically first
// independent columns of its residue. coords o basis = Id.
struct FreeBasis {
  RMap basis;
  RMap coords;
};
FreeBasis free_basis_of_image(const REnd& e);

// A point of the leg: B_{1,0} = a^{R_d}, B_{0,1} = b^{R_d}, and for 1 <= i < l
// down[i-1] = B_{i+1,i} : V_i -> V_{i+1}, up[i-1] = B_{i,i+1} : V_{i+1} -> V_i.
struct LegPoint {
  QMatrix a;  // V -> V_1 (x) R_d
  QMatrix b;  // V_1 (x) R_d -> V
  std::vector<RMap> down;
  std::vector<RMap> up;
};

RMap leg_down(const OrbitSpec& spec, const LegPoint& pt, std::size_t i);
RMap leg_up(const OrbitSpec& spec, const LegPoint& pt, std::size_t i);
// nu(B) = -B_{0,1} B_{1,0} + theta_0 Id
REnd leg_nu(const OrbitSpec& spec, const LegPoint& pt);
// mu~_i = B_{i,i-1} B_{i-1,i} - B_{i,i+1} B_{i+1,i}, i = 1..l
MomentValue leg_moment(const OrbitSpec& spec, const LegPoint& pt);
// mu~_i + lambda_i Id
MomentValue leg_residual(const OrbitSpec& spec, const LegPoint& pt);
// B_{i,i+1} injective and B_{i+1,i} surjective for all i
bool leg_nondegenerate(const OrbitSpec& spec, const LegPoint& pt);

LegPoint canonical_leg_point(const OrbitSpec& spec);
// Flag of free submodules V_i = Im(sum_{j >= i} pi_j), i = 0..l
std::vector<FreeBasis> leg_flag(const OrbitSpec& spec, const REnd& a);
// throws NotInOrbit
LegPoint leg_factorize(const OrbitSpec& spec, const REnd& a);
// g . B for g = (g_i) in prod_{i >= 1} G_d(V_i); B_{1,0} -> g_1 B_{1,0}, B_{0,1} -> B_{0,1} g_1^-1
LegPoint act_on_leg(const OrbitSpec& spec, const LegPoint& pt, const std::vector<REnd>& g);

// rank of xi -> [xi, Theta] on gl_d(V)
std::size_t orbit_dimension(const OrbitSpec& spec);
// d ((dim V)^2 - sum_i (dim W_i)^2)
std::size_t orbit_dimension_formula(const OrbitSpec& spec);

struct ShiftDecomposition {
  QMatrix top;  // A_{d-1}
  REnd rest;    // A - eps^(d-1) A_{d-1}
};
ShiftDecomposition shift_decompose(const REnd& a);
// B - eps^(d-1) (m + zeta Id); throws TopSliceNotZero
REnd shift_map(const REnd& b, const QMatrix& m, const GaussQ& zeta);

}  // namespace qs
