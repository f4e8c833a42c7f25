#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qs/quiver.hpp"
#include "qs/report.hpp"
#include "qs/trunc.hpp"

namespace qs {

// lambda = (lambda_i)_i with lambda_i in R_{d_i}
using ParamVector = std::vector<TruncScalar>;

ParamVector zero_params(const QuiverMult& q);
// throws LengthMismatch / MismatchedOrder
void check_params(const QuiverMult& q, const ParamVector& lambda);

// Coordinates of R_d = (+)_i R_{d_i}: index offset(i) + k for the eps^k coefficient of component i.
std::vector<std::size_t> param_offsets(const QuiverMult& q);
std::size_t param_dim(const QuiverMult& q);
std::vector<GaussQ> flatten(const ParamVector& lambda);
ParamVector unflatten(const QuiverMult& q, const std::vector<GaussQ>& coords);

DimVector reflect_dim(const QuiverMult& q, std::size_t i, const DimVector& v);
ParamVector reflect_param(const QuiverMult& q, std::size_t i, const ParamVector& lambda);
// The transpose of reflect_param under the pairing sum_j <.,.>_{d_j}.
ParamVector transpose_action(const QuiverMult& q, std::size_t i, const ParamVector& kappa);

// s_i on Z^I, r_i and its transpose on R_d, as integer matrices acting on column vectors.
ZMatrix dim_reflection_matrix(const QuiverMult& q, std::size_t i);
ZMatrix param_reflection_matrix(const QuiverMult& q, std::size_t i);
ZMatrix transpose_action_matrix(const QuiverMult& q, std::size_t i);
// Gram matrix of sum_j <.,.>_{d_j}
ZMatrix pairing_matrix(const QuiverMult& q);

// Cartan matrix on I~ = {(i,k) : 0 <= k < d_i}.
struct LiftedCartan {
  std::vector<std::pair<std::size_t, int>> index;
  ZMatrix cartan;
  std::vector<int> mult;

  bool symmetrizable() const;
};

LiftedCartan lift_cartan(const QuiverMult& q);
ZMatrix lifted_reflection(const LiftedCartan& lc, std::size_t idx);
// s_{i,0} ... s_{i,d_i - 1}
ZMatrix lifted_product(const LiftedCartan& lc, std::size_t i);

// m_ij from c_ij c_ji; nullopt means infinity
std::optional<int> coxeter_order(const QuiverMult& q, std::size_t i, std::size_t j);
Report verify_coxeter(const QuiverMult& q);

// rho_i(lambda) = res(lambda_i)
std::vector<GaussQ> rho(const QuiverMult& q, const ParamVector& lambda);
ZMatrix rho_matrix(const QuiverMult& q);

}  // namespace qs
