#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qs/quiver.hpp"
#include "qs/report.hpp"
#include "qs/weyl.hpp"

namespace qs {

// vertices[0] is the base vertex (multiplicity 1), vertices[1..l] the leg (common multiplicity d > 1).
struct LegDescriptor {
  std::vector<std::size_t> vertices;
  int d = 1;

  std::size_t length() const { return vertices.size() - 1; }
  friend bool operator==(const LegDescriptor&, const LegDescriptor&) = default;
};

// throws InvalidLeg
void validate_leg(const QuiverMult& q, const LegDescriptor& leg);
LegDescriptor make_leg(const QuiverMult& q, const std::vector<std::string>& names);
// Every maximal irregular leg, ordered by base vertex then first leg vertex.
std::vector<LegDescriptor> find_legs(const QuiverMult& q);

QuiverMult regularize_quiver(const QuiverMult& q, const LegDescriptor& leg);
DimVector regularize_dim(const QuiverMult& q, const LegDescriptor& leg, const DimVector& v);
ParamVector regularize_lambda(const QuiverMult& q, const LegDescriptor& leg, const ParamVector& lambda);

struct HypothesisReport {
  std::vector<std::size_t> negative_dims;                        // leg positions i in [0, l-1] with v-check_i < 0
  std::vector<std::pair<std::size_t, std::size_t>> non_units;    // (i, j) with lambda_i + ... + lambda_j not a unit
  std::optional<bool> corollary;                                 // l = 1: lambda_1 is a unit

  bool holds() const { return negative_dims.empty() && non_units.empty(); }
};
HypothesisReport check_theorem_hypotheses(const QuiverMult& q, const LegDescriptor& leg, const ParamVector& lambda,
                                          const DimVector& v);

// phi(v) = v - sum_{i in [0, l-1]} v_{i+1} alpha-check_i
ZMatrix phi_matrix(const QuiverMult& q, const LegDescriptor& leg);
ZMatrix phi_inverse_matrix(const QuiverMult& q, const LegDescriptor& leg);
// lambda -> lambda-check on coordinates of R_d and R_d-check
ZMatrix psi_matrix(const QuiverMult& q, const LegDescriptor& leg);
// transposition of leg positions i-1 and i, on Z^I and on R_d-check
ZMatrix leg_transposition(const QuiverMult& q, const LegDescriptor& leg, std::size_t i);
ZMatrix leg_transposition_params(const QuiverMult& regular, const LegDescriptor& leg, std::size_t i);

Report verify_isometry(const QuiverMult& q, const LegDescriptor& leg);
Report verify_semidirect(const QuiverMult& q, const LegDescriptor& leg);
Report verify_param_equivariance(const QuiverMult& q, const LegDescriptor& leg);

}  // namespace qs
