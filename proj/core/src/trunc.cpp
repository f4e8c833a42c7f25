#include "qs/trunc.hpp"

#include <cctype>

#include "qs/error.hpp"

namespace qs {

namespace {

void require_same_order(const TruncScalar& a, const TruncScalar& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::MismatchedOrder, "orders " + std::to_string(a.order()) + " and " +
                                                std::to_string(b.order()) + " differ");
  }
}

}  // namespace

TruncScalar::TruncScalar(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidValue, "order must be positive");
  coeffs_.assign(static_cast<std::size_t>(order), GaussQ());
}

TruncScalar::TruncScalar(std::vector<GaussQ> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidValue, "order must be positive");
}

TruncScalar TruncScalar::constant(int order, const GaussQ& value) {
  TruncScalar out(order);
  out.coeffs_[0] = value;
  return out;
}

TruncScalar TruncScalar::monomial(int order, int power, const GaussQ& value) {
  TruncScalar out(order);
  if (power < 0) throw Error(ErrorCode::InvalidValue, "negative power");
  if (power < order) out.coeffs_[static_cast<std::size_t>(power)] = value;
  return out;
}

TruncScalar TruncScalar::parse(std::string_view text) {
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(ErrorCode::InvalidValue, "expected '[c0, c1, ...]'");
  }
  for (std::size_t k = 0; k < text.size(); ++k) {
    if ((k < open || k > close) && !std::isspace(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorCode::InvalidValue, "trailing characters after truncated scalar");
    }
  }
  std::vector<GaussQ> coeffs;
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
    coeffs.push_back(GaussQ::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TruncScalar(std::move(coeffs));
}

std::string TruncScalar::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ", ";
    out += coeffs_[k].str();
  }
  return out + "]";
}

bool TruncScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncScalar& TruncScalar::operator+=(const TruncScalar& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncScalar& TruncScalar::operator-=(const TruncScalar& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncScalar& TruncScalar::operator*=(const GaussQ& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncScalar TruncScalar::operator-() const {
  TruncScalar out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

TruncScalar operator*(const TruncScalar& a, const TruncScalar& b) { return trunc_mul(a, b); }

TruncScalar trunc_mul(const TruncScalar& a, const TruncScalar& b) {
  require_same_order(a, b);
  const int d = a.order();
  TruncScalar out(d);
  for (int i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < d; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncScalar trunc_inv(const TruncScalar& a) {
  if (!a.is_unit()) throw Error(ErrorCode::NotAUnit, a.str() + " has zero constant term");
  const int d = a.order();
  TruncScalar out(d);
  GaussQ inv0 = a[0].inverse();
  out[0] = inv0;
  for (int k = 1; k < d; ++k) {
    GaussQ acc;
    for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc * inv0;
  }
  return out;
}

GaussQ residue_pair(const TruncScalar& f, const TruncScalar& g) {
  require_same_order(f, g);
  const int d = f.order();
  GaussQ acc;
  for (int k = 0; k < d; ++k) acc += f[k] * g[d - 1 - k];
  return acc;
}

TruncScalar embed_subring(const TruncScalar& a, int d) {
  const int c = a.order();
  if (d < 1 || d % c != 0) {
    throw Error(ErrorCode::NotDivisible, std::to_string(c) + " does not divide " + std::to_string(d));
  }
  TruncScalar out(d);
  for (int k = 0; k < c; ++k) out[k * (d / c)] = a[k];
  return out;
}

}  // namespace qs
