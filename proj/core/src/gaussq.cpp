#include "qs/gaussq.hpp"

#include <cctype>

#include "qs/error.hpp"

namespace qs {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::InvalidValue, "malformed number '" + std::string(whole) + "'");
  std::string s(text);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+') {
      throw Error(ErrorCode::InvalidValue, "malformed number '" + std::string(whole) + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && (slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos)) {
    throw Error(ErrorCode::InvalidValue, "malformed number '" + std::string(whole) + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
    throw Error(ErrorCode::InvalidValue, "malformed number '" + std::string(whole) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

GaussQ::GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussQ GaussQ::parse(std::string_view raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw Error(ErrorCode::InvalidValue, "empty number");
  if (text.back() != 'i') return GaussQ(parse_rational(text, raw));

  std::string body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading character
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, raw);
  return GaussQ(re, parse_rational(im_part, raw));
}

std::string GaussQ::str() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + im_.get_str() + "i";
}

GaussQ GaussQ::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
  if (is_real()) return GaussQ(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussQ(re_ / norm, -im_ / norm);
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw Error(ErrorCode::NotInvertible, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

}  // namespace qs
