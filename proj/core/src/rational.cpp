#include "hcg/rational.hpp"

#include <numeric>

#include "hcg/error.hpp"

namespace hcg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::Format: return "Format";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN) {
    throw Error(ErrorCode::Internal, "rational overflow");
  }
  return static_cast<std::int64_t>(x);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw Error(ErrorCode::InvalidParams, "value of an infinite ratio");
  return *value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

std::string ExtendedRational::str() const {
  return is_infinite() ? std::string("inf") : value_->str();
}

ExtendedRational welfare_ratio(std::int64_t optimum, std::int64_t worst) {
  if (worst == 0) {
    return optimum == 0 ? ExtendedRational(Rational(1)) : ExtendedRational::infinity();
  }
  return Rational(optimum, worst);
}

}  // namespace hcg
