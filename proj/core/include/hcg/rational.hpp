#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hcg {

// Exact fraction with a positive denominator, always stored in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A non-negative rational or +infinity. Used for price-of-anarchy values and
// the theorem bounds they are compared against.
class ExtendedRational {
 public:
  ExtendedRational(Rational value) : value_(value) {}  // NOLINT(implicit)
  static ExtendedRational infinity() { return ExtendedRational(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const;  // throws when infinite

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

  std::string str() const;

 private:
  ExtendedRational() = default;
  std::optional<Rational> value_;
};

// optimum / worst: Infinite when worst == 0 < optimum, and 1 when both are 0.
ExtendedRational welfare_ratio(std::int64_t optimum, std::int64_t worst);

}  // namespace hcg
