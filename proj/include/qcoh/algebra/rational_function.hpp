#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"

namespace qcoh {

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
/// Only used to carry one symbolic parameter through limit identities.
class RationalFunction {
 public:
  using Poly = Polynomial<Rational>;

  RationalFunction() : den_(Poly::constant(Rational(1))) {}
  RationalFunction(int value) : RationalFunction(Rational(value)) {}  // NOLINT
  RationalFunction(long value) : RationalFunction(Rational(value)) {}  // NOLINT
  RationalFunction(const Rational& value)  // NOLINT(google-explicit-constructor)
      : num_(Poly::constant(value)), den_(Poly::constant(Rational(1))) {}
  RationalFunction(Poly num, Poly den);

  /// The indeterminate t.
  static RationalFunction t();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  std::optional<Rational> constant_value() const;

  /// Value at t = at; throws PoleAtZero-style DomainError when den(at) = 0.
  Rational evaluate(const Rational& at) const;

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Value at t = 0 after cancellation; PoleAtZero when the reduced
/// denominator vanishes there.
Rational rf_limit_at_zero(const RationalFunction& f);

}  // namespace qcoh
