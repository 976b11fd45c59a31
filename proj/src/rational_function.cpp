#include "qcoh/algebra/rational_function.hpp"

#include <sstream>

#include "qcoh/error.hpp"

namespace qcoh {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DomainError, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::t() { return {Poly::x(), Poly::constant(Rational(1))}; }

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) throw Error(ErrorKind::DomainError, "rational function has a pole at " + at.to_string());
  return num_(at) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DomainError, "inverse of the zero rational function");
  return {den_, num_};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  std::ostringstream os;
  os << '(' << num_ << ")/(" << den_ << ')';
  return os.str();
}

Rational rf_limit_at_zero(const RationalFunction& f) {
  const Rational d = f.den().coeff(0);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtZero, "limit t->0 of " + f.to_string() + " is not finite");
  return f.num().coeff(0) / d;
}

}  // namespace qcoh
