#include "qcoh/classical.hpp"

#include <array>
#include <string>
#include <utility>

namespace qcoh {

namespace {

constexpr std::array<std::pair<ClassicalLabel, const char*>, 8> kLabels{{
    {ClassicalLabel::AlSalamCarlitz, "AlSalamCarlitz"},
    {ClassicalLabel::BigQLaguerre, "BigQLaguerre"},
    {ClassicalLabel::LittleQLaguerre, "LittleQLaguerre"},
    {ClassicalLabel::SmallL, "l_n"},
    {ClassicalLabel::BigQJacobi, "BigQJacobi"},
    {ClassicalLabel::LittleQJacobi, "LittleQJacobi"},
    {ClassicalLabel::QBessel, "QBessel"},
    {ClassicalLabel::SmallJ, "j_n"},
}};

void require(bool ok, const std::string& condition) {
  if (!ok) throw Error(ErrorKind::RestrictionViolation, condition);
}

void require_outside_lambda(const Rational& x, const Rational& q, const std::string& what) {
  require(!in_lambda(x, q), what + " not in Lambda");
}

FamilySpec<Rational> labelled(FamilySpec<Rational> spec, ClassicalLabel label) {
  spec.label = label;
  return spec;
}

}  // namespace

std::string label_name(ClassicalLabel label) {
  for (const auto& [l, n] : kLabels) {
    if (l == label) return n;
  }
  return "unknown";
}

std::optional<ClassicalLabel> parse_label(const std::string& text) {
  for (const auto& [l, n] : kLabels) {
    if (text == n) return l;
  }
  return std::nullopt;
}

bool in_lambda(const Rational& x, const Rational& q) {
  if (x.is_zero()) return false;
  const Rational p = q.inverse();
  const bool growing = p.abs() > Rational(1);
  const Rational target = x.abs();
  Rational v = p;
  for (;;) {
    if (v == x) return true;
    const Rational mag = v.abs();
    if (growing ? mag > target : mag < target) return false;
    v *= p;
  }
}

int classical_arity(ClassicalLabel label) {
  switch (label) {
    case ClassicalLabel::AlSalamCarlitz:
    case ClassicalLabel::LittleQLaguerre:
    case ClassicalLabel::SmallL:
    case ClassicalLabel::QBessel:
      return 1;
    case ClassicalLabel::BigQLaguerre:
    case ClassicalLabel::LittleQJacobi:
    case ClassicalLabel::SmallJ:
      return 2;
    case ClassicalLabel::BigQJacobi:
      return 3;
  }
  return 0;
}

FamilySpec<Rational> classical(ClassicalLabel label, const std::vector<Rational>& params, const Rational& q) {
  if (static_cast<int>(params.size()) != classical_arity(label)) {
    throw Error(ErrorKind::DomainError, label_name(label) + " takes " + std::to_string(classical_arity(label)) +
                                            " parameters");
  }
  const Rational one(1), zero(0);
  switch (label) {
    case ClassicalLabel::AlSalamCarlitz: {
      const Rational& a = params[0];
      require(!a.is_zero(), "a != 0");
      return labelled(make_l_family(a, one, zero, q), label);
    }
    case ClassicalLabel::BigQLaguerre: {
      const Rational &a = params[0], &b = params[1];
      require(!(a * b).is_zero(), "ab != 0");
      require_outside_lambda(a, q, "a");
      require_outside_lambda(b, q, "b");
      return labelled(make_l_family(a.inverse(), b.inverse(), one, q, a * b * q), label);
    }
    case ClassicalLabel::LittleQLaguerre: {
      const Rational& a = params[0];
      require(!a.is_zero(), "a != 0");
      require_outside_lambda(a, q, "a");
      return labelled(make_l_family(zero, one, a, q), label);
    }
    case ClassicalLabel::SmallL: {
      const Rational& a = params[0];
      require(!a.is_zero(), "a != 0");
      return labelled(make_l_family(zero, zero, -a, q), label);
    }
    case ClassicalLabel::BigQJacobi: {
      const Rational &a = params[0], &b = params[1], &c = params[2];
      require(!(a * c).is_zero(), "ac != 0");
      require_outside_lambda(a, q, "a");
      require_outside_lambda(b, q, "b");
      require_outside_lambda(c, q, "c");
      require_outside_lambda(a * b, q, "ab");
      require_outside_lambda(a * b / c, q, "ab/c");
      if (!b.is_zero()) return labelled(make_j_family(one, a, c, a * b, q, q), label);
      return labelled(make_l_family(a.inverse(), c.inverse(), one, q, a * c * q), label);
    }
    case ClassicalLabel::LittleQJacobi: {
      const Rational &a = params[0], &b = params[1];
      require(!a.is_zero(), "a != 0");
      require_outside_lambda(a, q, "a");
      require_outside_lambda(b, q, "b");
      require_outside_lambda(a * b, q, "ab");
      if (!b.is_zero()) return labelled(make_j_family(zero, a, one, a * b, q), label);
      return labelled(make_l_family(a.inverse(), zero, one, q, a), label);
    }
    case ClassicalLabel::QBessel: {
      const Rational& a = params[0];
      require(!a.is_zero(), "a != 0");
      require_outside_lambda(-a, q, "-a");
      return labelled(make_j_family(zero, zero, one, -a / q, q), label);
    }
    case ClassicalLabel::SmallJ: {
      const Rational &a = params[0], &b = params[1];
      require(!(a * b).is_zero(), "ab != 0");
      require_outside_lambda(a, q, "a");
      return labelled(make_j_family(b, zero, zero, a / q, q, q), label);
    }
  }
  throw Error(ErrorKind::DomainError, "unknown classical label");
}

}  // namespace qcoh
