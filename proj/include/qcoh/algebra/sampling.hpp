#pragma once

#include <cstdint>
#include <random>

#include "qcoh/algebra/polynomial.hpp"
#include "qcoh/algebra/rational.hpp"

namespace qcoh {

/// Seeded generator of small rationals for identity testing. Draws are a
/// pure function of the seed and the call sequence.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long max_num = 9, long max_den = 7)
      : engine_(seed), max_num_(max_num), max_den_(max_den) {}

  Rational any() {
    std::uniform_int_distribution<long> num(-max_num_, max_num_);
    std::uniform_int_distribution<long> den(1, max_den_);
    return {num(engine_), den(engine_)};
  }

  Rational nonzero() {
    for (;;) {
      Rational r = any();
      if (!r.is_zero()) return r;
    }
  }

  /// Rational outside {0, 1, -1}: an admissible q.
  Rational q_value() {
    for (;;) {
      Rational r = nonzero();
      if (!r.is_one() && !(r == Rational(-1))) return r;
    }
  }

  Polynomial<Rational> polynomial(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(any());
    c.push_back(nonzero());
    return Polynomial<Rational>(std::move(c));
  }

  Polynomial<Rational> monic(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(any());
    c.push_back(Rational(1));
    return Polynomial<Rational>(std::move(c));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
  long max_num_;
  long max_den_;
};

}  // namespace qcoh
