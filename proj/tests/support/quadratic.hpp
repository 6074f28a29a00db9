#pragma once

// x + y√D over Q, for exact identities on complete quotients. The branch of
// √D never matters here: every identity checked is algebraic.

#include <stdexcept>

#include "padicfrac/arith.hpp"

namespace testgen {

struct QuadNum {
  padicfrac::Rat x = 0;
  padicfrac::Rat y = 0;
  padicfrac::Int D = 0;

  static QuadNum surd(const padicfrac::Int& P, const padicfrac::Int& Q, const padicfrac::Int& D) {
    return {padicfrac::make_rat(P, Q), D == 0 ? padicfrac::Rat(0) : padicfrac::make_rat(padicfrac::Int(1), Q), D};
  }
  static QuadNum constant(const padicfrac::Rat& c, const padicfrac::Int& D) { return {c, 0, D}; }

  friend QuadNum operator+(const QuadNum& a, const QuadNum& b) { return {a.x + b.x, a.y + b.y, a.D}; }
  friend QuadNum operator-(const QuadNum& a, const QuadNum& b) { return {a.x - b.x, a.y - b.y, a.D}; }
  friend QuadNum operator*(const QuadNum& a, const QuadNum& b) {
    return {a.x * b.x + a.y * b.y * padicfrac::Rat(a.D), a.x * b.y + a.y * b.x, a.D};
  }
  friend QuadNum operator/(const QuadNum& a, const QuadNum& b) {
    const padicfrac::Rat norm = b.x * b.x - b.y * b.y * padicfrac::Rat(b.D);
    if (norm == 0) throw std::domain_error("QuadNum: division by zero");
    const QuadNum conj{b.x, -b.y, b.D};
    const QuadNum num = a * conj;
    return {num.x / norm, num.y / norm, a.D};
  }
  friend bool operator==(const QuadNum& a, const QuadNum& b) { return a.x == b.x && a.y == b.y; }
};

}  // namespace testgen
