#include "padicfrac/scaled_int.hpp"

#include <stdexcept>

namespace padicfrac {

ScaledInt::ScaledInt(Prime p, Int unit, long exp) : p_(p), unit_(std::move(unit)), exp_(exp) {
  if (exp_ < 0) {
    unit_ *= pow_p(p_, static_cast<unsigned long>(-exp_));
    exp_ = 0;
  }
  canonicalize();
}

ScaledInt ScaledInt::from_rat(Prime p, const Rat& x) {
  Int den = x.get_den();
  const long e = strip(den, p);
  if (den != 1) throw std::domain_error("ScaledInt: denominator is not a power of p");
  return ScaledInt(p, Int(x.get_num()), e);
}

void ScaledInt::canonicalize() {
  if (unit_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && mpz_divisible_ui_p(unit_.get_mpz_t(), p_)) {
    mpz_divexact_ui(unit_.get_mpz_t(), unit_.get_mpz_t(), p_);
    --exp_;
  }
}

long ScaledInt::valuation() const {
  if (unit_ == 0) return kInfiniteValuation;
  return exp_ > 0 ? -exp_ : vp(unit_, p_);
}

Rat ScaledInt::to_rat() const { return make_rat(unit_, pow_p(p_, static_cast<unsigned long>(exp_))); }

Int ScaledInt::scaled_to(long exp_target) const {
  if (exp_target < exp_) throw std::logic_error("ScaledInt::scaled_to: target below exponent");
  return unit_ * pow_p(p_, static_cast<unsigned long>(exp_target - exp_));
}

ScaledInt ScaledInt::operator-() const {
  ScaledInt r = *this;
  r.unit_ = -r.unit_;
  return r;
}

ScaledInt operator+(const ScaledInt& a, const ScaledInt& b) {
  const long e = std::max(a.exp_, b.exp_);
  return ScaledInt(a.p_, a.scaled_to(e) + b.scaled_to(e), e);
}

ScaledInt operator-(const ScaledInt& a, const ScaledInt& b) { return a + (-b); }

ScaledInt operator*(const ScaledInt& a, const ScaledInt& b) {
  return ScaledInt(a.p_, a.unit_ * b.unit_, a.exp_ + b.exp_);
}

std::string ScaledInt::str() const {
  if (exp_ == 0) return unit_.get_str();
  return unit_.get_str() + "/" + pow_p(p_, static_cast<unsigned long>(exp_)).get_str();
}

}  // namespace padicfrac
