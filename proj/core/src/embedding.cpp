#include "padicfrac/embedding.hpp"

#include <stdexcept>

namespace padicfrac {
namespace {

constexpr long kInitialPrecision = 32;

Int invert_mod(const Int& x, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::logic_error("invert_mod: value not invertible");
  }
  return r;
}

Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

Embedding::Embedding(const PrimeCtx& ctx, Int D, Branch branch)
    : ctx_(&ctx), p_(ctx.p()), D_(std::move(D)), branch_(branch) {
  if (D_ != 0) grow(kInitialPrecision);
}

const Int& Embedding::power(long e) {
  if (e < 0) throw std::logic_error("Embedding::power: negative exponent");
  if (powers_.empty()) powers_.emplace_back(1);
  while (static_cast<long>(powers_.size()) <= e) powers_.push_back(powers_.back() * p_);
  return powers_[static_cast<std::size_t>(e)];
}

void Embedding::grow(long K) {
  K_ = K;
  root_ = ctx_->hensel_sqrt(D_, branch_, K_);
}

long Embedding::valuation(const Int& P, const Int& Q) {
  if (Q == 0) throw std::invalid_argument("Embedding: Q must be nonzero");
  if (rational()) {
    if (P == 0) throw std::invalid_argument("Embedding: valuation of zero");
    return vp(P, p_) - vp(Q, p_);
  }
  for (;;) {
    Int N = P + root_;
    mpz_fdiv_r(N.get_mpz_t(), N.get_mpz_t(), power(K_).get_mpz_t());
    if (N != 0) return vp(N, p_) - vp(Q, p_);
    grow(2 * K_);
  }
}

Int Embedding::window(const Int& P, const Int& Q, long lo, long len) {
  if (len < 0) throw std::invalid_argument("Embedding::window: negative length");
  if (Q == 0) throw std::invalid_argument("Embedding: Q must be nonzero");
  const Int modulus = power(len);
  if (len == 0) return 0;

  Int q_unit = abs_value(Q);
  const long vq = strip(q_unit, p_);
  if (Q < 0) q_unit = -q_unit;

  if (rational()) {
    if (P == 0) return 0;
    Int p_unit = P;
    const long shift = strip(p_unit, p_) - vq - lo;
    if (shift < 0) throw std::logic_error("Embedding::window: lo above valuation");
    if (shift >= len) return 0;
    Int z = p_unit * power(shift) * invert_mod(q_unit, modulus);
    return residue(z, modulus, p_);
  }

  for (;;) {
    Int N = P + root_;
    mpz_fdiv_r(N.get_mpz_t(), N.get_mpz_t(), power(K_).get_mpz_t());
    if (N == 0) {
      grow(2 * K_);
      continue;
    }
    const long vn = vp(N, p_);
    const long shift = lo + vq;
    if (shift > vn) throw std::logic_error("Embedding::window: lo above valuation");
    // N / p^shift is (P + √D) / p^shift to K - shift digits.
    if (K_ - shift < len) {
      grow(2 * K_);
      continue;
    }
    Int z = shift >= 0 ? Int(N / power(shift)) : Int(N * power(-shift));
    z *= invert_mod(q_unit, modulus);
    return residue(z, modulus, p_);
  }
}

Truncations Embedding::truncations(const Int& P, const Int& Q) {
  Truncations tr;
  tr.valuation = valuation(P, Q);
  tr.e = tr.valuation < 0 ? -tr.valuation : 0;
  tr.s_num = window(P, Q, -tr.e, tr.e + 1);
  tr.t_num = tr.e > 0 ? residue(tr.s_num, power(tr.e), p_) : Int(0);
  return tr;
}

ScaledInt sbar(Prime p, const Int& P, const Int& Q, const Truncations& tr) {
  const Int pe = pow_p(p, static_cast<unsigned long>(tr.e));
  const Int step = pe * p;
  // round((P/Q - s) / p) with s = s_num / p^e
  const Int m = round_nearest(P * pe - tr.s_num * Q, Q * step);
  return ScaledInt(p, tr.s_num + m * step, tr.e);
}

ScaledInt tbar(Prime p, const Int& P, const Int& Q, const Truncations& tr) {
  const Int pe = pow_p(p, static_cast<unsigned long>(tr.e));
  const Int m = round_nearest(P * pe - tr.t_num * Q, Q * pe);
  return ScaledInt(p, tr.t_num + m * pe, tr.e);
}

namespace {

// Of x and x - step*sign(x) (both over p^e), the one nearer P/Q; ties keep x.
ScaledInt nearer_of_pair(Prime p, const Int& P, const Int& Q, const Int& x, const Int& step, long e) {
  const Int alt = x - step * sgn(x);
  const Int pe = pow_p(p, static_cast<unsigned long>(e));
  const Int center = P * pe;
  const Int dx = abs_value(center - x * Q);
  const Int dalt = abs_value(center - alt * Q);
  return ScaledInt(p, dalt < dx ? alt : x, e);
}

}  // namespace

ScaledInt s1(Prime p, const Int& P, const Int& Q, const Truncations& tr) {
  return nearer_of_pair(p, P, Q, tr.s_num, pow_p(p, static_cast<unsigned long>(tr.e + 1)), tr.e);
}

ScaledInt t1(Prime p, const Int& P, const Int& Q, const Truncations& tr) {
  return nearer_of_pair(p, P, Q, tr.t_num, pow_p(p, static_cast<unsigned long>(tr.e)), tr.e);
}

}  // namespace padicfrac
