#include "padicfrac/prime_ctx.hpp"

#include <stdexcept>
#include <string>

namespace padicfrac {
namespace {

// Square root of a quadratic residue u modulo an odd prime p (Tonelli-Shanks).
Int sqrt_mod_prime(const Int& u, Prime p) {
  Int a = u % p;
  if (a < 0) a += p;
  const Int P(p);
  if (p % 4 == 3) {
    Int r;
    Int e = (P + 1) / 4;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
    return r;
  }
  Int q = P - 1;
  long s = strip(q, 2);
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), P.get_mpz_t()) != -1) z += 1;
  Int c, r, t;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), P.get_mpz_t());
  Int e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), P.get_mpz_t());
  long m = s;
  while (t != 1) {
    long i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = tt * tt % P;
      ++i;
    }
    Int b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % P;
    r = r * b % P;
    c = b * b % P;
    t = t * c % P;
    m = i;
  }
  return r;
}

}  // namespace

PrimeCtx::PrimeCtx(Prime p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeCtx: " + std::to_string(p) + " is not prime");
}

PrimeCtx::PrimeCtx(const PrimeCtx& other) : p_(other.p_) {
  std::lock_guard lock(other.mutex_);
  sqrt_cache_ = other.sqrt_cache_;
}

bool PrimeCtx::sqrt_in_qp(const Int& D) const {
  if (D <= 0) throw std::invalid_argument("sqrt_in_qp: D must be positive");
  if (is_perfect_square(D)) throw std::invalid_argument("sqrt_in_qp: D is a perfect square");
  Int unit = D;
  const long v = strip(unit, p_);
  if (v % 2 != 0) return false;
  if (p_ == 2) return unit % 8 == 1;
  const Int P(p_);
  return mpz_legendre(unit.get_mpz_t(), P.get_mpz_t()) == 1;
}

Int PrimeCtx::lift_unit_root(const Int& unit, long K) const {
  if (p_ == 2) {
    // r^2 = u mod 2^(j+1) pins r mod 2^j up to sign; lift one bit at a time.
    Int r = 1;
    const long target = std::max<long>(K, 2) + 1;
    for (long j = 3; j < target; ++j) {
      Int diff = r * r - unit;
      if (!mpz_divisible_2exp_p(diff.get_mpz_t(), static_cast<mp_bitcnt_t>(j + 1))) {
        Int step;
        mpz_ui_pow_ui(step.get_mpz_t(), 2, static_cast<unsigned long>(j - 1));
        r += step;
      }
    }
    const Int modulus = pow_p(2, static_cast<unsigned long>(K));
    Int four_residue = r % 4;
    if (four_residue == 3) r = -r;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
  }

  Int r = sqrt_mod_prime(unit, p_);
  if (2 * r > Int(p_)) r = Int(p_) - r;
  Int modulus = p_;
  long precision = 1;
  while (precision < K) {
    precision = std::min(2 * precision, K);
    modulus = pow_p(p_, static_cast<unsigned long>(precision));
    Int two_r = 2 * r, inverse;
    mpz_invert(inverse.get_mpz_t(), two_r.get_mpz_t(), modulus.get_mpz_t());
    r = r - (r * r - unit) * inverse;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  }
  return r;
}

Int PrimeCtx::hensel_sqrt(const Int& D, Branch branch, long K) const {
  if (K < 1) throw std::invalid_argument("hensel_sqrt: precision must be >= 1");
  if (!sqrt_in_qp(D)) throw std::invalid_argument("hensel_sqrt: sqrt(" + D.get_str() + ") is not in Q_p");
  const Int modulus = pow_p(p_, static_cast<unsigned long>(K));

  std::lock_guard lock(mutex_);
  auto key = std::make_pair(D, branch);
  auto it = sqrt_cache_.find(key);
  if (it == sqrt_cache_.end() || it->second.second < K) {
    const long cached = it == sqrt_cache_.end() ? 0 : it->second.second;
    const long precision = std::max(K, 2 * cached);
    Int unit = D;
    const long half = strip(unit, p_) / 2;
    Int root = 0;
    if (half < precision) {
      root = lift_unit_root(unit, precision - half) * pow_p(p_, static_cast<unsigned long>(half));
      if (branch == Branch::kMinus) root = -root;
      const Int full = pow_p(p_, static_cast<unsigned long>(precision));
      mpz_fdiv_r(root.get_mpz_t(), root.get_mpz_t(), full.get_mpz_t());
    }
    it = sqrt_cache_.insert_or_assign(std::move(key), std::make_pair(root, precision)).first;
  }
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), it->second.first.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::size_t PrimeCtx::cache_size() const {
  std::lock_guard lock(mutex_);
  return sqrt_cache_.size();
}

}  // namespace padicfrac
