#include "padicfrac/arith.hpp"

#include <stdexcept>

namespace padicfrac {

int sign(const Int& x) { return sgn(x); }
int sign(const Rat& x) { return sgn(x); }

long strip(Int& x, Prime p) {
  if (x == 0) return 0;
  long v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long vp(const Int& x, Prime p) {
  if (x == 0) return kInfiniteValuation;
  if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
  Int y = x;
  return strip(y, p);
}

long vp(const Rat& x, Prime p) {
  if (x == 0) return kInfiniteValuation;
  return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

Int pow_p(Prime p, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Int residue(const Int& x, const Int& m, Prime p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (p != 2) {
    Int twice = r * 2;
    if (twice > m) r -= m;
  }
  return r;
}

Int round_nearest(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("round_nearest: zero denominator");
  Int n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  // floor((2n + d) / 2d) is round-half-up; a negative exact tie must move down.
  Int twice_n_plus_d = 2 * n + d;
  Int two_d = 2 * d;
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), twice_n_plus_d.get_mpz_t(), two_d.get_mpz_t());
  if (r == 0 && n < 0) q -= 1;
  return q;
}

Int round_nearest(const Rat& x) { return round_nearest(Int(x.get_num()), Int(x.get_den())); }

long ceil_log4(const Int& x) {
  if (x < 1) throw std::domain_error("ceil_log4: argument must be >= 1");
  long k = 0;
  Int power = 1;
  while (power < x) {
    power *= 4;
    ++k;
  }
  return k;
}

bool is_perfect_square(const Int& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_prime(Prime p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Prime d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](const std::string& s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') return std::nullopt;
    }
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return make_rat(*n, *d);
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace padicfrac
