#include "padicfrac/surd.hpp"

#include <stdexcept>

namespace padicfrac {

std::string Surd::str() const {
  if (is_rational()) return center().get_str();
  std::string s = "(" + P.get_str() + (branch == Branch::kPlus ? " + " : " - ") + "sqrt(" + D.get_str() + "))";
  if (Q != 1) s += "/" + (Q < 0 ? "(" + Q.get_str() + ")" : Q.get_str());
  return s;
}

void validate(const PrimeCtx& ctx, const Surd& alpha) {
  if (alpha.Q == 0) throw std::invalid_argument("surd: Q must be nonzero");
  if (alpha.D < 0) throw std::invalid_argument("surd: D must be non-negative");
  if (alpha.D == 0) return;
  if (is_perfect_square(alpha.D)) throw std::invalid_argument("surd: D = " + alpha.D.get_str() + " is a perfect square");
  if (!ctx.sqrt_in_qp(alpha.D)) {
    throw std::invalid_argument("surd: sqrt(" + alpha.D.get_str() + ") is not in Q_" + std::to_string(ctx.p()));
  }
}

Branch scaled_branch(const PrimeCtx& ctx, const Int& D, Branch branch, const Int& scale) {
  if (scale == 1) return branch;
  const Int scaled_d = D * scale * scale;
  // The two roots of scaled_d first differ two digits above v_p(root).
  const long K = vp(scaled_d, ctx.p()) / 2 + 2;
  const Int modulus = pow_p(ctx.p(), static_cast<unsigned long>(K));
  Int image = scale * ctx.hensel_sqrt(D, branch, K);
  mpz_fdiv_r(image.get_mpz_t(), image.get_mpz_t(), modulus.get_mpz_t());
  return image == ctx.hensel_sqrt(scaled_d, Branch::kPlus, K) ? Branch::kPlus : Branch::kMinus;
}

Surd normalize(const PrimeCtx& ctx, const Surd& alpha) {
  validate(ctx, alpha);
  if (alpha.is_rational()) {
    Rat x = alpha.center();
    return Surd{Rat(x.get_num()), Rat(x.get_den()), Int(0), Branch::kPlus};
  }
  Int L;
  const Int den_p = alpha.P.get_den(), den_q = alpha.Q.get_den();
  mpz_lcm(L.get_mpz_t(), den_p.get_mpz_t(), den_q.get_mpz_t());
  Int P = Rat(alpha.P * L).get_num();
  Int Q = Rat(alpha.Q * L).get_num();
  Int D = alpha.D * L * L;
  Int scale = L;

  Int q0 = abs(Q);
  strip(q0, ctx.p());
  if (q0 != 1) {
    P *= q0;
    Q *= q0;
    D *= q0 * q0;
    scale *= q0;
  }
  return Surd{Rat(P), Rat(Q), D, scaled_branch(ctx, alpha.D, alpha.branch, scale)};
}

}  // namespace padicfrac
