#include "padicfrac/floor_functions.hpp"

#include <stdexcept>

#include "padicfrac/embedding.hpp"

namespace padicfrac {
namespace {

struct Prepared {
  Embedding embedding;
  Int P;
  Int Q;
};

Prepared prepare(const PrimeCtx& ctx, const Surd& alpha) {
  Surd n = normalize(ctx, alpha);
  return Prepared{Embedding(ctx, n.D, n.branch), Int(n.P.get_num()), Int(n.Q.get_num())};
}

bool is_zero(const Surd& alpha) { return alpha.is_rational() && alpha.P == 0; }

void require_quadratic(const Surd& alpha, const char* what) {
  if (alpha.is_rational()) throw std::invalid_argument(std::string(what) + ": requires D != 0");
}

}  // namespace

long vp(const PrimeCtx& ctx, const Surd& alpha) {
  if (is_zero(alpha)) return kInfiniteValuation;
  auto prep = prepare(ctx, alpha);
  return prep.embedding.valuation(prep.P, prep.Q);
}

std::vector<long> digits(const PrimeCtx& ctx, const Surd& alpha, long from, long to) {
  if (is_zero(alpha)) throw std::invalid_argument("digits: alpha must be nonzero");
  if (to < from) return {};
  auto prep = prepare(ctx, alpha);
  const Prime p = ctx.p();
  const long v = prep.embedding.valuation(prep.P, prep.Q);
  const long lo = std::min(from, v);
  Int x = prep.embedding.window(prep.P, prep.Q, lo, to - lo + 1);
  const Int P_(p);
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (long index = lo; index <= to; ++index) {
    Int d = residue(x, P_, p);
    x = (x - d) / P_;
    if (index >= from) out.push_back(d.get_si());
  }
  return out;
}

Rat s(const PrimeCtx& ctx, const Surd& alpha) {
  if (is_zero(alpha)) return 0;
  auto prep = prepare(ctx, alpha);
  return prep.embedding.truncations(prep.P, prep.Q).s(ctx.p()).to_rat();
}

Rat t(const PrimeCtx& ctx, const Surd& alpha) {
  if (is_zero(alpha)) return 0;
  auto prep = prepare(ctx, alpha);
  return prep.embedding.truncations(prep.P, prep.Q).t(ctx.p()).to_rat();
}

PartialQuotient sbar(const PrimeCtx& ctx, const Surd& alpha) {
  if (is_zero(alpha)) throw std::invalid_argument("sbar: alpha must be nonzero");
  auto prep = prepare(ctx, alpha);
  return sbar(ctx.p(), prep.P, prep.Q, prep.embedding.truncations(prep.P, prep.Q));
}

PartialQuotient tbar(const PrimeCtx& ctx, const Surd& alpha) {
  if (is_zero(alpha)) throw std::invalid_argument("tbar: alpha must be nonzero");
  auto prep = prepare(ctx, alpha);
  return tbar(ctx.p(), prep.P, prep.Q, prep.embedding.truncations(prep.P, prep.Q));
}

PartialQuotient s1(const PrimeCtx& ctx, const Surd& alpha) {
  require_quadratic(alpha, "s1");
  auto prep = prepare(ctx, alpha);
  return s1(ctx.p(), prep.P, prep.Q, prep.embedding.truncations(prep.P, prep.Q));
}

PartialQuotient t1(const PrimeCtx& ctx, const Surd& alpha) {
  require_quadratic(alpha, "t1");
  auto prep = prepare(ctx, alpha);
  return t1(ctx.p(), prep.P, prep.Q, prep.embedding.truncations(prep.P, prep.Q));
}

}  // namespace padicfrac
