#include <gtest/gtest.h>

#include <stdexcept>

#include "padicfrac/floor_functions.hpp"
#include "padicfrac/surd.hpp"

using namespace padicfrac;

namespace {

// p-adic digits of two surds agree far out, so the values are equal.
void expect_same_value(const PrimeCtx& ctx, const Surd& a, const Surd& b) {
  EXPECT_EQ(digits(ctx, a, -4, 40), digits(ctx, b, -4, 40));
  EXPECT_EQ(a.center(), b.center());
}

}  // namespace

TEST(Surd, Validate) {
  const PrimeCtx ctx(5);
  EXPECT_NO_THROW(validate(ctx, Surd::sqrt(Int(19))));
  EXPECT_NO_THROW(validate(ctx, Surd::rational(Rat(3, 7))));
  EXPECT_THROW(validate(ctx, Surd::sqrt(Int(25))), std::invalid_argument);
  EXPECT_THROW(validate(ctx, Surd::sqrt(Int(-19))), std::invalid_argument);
  EXPECT_THROW(validate(ctx, Surd::sqrt(Int(2))), std::invalid_argument);
  EXPECT_THROW(validate(ctx, Surd{Rat(1), Rat(0), Int(19), Branch::kPlus}), std::invalid_argument);
}

TEST(Surd, NormalizeLeavesIntegralInputs) {
  const PrimeCtx ctx(5);
  const Surd a = normalize(ctx, Surd{Rat(0), Rat(1), Int(19), Branch::kPlus});
  EXPECT_EQ(a.P, 0);
  EXPECT_EQ(a.Q, 1);
  EXPECT_EQ(a.D, 19);
  EXPECT_EQ(a.branch, Branch::kPlus);
  const Surd b = normalize(ctx, Surd{Rat(1), Rat(5), Int(6), Branch::kPlus});
  EXPECT_EQ(b.P, 1);
  EXPECT_EQ(b.Q, 5);
  EXPECT_EQ(b.D, 6);
}

TEST(Surd, NormalizeAppliesSubstitution) {
  const PrimeCtx ctx(5);
  const Surd in{Rat(1), Rat(3), Int(19), Branch::kPlus};
  const Surd out = normalize(ctx, in);
  EXPECT_EQ(out.P, 3);
  EXPECT_EQ(out.Q, 9);
  EXPECT_EQ(out.D, 171);
  expect_same_value(ctx, in, out);
  // q0 | D - P^2 afterwards
  EXPECT_EQ(Int((out.D - out.P.get_num() * out.P.get_num()) % 9), 0);
}

TEST(Surd, NormalizeClearsDenominators) {
  const PrimeCtx ctx(5);
  for (Branch br : {Branch::kPlus, Branch::kMinus}) {
    const Surd in{Rat(1, 2), Rat(7, 3), Int(19), br};
    const Surd out = normalize(ctx, in);
    EXPECT_EQ(out.P.get_den(), 1);
    EXPECT_EQ(out.Q.get_den(), 1);
    Int q0 = abs(out.Q.get_num());
    strip(q0, 5);
    EXPECT_EQ(Int((out.D - out.P.get_num() * out.P.get_num()) % q0), 0);
    expect_same_value(ctx, in, out);
  }
}

TEST(Surd, NormalizeRational) {
  const PrimeCtx ctx(5);
  const Surd out = normalize(ctx, Surd{Rat(6), Rat(-4), Int(0), Branch::kPlus});
  EXPECT_EQ(out.P, -3);
  EXPECT_EQ(out.Q, 2);
}

TEST(Surd, ScaledBranchFollowsSignOfScale) {
  const PrimeCtx ctx(5);
  for (long S : {2L, 3L, -3L, 7L, -11L}) {
    for (Branch br : {Branch::kPlus, Branch::kMinus}) {
      const Branch nb = scaled_branch(ctx, Int(19), br, Int(S));
      const Int m = pow_p(5, 20);
      const Int lhs = ctx.hensel_sqrt(Int(19 * S * S), nb, 20);
      Int rhs = Int(S) * ctx.hensel_sqrt(Int(19), br, 20) % m;
      if (rhs < 0) rhs += m;
      EXPECT_EQ(lhs, rhs) << "S=" << S;
    }
  }
}

TEST(Surd, Str) {
  EXPECT_FALSE(Surd::sqrt(Int(19)).str().empty());
  EXPECT_FALSE(Surd::rational(Rat(3, 4)).str().empty());
}
