#include <gtest/gtest.h>

#include <cmath>

#include "ecloc/curve.hpp"
#include "ecloc/infinity.hpp"
#include "ecloc/io.hpp"
#include "support/gen.hpp"
#include "support/group.hpp"

using namespace ecloc;
using ecloc::testing::Gen;

namespace {

RkElement num(const RkCtx& c, long long n) { return RkElement::from_int(c, n); }

LocalCurveCoeffs short_curve(const RkCtx& r, long long A, long long B) {
  return LocalCurveCoeffs::short_form(num(r, A), num(r, B));
}

// Random point of E(R_k): Hensel-style search over affine x.
std::optional<LocalPoint> random_affine_point(Gen& g, const LocalCurveCoeffs& c, int tries = 200) {
  const RkCtx& r = c.a1.ctx();
  std::vector<RkElement> ys = ring_elements(r);
  for (int t = 0; t < tries; ++t) {
    RkElement x = g.rk(r);
    std::vector<LocalPoint> hits;
    for (const auto& y : ys) {
      LocalPoint P{x, y, RkElement::one(r)};
      if (on_curve(c, P)) hits.push_back(P);
    }
    if (!hits.empty()) return g.pick(hits);
  }
  return std::nullopt;
}

}  // namespace

TEST(Curve, DiscriminantShortForm) {
  Curve<MultiPoly> c = symbolic_curve(Form::Short);
  EXPECT_EQ(c.discriminant(), MultiPoly::parse("-64*A^3 - 432*B^2"));
  EXPECT_EQ(c.b2(), MultiPoly(0));
  Curve<MultiPoly> e = symbolic_curve(Form::Extended);
  EXPECT_EQ(e.b2(), MultiPoly::parse("a1^2 + 4*a2"));
}

TEST(Curve, DiscriminantExamples) {
  auto r5 = RkContext::make(FqContext::make(5, 1), 1);
  EXPECT_TRUE(short_curve(r5, 0, 0).discriminant().is_zero());
  EXPECT_FALSE(short_curve(r5, 0, 0).is_elliptic());
  LocalCurveCoeffs c = short_curve(r5, 1, 0);
  EXPECT_EQ(c.discriminant(), num(r5, -64));
  EXPECT_EQ(c.discriminant(), num(r5, 1));
  EXPECT_TRUE(c.is_elliptic());

  CurveFile sf = load_curve_file(ecloc::testing::data_path("strange_ex1.curve"));
  EXPECT_TRUE(sf.coeffs.discriminant().is_unit());
  EXPECT_TRUE(sf.coeffs.is_elliptic());
}

TEST(Curve, CountPoints) {
  auto r5 = RkContext::make(FqContext::make(5, 1), 1);
  EXPECT_EQ(count_points_fq(short_curve(r5, 1, 0)), 4u);
  auto r2 = RkContext::make(FqContext::make(2, 1), 1);
  RkElement z = RkElement::zero(r2), one = RkElement::one(r2);
  LocalCurveCoeffs c{z, z, one, z, z};
  ASSERT_TRUE(c.is_elliptic());
  EXPECT_EQ(count_points_fq(c), 3u);
  EXPECT_EQ(enumerate_points(c).size(), 3u);
  auto big = RkContext::make(FqContext::make(4099, 1), 1);
  EXPECT_THROW(count_points_fq(short_curve(big, 1, 1)), Error);
}

TEST(Curve, HasseBoundAndFiberSize) {
  Gen g(17);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {2, 4}}) {
    auto ctx = FqContext::make(p, e);
    auto r1 = RkContext::make(ctx, 1);
    for (int i = 0; i < 10; ++i) {
      LocalCurveCoeffs c = g.curve(r1);
      double q = ctx->q();
      double n = static_cast<double>(count_points_fq(c));
      EXPECT_LE(std::abs(n - q - 1), 2 * std::sqrt(q) + 1e-9);
      EXPECT_EQ(enumerate_points(c).size(), count_points_fq(c));
    }
  }
  auto r3 = RkContext::make(FqContext::make(3, 1), 3);
  for (int i = 0; i < 4; ++i) {
    LocalCurveCoeffs c = g.curve(r3);
    EXPECT_EQ(enumerate_points(c).size(), count_points_fq(project_curve(c)) * 9);
  }
}

TEST(Curve, IdentityAndInverse) {
  Gen g(3);
  auto r = RkContext::make(FqContext::make(3, 1), 4);
  for (int i = 0; i < 10; ++i) {
    LocalCurveCoeffs c = g.curve(r);
    auto P = random_affine_point(g, c);
    ASSERT_TRUE(P.has_value());
    LocalPoint O = identity_point(c);
    EXPECT_EQ(add_complete(c, *P, O), normalize(*P));
    EXPECT_EQ(add_complete(c, *P, negate(c, *P)), O);
    EXPECT_EQ(scalar_mul(c, 0, *P), O);
    EXPECT_EQ(scalar_mul(c, 1, *P), *P);
  }
}

TEST(Curve, InfinityPointsAddLinearlyAtK2) {
  Gen g(8);
  for (int p : {2, 3, 5}) {
    auto r = RkContext::make(FqContext::make(p, 1), 2);
    for (int i = 0; i < 10; ++i) {
      LocalCurveCoeffs c = g.curve(r);
      RkElement x1 = g.in_maximal_ideal(r), x2 = g.in_maximal_ideal(r);
      RkElement z = RkElement::zero(r), one = RkElement::one(r);
      LocalPoint P{x1, one, z}, Q{x2, one, z};
      ASSERT_TRUE(on_curve(c, P));
      EXPECT_EQ(add_inf(c, P, Q), (LocalPoint{x1 + x2, one, z}));
      for (unsigned n = 0; n < 7; ++n)
        EXPECT_EQ(scalar_mul(c, n, P), (LocalPoint{num(r, n) * x1, one, z}));
    }
  }
}

TEST(Curve, CrossLawAgreement) {
  Gen g(21);
  int compared = 0;
  for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {7, 1, 1}}) {
    auto r = RkContext::make(FqContext::make(p, e), k);
    for (int i = 0; i < 3; ++i) {
      LocalCurveCoeffs c = g.curve(r);
      std::vector<LocalPoint> pts = enumerate_points(c);
      for (const auto& P : pts)
        for (const auto& Q : pts) {
          LocalPoint S = law_010(c, P, Q);
          LocalPoint T = law_001(c, P, Q);
          LocalPoint sum = add_complete(c, P, Q);
          EXPECT_TRUE(on_curve(c, sum));
          if (S.Y.is_unit()) {
            EXPECT_EQ(add_inf(c, P, Q), sum);
            ++compared;
          }
          if (is_primitive(T)) EXPECT_EQ(normalize(T), sum);
          if (is_primitive(S)) EXPECT_EQ(normalize(S), sum);
        }
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(Curve, GroupAxiomsSmallRings) {
  Gen g(99);
  for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 1}}) {
    auto r = RkContext::make(FqContext::make(p, e), k);
    for (int i = 0; i < 3; ++i) {
      LocalCurveCoeffs c = g.curve(r);
      ecloc::testing::GroupTable t;
      std::string why;
      ASSERT_TRUE(ecloc::testing::build_group_table(c, t, why)) << why;
      EXPECT_TRUE(ecloc::testing::check_group_axioms(t, why)) << why << " p=" << p << " k=" << k;
    }
  }
}

TEST(Curve, ProjectionIsHomomorphism) {
  Gen g(31);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}}) {
    auto r = RkContext::make(FqContext::make(p, 1), k);
    for (int i = 0; i < 5; ++i) {
      LocalCurveCoeffs c = g.curve(r);
      LocalCurveCoeffs c1 = project_curve(c);
      auto P = random_affine_point(g, c), Q = random_affine_point(g, c);
      if (count_points_fq(project_curve(c)) > 1) ASSERT_TRUE(P && Q);
      if (!P || !Q) continue;
      EXPECT_EQ(project_point(c, add_complete(c, *P, *Q)),
                add_complete(c1, project_point(c, *P), project_point(c, *Q)));
      LocalCurve lc(c);
      InfinityPoint I = g.inf_point(lc);
      EXPECT_EQ(project_point(c, I.triple()), identity_point(c1));
    }
  }
  auto r = RkContext::make(FqContext::make(5, 1), 3);
  auto r1 = RkContext::make(FqContext::make(5, 1), 1);
  for (int i = 0; i < 10; ++i) {
    LocalCurveCoeffs c = g.curve(r);
    auto P = random_affine_point(g, c);
    ASSERT_TRUE(P.has_value());
    LocalPoint expect{num(r1, P->X.code(0)), num(r1, P->Y.code(0)), RkElement::one(r1)};
    EXPECT_EQ(project_point(c, *P), expect);
  }
}

TEST(Curve, InspectionModEpsM) {
  Gen g(77);
  int checks = 0;
  for (int p : {2, 3, 5})
    for (int k = 2; k <= 12; k += 2) {
      auto r = RkContext::make(FqContext::make(p, 1), k);
      LocalCurve lc(g.curve(r));
      for (int i = 0; i < 10; ++i) {
        InfinityPoint P = g.inf_point(lc), Q = g.inf_point(lc);
        if (P.is_identity() || Q.is_identity()) continue;
        int m = std::min(P.nu(), Q.nu()).value();
        RkElement diff = inf_add(P, Q).x() - (P.x() + Q.x());
        EXPECT_GE(diff.nu(), Nu(m + 1));
        ++checks;
      }
    }
  EXPECT_GT(checks, 100);
}
