#include "ecloc/curve.hpp"

namespace ecloc {

RkElement project_element(const RkElement& r, const RkCtx& residue) {
  return RkElement::constant(residue, r.code(0));
}

LocalCurveCoeffs project_curve(const LocalCurveCoeffs& c) {
  RkCtx res = RkContext::make(c.a1.ctx()->field(), 1);
  return LocalCurveCoeffs{project_element(c.a1, res), project_element(c.a2, res), project_element(c.a3, res),
                          project_element(c.a4, res), project_element(c.a6, res)};
}

LocalPoint project_point(const LocalCurveCoeffs& c, const LocalPoint& P) {
  RkCtx res = RkContext::make(c.a1.ctx()->field(), 1);
  return normalize(LocalPoint{project_element(P.X, res), project_element(P.Y, res), project_element(P.Z, res)});
}

std::uint64_t count_points_fq(const LocalCurveCoeffs& curve) {
  const FqContext& f = *curve.a1.ctx()->field();
  const std::uint32_t q = f.q();
  if (q > 4096) raise(ErrorCode::TooLarge, "point counting is limited to q <= 4096");
  const std::uint32_t a1 = curve.a1.code(0), a2 = curve.a2.code(0), a3 = curve.a3.code(0), a4 = curve.a4.code(0),
                      a6 = curve.a6.code(0);
  // Count y with y^2 + (a1 x + a3) y = rhs(x) through a histogram of y^2 + s y per s.
  std::uint64_t count = 1;
  std::vector<std::vector<std::uint32_t>> cache(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t s = f.add(f.mul(a1, x), a3);
    std::uint32_t xx = f.mul(x, x);
    std::uint32_t rhs = f.add(f.add(f.mul(xx, x), f.mul(a2, xx)), f.add(f.mul(a4, x), a6));
    if (cache[s].empty()) {
      cache[s].assign(q, 0);
      for (std::uint32_t y = 0; y < q; ++y) ++cache[s][f.add(f.mul(y, y), f.mul(s, y))];
    }
    count += cache[s][rhs];
  }
  return count;
}

std::vector<LocalPoint> enumerate_points(const LocalCurveCoeffs& c) {
  const RkCtx& ctx = c.a1.ctx();
  std::vector<LocalPoint> out;
  std::vector<RkElement> all = ring_elements(ctx);
  RkElement one = RkElement::one(ctx);
  for (const auto& x : all)
    for (const auto& y : all) {
      LocalPoint P{x, y, one};
      if (on_curve(c, P)) out.push_back(P);
    }
  std::vector<RkElement> m = maximal_ideal_elements(ctx);
  for (const auto& x : m)
    for (const auto& z : m) {
      LocalPoint P{x, one, z};
      if (on_curve(c, P)) out.push_back(P);
    }
  return out;
}

}  // namespace ecloc
