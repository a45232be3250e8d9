#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ecloc/infinity.hpp"

namespace ecloc::testing {

inline std::string data_path(const std::string& name) { return std::string(ECLOC_TEST_DATA) + "/" + name; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  FqElement fq(const FqCtx& ctx) { return FqElement(ctx, static_cast<std::uint32_t>(below(ctx->q()))); }
  FqElement fq_nonzero(const FqCtx& ctx) { return FqElement(ctx, 1 + static_cast<std::uint32_t>(below(ctx->q() - 1))); }

  RkElement rk(const RkCtx& ctx) {
    std::vector<std::uint32_t> c(ctx->k());
    for (auto& v : c) v = static_cast<std::uint32_t>(below(ctx->field()->q()));
    return RkElement(ctx, c);
  }
  // Sparse-ish elements so that valuation edge cases come up often.
  RkElement rk_sparse(const RkCtx& ctx) {
    std::vector<std::uint32_t> c(ctx->k());
    for (auto& v : c)
      if (below(3) == 0) v = static_cast<std::uint32_t>(below(ctx->field()->q()));
    return RkElement(ctx, c);
  }
  RkElement unit(const RkCtx& ctx) {
    RkElement r = rk(ctx);
    std::vector<std::uint32_t> c = r.codes();
    c[0] = fq_nonzero(ctx->field()).code();
    return RkElement(ctx, c);
  }
  // Element with valuation exactly m (m < k), or zero when m >= k.
  RkElement with_nu(const RkCtx& ctx, int m) {
    if (m >= ctx->k()) return RkElement::zero(ctx);
    std::vector<std::uint32_t> c(ctx->k());
    c[m] = fq_nonzero(ctx->field()).code();
    for (int i = m + 1; i < ctx->k(); ++i) c[i] = static_cast<std::uint32_t>(below(ctx->field()->q()));
    return RkElement(ctx, c);
  }
  RkElement in_maximal_ideal(const RkCtx& ctx) {
    if (ctx->k() == 1) return RkElement::zero(ctx);
    return with_nu(ctx, range(1, ctx->k()));
  }

  LocalCurveCoeffs curve(const RkCtx& ctx, bool short_form = false) {
    for (;;) {
      LocalCurveCoeffs c = short_form ? LocalCurveCoeffs::short_form(rk(ctx), rk(ctx))
                                      : LocalCurveCoeffs{rk(ctx), rk(ctx), rk(ctx), rk(ctx), rk(ctx)};
      if (c.is_elliptic()) return c;
    }
  }

  InfinityPoint inf_point(const LocalCurve& curve) { return point_from_x(curve, in_maximal_ideal(curve.ring())); }
  InfinityPoint inf_point_nu(const LocalCurve& curve, int m) { return point_from_x(curve, with_nu(curve.ring(), m)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ecloc::testing
