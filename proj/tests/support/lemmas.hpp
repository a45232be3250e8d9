#pragma once

#include <map>
#include <sstream>
#include <string>

#include "ecloc/infinity.hpp"
#include "support/gen.hpp"

namespace ecloc::testing {

struct LemmaTally {
  std::map<std::string, long long> checks;
  std::map<std::string, long long> failures;
  std::string first_failure;
  long long total() const {
    long long t = 0;
    for (const auto& [k, v] : checks) t += v;
    return t;
  }
  long long failed() const {
    long long t = 0;
    for (const auto& [k, v] : failures) t += v;
    return t;
  }
  void record(const std::string& name, bool ok, const std::string& detail) {
    ++checks[name];
    if (!ok) {
      ++failures[name];
      if (first_failure.empty()) first_failure = name + ": " + detail;
    }
  }
};

// A random curve over F_p[eps]/(eps^k), biased so that about half are exceptional.
inline LocalCurveCoeffs lemma_curve(Gen& g, const RkCtx& r, bool want_exceptional) {
  const std::uint32_t p = r->p();
  for (;;) {
    LocalCurveCoeffs c;
    if (p >= 5) {
      RkElement A = want_exceptional ? g.in_maximal_ideal(r) : g.unit(r);
      c = LocalCurveCoeffs::short_form(A, g.rk(r));
    } else {
      c = LocalCurveCoeffs{g.rk(r), g.rk(r), g.rk(r), g.rk(r), g.rk(r)};
      if (want_exceptional) {
        if (p == 2) c.a1 = g.in_maximal_ideal(r);
        if (p == 3) c.a2 = -(c.a1 * c.a1) + g.in_maximal_ideal(r);
      }
    }
    if (c.is_elliptic()) return c;
  }
}

// One round: a random curve and a handful of points, every applicable lemma checked.
inline void valuation_lemma_round(Gen& g, LemmaTally& tally) {
  static const std::uint32_t primes[] = {2, 3, 5};
  const std::uint32_t p = primes[g.below(3)];
  const int k = g.range(2, 12);
  auto r = RkContext::make(FqContext::make(p, 1), k);
  LocalCurve curve(lemma_curve(g, r, g.coin()));
  CaseInfo info = classify_case(curve);
  bool jump_ok = false;
  if (info.exceptional) jump_ok = check_conditions(curve).all();

  auto describe = [&](const InfinityPoint& P) {
    std::ostringstream os;
    os << "p=" << p << " k=" << k << " x=" << P.x().str();
    return os.str();
  };
  auto capped = [&](long long v) { return v >= k ? Nu::infinity() : Nu(static_cast<int>(v)); };

  for (int t = 0; t < 4; ++t) {
    InfinityPoint P = g.inf_point(curve), Q = g.inf_point(curve);
    if (P.is_identity()) continue;
    Nu np = P.nu(), nq = Q.nu();
    InfinityPoint S = inf_add(P, Q);

    if (np != nq) tally.record("degree_of_sum", S.nu() == std::min(np, nq), describe(P));
    if (np == nq && !Q.is_identity()) {
      std::uint32_t lead = P.x().leading().ctx()->add(P.x().leading().code(), Q.x().leading().code());
      bool ok = lead == 0 ? S.nu() > np : (S.nu() == np && S.x().leading().code() == lead);
      tally.record("same_degree_sum", ok, describe(P));
    }
    if (!Q.is_identity()) {
      int m = std::min(np, nq).value();
      tally.record("leading_terms_add", (S.x() - (P.x() + Q.x())).nu() >= Nu(m + 1), describe(P));
    }

    unsigned long long n = 1 + g.below(60);
    if (n % p == 0) ++n;
    tally.record("prime_to_p_multiple", inf_mul(n, P).nu() == np, describe(P));

    if (!info.exceptional) {
      InfinityPoint T = P;
      long long expect = np.value();
      bool ok = true;
      for (int i = 1; i <= 4 && !T.is_identity(); ++i) {
        T = inf_mul(p, T);
        expect *= p;
        ok = ok && T.nu() == capped(expect);
        if (expect >= k) break;
      }
      tally.record("p_multiple_degree", ok, describe(P));
    } else if (jump_ok) {
      long long v = np.value();
      long long a = static_cast<long long>(p) * p * v;
      long long b = info.d.infinite() ? a + k : static_cast<long long>(p) * v + info.d.value();
      Nu got = inf_mul(p, P).nu();
      Nu lower = capped(std::min(a, b));
      bool ok = got >= lower && (a == b || got == lower);
      tally.record("exceptional_jump", ok, describe(P) + " d=" + info.d.str() + " got " + got.str());
    }
  }
}

}  // namespace ecloc::testing
