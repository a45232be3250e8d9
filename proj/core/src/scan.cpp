#include "ecloc/infinity.hpp"

namespace ecloc {

MultiPoly psi_pp_short_direct(std::uint32_t p) {
  auto reduced = reduce_mod_p(psi_at_integer(p, static_cast<int>(p), Form::Short)[p], p);
  if (!reduced) raise(ErrorCode::DenominatorNotClearing, "integral computation produced a denominator");
  return *reduced;
}

ScanResult scan_exceptional_rate(std::uint32_t p, ScanRoute route) {
  if (!is_prime(p) || p < 5) raise(ErrorCode::InvalidArgument, "scan needs a prime p >= 5");
  ScanResult res;
  res.p = p;
  MultiPoly poly;
  if (route == ScanRoute::Auto)
    route = static_cast<int>(p) <= symbolic_budget_for(Form::Short) ? ScanRoute::Table : ScanRoute::Direct;
  if (route == ScanRoute::Table) {
    MultPolyTable t = psi_table(static_cast<int>(p), Form::Short);
    MultiPoly v = t(static_cast<int>(p)).substitute({{Var::n, MultiPoly(static_cast<long long>(p))}});
    auto reduced = reduce_mod_p(v, p);
    if (!reduced) raise(ErrorCode::DenominatorNotClearing, "psi_p(p) keeps a denominator divisible by p");
    poly = *reduced;
    res.route = "short table";
  } else {
    poly = psi_pp_short_direct(p);
    res.route = "direct multiplication";
  }
  // Coefficients as residues; evaluate on every (A, B).
  struct T {
    unsigned a, b;
    unsigned long c;
  };
  std::vector<T> terms;
  for (const auto& [m, c] : poly.terms()) {
    for (int v = 0; v < kNumVars; ++v)
      if (m.e[v] && static_cast<Var>(v) != Var::A && static_cast<Var>(v) != Var::B)
        raise(ErrorCode::InternalInvariantViolation, "unexpected variable in psi_p(p)");
    terms.push_back({m[Var::A], m[Var::B], mpz_class(c.get_num()).get_ui()});
  }
  auto powmod = [&](unsigned long b, unsigned e) {
    unsigned long r = 1;
    for (unsigned i = 0; i < e; ++i) r = r * b % p;
    return r;
  };
  for (unsigned long A = 0; A < p; ++A)
    for (unsigned long B = 0; B < p; ++B) {
      unsigned long disc = (4 * powmod(A, 3) + 27 * powmod(B, 2)) % p;  // Δ = -16 (4A^3 + 27B^2)
      if (disc == 0) continue;
      ++res.total;
      unsigned long v = 0;
      for (const auto& t : terms) v = (v + t.c * powmod(A, t.a) % p * powmod(B, t.b)) % p;
      if (v == 0) ++res.exceptional;
    }
  res.rate = mpq_class(static_cast<unsigned long>(res.exceptional), static_cast<unsigned long>(res.total));
  res.rate.canonicalize();
  return res;
}

}  // namespace ecloc
