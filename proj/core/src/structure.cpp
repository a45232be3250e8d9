#include <numeric>
#include <sstream>

#include "ecloc/infinity.hpp"

namespace ecloc {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Trivial: return "trivial";
    case Provenance::SmallK: return "small-k";
    case Provenance::MainCase: return "main-case";
    case Provenance::ExceptionalCase: return "exceptional-case";
    case Provenance::RelationLattice: return "relation-lattice";
    case Provenance::BruteForce: return "brute-force";
  }
  return "unknown";
}

mpz_class GroupStructure::order() const {
  mpz_class r = 1;
  for (const auto& [ord, mult] : factors) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), mpz_class(static_cast<unsigned long>(ord)).get_mpz_t(), mult);
    r *= t;
  }
  return r;
}

std::string GroupStructure::str() const {
  if (factors.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!first) os << " x ";
    first = false;
    os << "Z_" << it->first;
    if (it->second > 1) os << "^" << it->second;
  }
  return os.str();
}

namespace {

bool short_table_applies(const LocalCurve& curve) { return curve.p() >= 5 && curve.coeffs().is_short(); }

// ψ_i(p) for 0 <= i <= imax, from a symbolic table when the budget allows.
std::vector<RkElement> psi_at_p(const LocalCurve& curve, int imax, std::string& route) {
  const std::uint32_t p = curve.p();
  Form form = short_table_applies(curve) ? Form::Short : Form::Extended;
  if (imax <= symbolic_budget_for(form)) {
    MultPolyTable t = psi_table(imax, form);
    std::vector<RkElement> out;
    for (int i = 0; i <= imax; ++i)
      out.push_back(i == 0 ? RkElement::zero(curve.ring()) : psi_eval(t, i, p, curve));
    route = std::string("symbolic ") + form_name(form) + " table";
    return out;
  }
  if (p > 13) raise(ErrorCode::TableTooLarge, "psi_i(p) up to i = " + std::to_string(imax) + " exceeds the configured budget");
  route = "specialized series";
  return psi_values_concrete(curve, p, imax);
}

unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void build_trajectory_partition(const LocalCurve& curve, ExceptionalReport& rep) {
  const int k = curve.k();
  std::vector<bool> covered(k, false);
  for (int m = 1; m < k; ++m) {
    if (covered[m]) continue;
    std::vector<Nu> trj = trajectory(point_from_x(curve, RkElement::eps_power(curve.ring(), m)));
    for (Nu v : trj) {
      if (covered[v.value()] && rep.disjoint) {
        rep.disjoint = false;
        rep.collision = "trajectory of g_" + std::to_string(m) + " meets an earlier one at degree " + v.str();
      }
      covered[v.value()] = true;
    }
    rep.A.push_back(m);
    rep.l[m] = static_cast<int>(trj.size());
  }
}

// Exponents v of the invariant factors p^v of an integer matrix with p-power determinant,
// by elimination over Z/p^(n+1).
std::vector<int> invariant_exponents(std::vector<std::vector<mpz_class>> M, unsigned long p) {
  const std::size_t n = M.size();
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, n + 1);
  auto red = [&](mpz_class& v) {
    v %= mod;
    if (v < 0) v += mod;
  };
  auto val = [&](const mpz_class& v) {
    if (v == 0) return static_cast<int>(n + 1);
    int r = 0;
    mpz_class t = v;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
      t /= p;
      ++r;
    }
    return r;
  };
  for (auto& row : M)
    for (auto& v : row) red(v);
  std::vector<int> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t pr = s, pc = s;
    int best = static_cast<int>(n + 1);
    for (std::size_t r = s; r < n; ++r)
      for (std::size_t c = s; c < n; ++c)
        if (int v = val(M[r][c]); v < best) {
          best = v;
          pr = r;
          pc = c;
        }
    if (best > static_cast<int>(n)) raise(ErrorCode::InternalInvariantViolation, "relation matrix is singular mod p^(n+1)");
    std::swap(M[s], M[pr]);
    for (auto& row : M) std::swap(row[s], row[pc]);
    mpz_class pv, unit, inv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, best);
    unit = M[s][s] / pv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (std::size_t c = s; c < n; ++c) {
      M[s][c] *= inv;
      red(M[s][c]);
    }
    for (std::size_t r = s + 1; r < n; ++r) {
      if (M[r][s] == 0) continue;
      mpz_class f = M[r][s] / pv;
      for (std::size_t c = s; c < n; ++c) {
        M[r][c] -= f * M[s][c];
        red(M[r][c]);
      }
    }
    for (std::size_t c = s + 1; c < n; ++c) M[s][c] = 0;
    out.push_back(best);
  }
  return out;
}

}  // namespace

CaseInfo classify_case(const LocalCurve& curve) {
  CaseInfo info;
  const std::uint32_t p = curve.p();
  std::vector<RkElement> v = psi_at_p(curve, static_cast<int>(p), info.route);
  info.psi_pp = v[p];
  info.exceptional = !info.psi_pp.is_unit();
  info.d = info.psi_pp.nu();
  return info;
}

ExceptionalReport check_conditions(const LocalCurve& curve) {
  CaseInfo info = classify_case(curve);
  if (!info.exceptional) raise(ErrorCode::InvalidArgument, "conditions apply to the exceptional case only (psi_p(p) is a unit)");
  const int p = static_cast<int>(curve.p());
  const int p2 = p * p;
  ExceptionalReport rep;
  rep.d = info.d;
  rep.psi_at_p = psi_at_p(curve, p2, rep.route);
  const RkElement& pp = rep.psi_at_p[p];
  rep.c1 = rep.psi_at_p[p2].is_unit();
  if (!rep.c1) rep.failing = "C1: psi_" + std::to_string(p2) + "(p) is not a unit";
  rep.c2 = true;
  rep.c3 = true;
  for (int i = 1; i < p2; ++i) {
    const RkElement& v = rep.psi_at_p[i];
    if (i % p != 0) {
      if (!v.is_zero() && rep.c2) {
        rep.c2 = false;
        if (rep.failing.empty()) rep.failing = "C2: psi_" + std::to_string(i) + "(p) != 0";
      }
    } else if (!v.divide_exact(pp) && rep.c3) {
      rep.c3 = false;
      if (rep.failing.empty()) rep.failing = "C3: psi_" + std::to_string(i) + "(p) not in <psi_p(p)>";
    }
  }
  if (rep.all()) build_trajectory_partition(curve, rep);
  return rep;
}

GroupStructure group_structure(const LocalCurve& curve) {
  if (!curve.is_elliptic()) raise(ErrorCode::NotElliptic, "discriminant is not a unit");
  GroupStructure gs;
  const int k = curve.k();
  const unsigned long long p = curve.p();
  const int e = curve.e();
  if (k == 1) {
    gs.provenance = Provenance::Trivial;
    gs.theorem = "k = 1: E^inf is trivial";
    return gs;
  }
  CaseInfo info = classify_case(curve);
  gs.d = info.d;
  if (k <= static_cast<int>(p)) {
    gs.provenance = Provenance::SmallK;
    gs.theorem = "k <= p: every nonzero point has order p";
    gs.factors[p] = e * (k - 1);
    return gs;
  }
  if (info.exceptional && k == static_cast<int>(p) + 1) {
    gs.provenance = Provenance::SmallK;
    gs.theorem = "exceptional, k = p + 1: every nonzero point has order p";
    gs.factors[p] = e * (k - 1);
    gs.notes.push_back("rank e(k-1) = " + std::to_string(e * (k - 1)) + " from |E^inf| = q^(k-1); the printed exponent ek = " +
                       std::to_string(e * k) + " would exceed the group order");
    return gs;
  }
  if (!info.exceptional) {
    gs.provenance = Provenance::MainCase;
    gs.theorem = "main case: Z_(p^l_m)^e over m < k with p not dividing m, l_m = floor(log_p((k-1)/m)) + 1";
    for (int m = 1; m < k; ++m) {
      if (m % p == 0) continue;
      int lm = 0;
      for (unsigned long long t = m; t <= static_cast<unsigned long long>(k - 1); t *= p) ++lm;
      gs.A.push_back(m);
      gs.l[m] = lm;
      gs.factors[ipow(p, lm)] += e;
      std::vector<Nu> trj = trajectory(point_from_x(curve, RkElement::eps_power(curve.ring(), m)));
      bool ok = static_cast<int>(trj.size()) == lm;
      unsigned long long expect = m;
      for (std::size_t j = 0; ok && j < trj.size(); ++j, expect *= p) ok = trj[j] == Nu(static_cast<int>(expect));
      if (!ok) raise(ErrorCode::InternalInvariantViolation, "trajectory of g_" + std::to_string(m) + " is not {m p^j}");
    }
    return gs;
  }
  ExceptionalReport rep = check_conditions(curve);
  if (!rep.all())
    raise(ErrorCode::UnsupportedExceptional, "d = " + rep.d.str() + ", " + rep.failing);
  int sum = 0;
  for (int m : rep.A) sum += rep.l[m];
  const long long pp1 = static_cast<long long>(p) * (p - 1);
  std::string reason;
  if (!rep.d.infinite() && rep.d.value() % pp1 == 0 && static_cast<long long>(p * p) * (rep.d.value() / pp1) < k)
    reason = "p^2 nu = p nu + d at nu = " + std::to_string(rep.d.value() / pp1) +
             ", where the two leading terms of [p] may cancel";
  else if (!rep.disjoint)
    reason = rep.collision;
  else if (sum != k - 1)
    reason = "sum of l_m is " + std::to_string(sum);
  if (!reason.empty()) {
    GroupStructure lat = relation_lattice_structure(curve);
    lat.d = info.d;
    lat.notes.push_back("C1-C3 hold but the exceptional-case product does not apply: " + reason);
    return lat;
  }
  gs.provenance = Provenance::ExceptionalCase;
  gs.theorem = "exceptional case: Z_(p^l_m)^e over m in A, generators with disjoint trajectories";
  gs.A = rep.A;
  gs.l = rep.l;
  for (int m : rep.A) gs.factors[ipow(p, rep.l[m])] += e;
  return gs;
}

GroupStructure relation_lattice_structure(const LocalCurve& curve) {
  const std::uint32_t p = curve.p();
  const int k = curve.k(), e = curve.e();
  const std::size_t n = static_cast<std::size_t>(e) * (k - 1);
  std::vector<InfinityPoint> basis;
  for (int m = 1; m < k; ++m)
    for (int j = 0; j < e; ++j)
      basis.push_back(point_from_x(curve, RkElement::eps_power(curve.ring(), m, static_cast<std::uint32_t>(ipow(p, j)))));
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    M[i][i] = p;
    InfinityPoint R = inf_mul(p, basis[i]);
    while (!R.is_identity()) {
      const int m = R.nu().value();
      std::uint32_t c = R.x().code(m);
      for (int j = 0; j < e; ++j, c /= p) {
        const std::uint32_t digit = c % p;
        if (digit == 0) continue;
        const std::size_t idx = static_cast<std::size_t>(m - 1) * e + j;
        M[i][idx] -= digit;
        R = inf_sub(R, inf_mul(digit, basis[idx]));
      }
      if (!R.is_identity() && R.nu().value() <= m)
        raise(ErrorCode::InternalInvariantViolation, "digit expansion did not raise the degree");
    }
  }
  GroupStructure gs;
  gs.provenance = Provenance::RelationLattice;
  gs.theorem = "Z^(e(k-1)) modulo p*g_(m,j) = digit expansion over the basis x = t^j eps^m";
  for (int v : invariant_exponents(std::move(M), p))
    if (v > 0) gs.factors[ipow(p, v)] += 1;
  return gs;
}

GroupStructure brute_force_structure(const LocalCurve& curve) {
  const unsigned long long p = curve.p();
  const int k = curve.k();
  unsigned long long size = 1;
  for (int i = 1; i < k; ++i) {
    size *= curve.q();
    if (size > 4096) raise(ErrorCode::TooLarge, "q^(k-1) exceeds 4096");
  }
  GroupStructure gs;
  gs.provenance = Provenance::BruteForce;
  gs.theorem = "element orders by repeated addition";
  std::vector<unsigned long long> by_exp(k + 1, 0);
  for (const RkElement& x : maximal_ideal_elements(curve.ring())) {
    InfinityPoint T = point_from_x(curve, x);
    int t = 0;
    while (!T.is_identity()) {
      T = inf_mul(p, T);
      ++t;
    }
    ++by_exp[t];
  }
  // log_p |G[p^j]| = sum_i min(lambda_i, j)
  std::vector<int> r(k + 1, 0);
  unsigned long long acc = 0;
  for (int j = 0; j <= k; ++j) {
    acc += by_exp[j];
    unsigned long long v = acc;
    int lg = 0;
    while (v % p == 0) {
      v /= p;
      ++lg;
    }
    if (v != 1) raise(ErrorCode::InternalInvariantViolation, "|G[p^j]| is not a power of p");
    r[j] = lg;
  }
  for (int j = 1; j <= k; ++j) {
    int at_least_j = r[j] - r[j - 1];
    int at_least_next = j < k ? r[j + 1] - r[j] : 0;
    if (at_least_j - at_least_next > 0) gs.factors[ipow(p, j)] = at_least_j - at_least_next;
  }
  return gs;
}

GroupStructure full_group_report(const LocalCurve& curve) {
  GroupStructure gs = group_structure(curve);
  std::uint64_t n = count_points_fq(project_curve(curve.coeffs()));
  gs.residue_order = n;
  gs.split = std::gcd<std::uint64_t>(n, curve.p()) == 1;
  if (!*gs.split)
    gs.notes.push_back("p divides #E(F_q) = " + std::to_string(n) + "; E(R_k) need not split as E(F_q) + E^inf");
  return gs;
}

}  // namespace ecloc
