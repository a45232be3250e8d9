#include "ecloc/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace ecloc {

namespace {

MultiPoly V(Var v) { return MultiPoly::var(v); }

Curve<MultiPoly> ext_curve() { return symbolic_curve(Form::Extended); }

Point<MultiPoly> generic_projective(int which) {
  if (which == 1) return {V(Var::X1), V(Var::Y1), V(Var::Z1)};
  return {V(Var::X2), V(Var::Y2), V(Var::Z2)};
}

// ------------------------------------------------------------ polynomials over F_p

using PolyP = std::map<Monomial, std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

PolyP to_mod_p(const MultiPoly& f, std::uint32_t p) {
  PolyP out;
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t den = mpz_mod(c.get_den(), p);
    if (!den) raise(ErrorCode::DenominatorNotClearing, "denominator divisible by p");
    std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t(mpz_mod(c.get_num(), p)) * inv_mod(den, p) % p);
    if (v) out[m] = v;
  }
  return out;
}

MultiPoly from_mod_p(const PolyP& f) {
  MultiPoly out;
  for (const auto& [m, c] : f) out += MultiPoly::monomial(m, static_cast<unsigned long>(c));
  return out;
}

void add_term(PolyP& f, const Monomial& m, std::uint64_t c, std::uint32_t p) {
  auto& slot = f[m];
  slot = static_cast<std::uint32_t>((slot + c) % p);
  if (!slot) f.erase(m);
}

PolyP mul(const PolyP& a, const PolyP& b, std::uint32_t p) {
  PolyP out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, ma * mb, std::uint64_t(ca) * cb % p, p);
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial q;
  for (int i = 0; i < kNumVars; ++i) q.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return q;
}

// Exact divisibility by a single divisor, lex order on the exponent vector.
bool divides(const PolyP& den, PolyP num, std::uint32_t p) {
  if (den.empty()) return num.empty();
  const auto& [ld, cd] = *den.rbegin();
  std::uint32_t icd = inv_mod(cd, p);
  while (!num.empty()) {
    auto [ln, cn] = *num.rbegin();
    if (!ld.divides(ln)) return false;
    Monomial q = quotient(ln, ld);
    std::uint64_t cq = std::uint64_t(cn) * icd % p;
    for (const auto& [m, c] : den) add_term(num, q * m, (p - cq) * c % p, p);
  }
  return true;
}

// Univariate polynomials over F_p, lowest degree first.
using UPoly = std::vector<std::uint32_t>;

void trim(UPoly& f) {
  while (!f.empty() && !f.back()) f.pop_back();
}

UPoly umod(UPoly a, const UPoly& b, std::uint32_t p) {
  std::uint32_t ib = inv_mod(b.back(), p);
  trim(a);
  while (a.size() >= b.size()) {
    std::uint64_t c = std::uint64_t(a.back()) * ib % p;
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = static_cast<std::uint32_t>((a[s + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Divide out the factor (x - r) as long as it divides.
UPoly strip_root(UPoly f, std::uint32_t r, std::uint32_t p) {
  while (f.size() > 1) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * r + f[i]) % p;
    if (v) break;
    UPoly q(f.size() - 1);
    std::uint64_t carry = 0;
    for (std::size_t i = f.size(); i-- > 1;) {
      carry = (f[i] + carry * r) % p;
      q[i - 1] = static_cast<std::uint32_t>(carry);
    }
    f = std::move(q);
  }
  return f;
}

std::string poly_str(const PolyP& f) { return f.empty() ? "0" : from_mod_p(f).str(); }

template <class Fn>
VerifyCheck timed(const std::string& name, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyCheck c;
  c.name = name;
  try {
    fn(c);
  } catch (const Error& e) {
    c.pass = false;
    c.detail += std::string(c.detail.empty() ? "" : "; ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

MultiPoly binom_n(int shift, int r) {
  // C(n + shift, r) as a polynomial in n
  MultiPoly acc(1);
  for (int j = 0; j < r; ++j) acc *= V(Var::n) + MultiPoly(shift - j);
  mpz_class f = 1;
  for (int j = 2; j <= r; ++j) f *= j;
  return acc.scaled(mpq_class(1, f));
}

}  // namespace

// ------------------------------------------------------------ addition law

ShortSumParts<MultiPoly> short_sum_table(bool corrupt_h2) {
  ShortSumParts<MultiPoly> s;
  s.g1 = MultiPoly::parse("a1*X1*X2 + a3*X2*Z1 + X2*Y1 + X1*Y2");
  s.g2 = MultiPoly::parse("a1*X1*Z2 + a3*Z1*Z2 + Y1*Z2 + Z1*Y2");
  s.H1 = MultiPoly::parse(
      "-a1*a3*X1*Z2 - a3^2*Z1*Z2 + a1*X2*Y1 - a2*X1*X2 - a4*X2*Z1 - a4*X1*Z2 - 3*a6*Z1*Z2 + Y1*Y2");
  s.H2 = MultiPoly::parse(std::string("-a2*a3^2*Z1*Z2 + a1*a3*a4*Z1*Z2 - a1^2*a6*Z1*Z2 - a3^2*X1*Z2 + a4^2*Z1*Z2 ") +
                          "- 4*a2*a6*Z1*Z2 + a3*X2*Y1 - a4*X1*X2 - " + (corrupt_h2 ? "2" : "3") +
                          "*a6*X2*Z1 - 3*a6*X1*Z2");
  s.H3 = MultiPoly::parse("a1^2*X1*Z2 + a1*a3*Z1*Z2 + a1*Y1*Z2 + a2*X2*Z1 + a2*X1*Z2 + a4*Z1*Z2 + 3*X1*X2");
  s.H4 = MultiPoly::parse(
      "a1*a3*X1*Z2 + a3^2*Z1*Z2 + a2*X1*X2 + a3*Y1*Z2 + a4*X2*Z1 + a4*X1*Z2 + 3*a6*Z1*Z2 + Y1*Y2");
  return s;
}

Point<MultiPoly> short_sum_from_table(bool corrupt_h2) {
  ShortSumParts<MultiPoly> s = short_sum_table(corrupt_h2);
  return {s.g1 * s.H1 + s.g2 * s.H2, s.H1 * s.H4 - s.H2 * s.H3, s.g1 * s.H3 + s.g2 * s.H4};
}

MultiPoly reduce_mod_curves(const MultiPoly& poly) {
  Curve<MultiPoly> c = ext_curve();
  auto rel = [&](Var X, Var Y, Var Z) {
    MultiPoly x = V(X), y = V(Y), z = V(Z);
    return y * y * z + c.a1 * x * y * z + c.a3 * y * z * z - c.a2 * x * x * z - c.a4 * x * z * z - c.a6 * z * z * z;
  };
  MultiPoly r = poly.reduce_power(Var::X1, 3, rel(Var::X1, Var::Y1, Var::Z1));
  return r.reduce_power(Var::X2, 3, rel(Var::X2, Var::Y2, Var::Z2));
}

VerifyCheck check_shortsum(bool corrupt_h2) {
  return timed("shortsum", [&](VerifyCheck& out) {
    Curve<MultiPoly> c = ext_curve();
    Point<MultiPoly> P1 = generic_projective(1), P2 = generic_projective(2);
    Point<MultiPoly> T = short_sum_from_table(corrupt_h2);
    bool same_as_library = T == law_010(c, P1, P2);
    bool on = reduce_mod_curves(curve_equation(c, T)).is_zero();
    std::map<Var, MultiPoly> to_O = {{Var::X2, MultiPoly()}, {Var::Y2, MultiPoly(1)}, {Var::Z2, MultiPoly()}};
    Point<MultiPoly> S{T.X.substitute(to_O), T.Y.substitute(to_O), T.Z.substitute(to_O)};
    bool identity = reduce_mod_curves(S.X * P1.Y - S.Y * P1.X).is_zero() &&
                    reduce_mod_curves(S.X * P1.Z - S.Z * P1.X).is_zero() &&
                    reduce_mod_curves(S.Y * P1.Z - S.Z * P1.Y).is_zero() && !S.Y.is_zero();
    out.pass = same_as_library && on && identity;
    std::ostringstream os;
    os << "table law equals library law: " << (same_as_library ? "yes" : "no")
       << "; sum lies on E modulo both curve equations: " << (on ? "yes" : "no")
       << "; P + O is proportional to P: " << (identity ? "yes" : "no");
    out.detail = os.str();
  });
}

// ------------------------------------------------------------ f(x)

MultiPoly f_display(bool corrected) {
  std::string x8 = corrected ? "- a1^5*X^8 - 4*a1^3*a2*X^8 - 6*a1^2*a3*X^8 - 3*a1*a2^2*X^8 - 3*a1*a4*X^8 - 3*a2*a3*X^8"
                             : "- a1^5*X^8 + 4*a1^3*a2*X^8 + 6*a1^2*a3*X^8 + 3*a1*a2^2*X^8 + 3*a1*a4*X^8 + 3*a2*a3*X^8";
  return MultiPoly::parse(
      "X^3 - a1*X^4 + a1^2*X^5 + a2*X^5 - a1^3*X^6 - 2*a1*a2*X^6 - a3*X^6"
      " + a1^4*X^7 + 3*a1^2*a2*X^7 + 3*a1*a3*X^7 + a2^2*X^7 + a4*X^7 " +
      x8 +
      " + a1^6*X^9 + 5*a1^4*a2*X^9 + 10*a1^3*a3*X^9 + 6*a1^2*a2^2*X^9 + 6*a1^2*a4*X^9 + 12*a1*a2*a3*X^9"
      " + a2^3*X^9 + 3*a2*a4*X^9 + 2*a3^2*X^9 + a6*X^9");
}

VerifyCheck check_fx_series() {
  return timed("fx_series", [&](VerifyCheck& out) {
    MultiPoly rec = f_symbolic(10, Form::Extended), sub = f_by_substitution(10, Form::Extended);
    bool two_ways = rec == sub;
    bool display = rec == f_display(true);
    bool literal = rec == f_display(false);
    auto fixed_point = [](Form form, int K) {
      Curve<MultiPoly> c = symbolic_curve(form);
      MultiPoly x = V(Var::X).with_truncation(K), z = f_symbolic(K, form).with_truncation(K);
      MultiPoly rhs = x * x * x + c.a2 * x * x * z + c.a4 * x * z * z + c.a6 * z * z * z - c.a1 * x * z - c.a3 * z * z;
      return (z - rhs).is_zero();
    };
    bool fp_ext = fixed_point(Form::Extended, 30), fp_short = fixed_point(Form::Short, 30);
    bool short_form = f_symbolic(10, Form::Short) == MultiPoly::parse("X^3 + A*X^7 + B*X^9");
    out.pass = two_ways && display && fp_ext && fp_short && short_form;
    std::ostringstream os;
    os << "recursion equals substitution mod x^10: " << (two_ways ? "yes" : "no")
       << "; matches the display with the x^8 sign corrected: " << (display ? "yes" : "no")
       << "; matches the x^8 coefficient as printed: " << (literal ? "yes" : "no")
       << "; fixed point mod x^30 (extended, short): " << (fp_ext ? "yes" : "no") << ", " << (fp_short ? "yes" : "no")
       << "; short form x^3 + A x^7 + B x^9: " << (short_form ? "yes" : "no");
    out.detail = os.str();
  });
}

// ------------------------------------------------------------ semi-linearity

VerifyCheck check_sum_mod_ideal() {
  return timed("sum_mod_ideal", [&](VerifyCheck& out) {
    std::map<Var, MultiPoly> y1 = {{Var::Y1, MultiPoly(1)}, {Var::Y2, MultiPoly(1)}};
    Point<MultiPoly> T = short_sum_from_table(false);
    MultiPoly X3 = T.X.substitute(y1), Y3 = T.Y.substitute(y1);
    Monomial x1sq, z1;
    x1sq[Var::X1] = 2;
    z1[Var::Z1] = 1;
    std::vector<Monomial> I = {x1sq, z1};
    MultiPoly D = MultiPoly::parse("X1 + X2 + a1*X1*X2 - a2*X1*X2^2 + 2*a3*X1*Z2 - 2*a4*X1*X2*Z2 - 3*a6*X1*Z2^2");
    MultiPoly r = (X3 - D * Y3).reduce_monomial_ideal(I);
    Curve<MultiPoly> c = ext_curve();
    MultiPoly x = V(Var::X2), z = V(Var::Z2);
    MultiPoly rel = z + c.a1 * x * z + c.a3 * z * z - c.a2 * x * x * z - c.a4 * x * z * z - c.a6 * z * z * z;
    MultiPoly rr = r.reduce_power(Var::X2, 3, rel).reduce_monomial_ideal(I);
    out.pass = rr.is_zero();
    out.detail = std::string("X3 - (P3)_x Y3 in I_P + <curve equation of P2>: ") + (rr.is_zero() ? "yes" : "no") +
                 "; already in I_P alone: " + (r.is_zero() ? "yes" : "no");
  });
}

// ------------------------------------------------------------ ψ tables

VerifyCheck check_psi_tables(bool quick) {
  return timed("psi-tables", [&](VerifyCheck& out) {
    int ie = quick ? 6 : std::min(10, symbolic_budget_for(Form::Extended));
    int is = quick ? 9 : std::min(13, symbolic_budget_for(Form::Short));
    MultPolyTable te = psi_table(ie, Form::Extended), ts = psi_table(is, Form::Short);
    MultiPoly n = V(Var::n), a1 = V(Var::a1), a2 = V(Var::a2), a3 = V(Var::a3), A = V(Var::A), B = V(Var::B);
    std::vector<std::pair<std::string, bool>> checks;
    checks.push_back({"psi1", te(1) == n});
    checks.push_back({"psi2", te(2) == binom_n(0, 2) * a1});
    checks.push_back({"psi3", te(3) == binom_n(0, 3) * a1.pow(2) - 2 * binom_n(1, 3) * a2});
    checks.push_back({"psi4", te(4) == binom_n(0, 4) * a1.pow(3) - binom_n(1, 3) * (2 * n - MultiPoly(3)) * a1 * a2 +
                                           (n * (n.pow(3) - MultiPoly(1))).scaled(mpq_class(1, 2)) * a3});
    checks.push_back({"psi5 short", ts(5) == (A * n * (n.pow(4) - MultiPoly(1))).scaled(mpq_class(-2, 5))});
    checks.push_back({"psi7 short", ts(7) == (B * n * (n.pow(6) - MultiPoly(1))).scaled(mpq_class(-3, 7))});
    // The display omits the factor n that deg_n = 9 and n | psi_9 force.
    MultiPoly psi9_display = (A.pow(2) * (n.pow(4) - MultiPoly(1)) * (n.pow(4) - MultiPoly(5))).scaled(mpq_class(2, 15));
    checks.push_back({"psi9 short", ts(9) == n * psi9_display});
    bool props = true;
    std::string bad;
    for (const MultPolyTable* t : {&te, &ts}) {
      for (int i = 1; i <= t->imax; ++i) {
        const MultiPoly& psi = (*t)(i);
        if (psi.is_zero()) continue;
        bool ok = psi.degree(Var::n) == i && psi.substitute({{Var::n, MultiPoly()}}).is_zero();
        ok = ok && (i == 1 || psi.substitute({{Var::n, MultiPoly(1)}}).is_zero());
        DenominatorProfile dp = denominator_profile(psi);
        ok = ok && mpz_divisible_p(factorial_product(i).get_mpz_t(), dp.lcm.get_mpz_t());
        for (unsigned long q : dp.primes) ok = ok && q <= static_cast<unsigned long>(i);
        if (!ok) {
          props = false;
          bad += std::string(" ") + form_name(t->form) + "/" + std::to_string(i);
        }
      }
    }
    bool closed = true;
    std::string failed;
    for (const auto& [name, ok] : checks)
      if (!ok) {
        closed = false;
        failed += " " + name;
      }
    out.pass = te.validated && ts.validated && closed && props;
    std::ostringstream os;
    os << "extended i<=" << ie << " validated: " << (te.validated ? "yes" : "no") << "; short i<=" << is
       << " validated: " << (ts.validated ? "yes" : "no") << "; closed forms: " << (closed ? "match" : "mismatch" + failed)
       << "; degree/root/denominator properties: " << (props ? "hold" : "fail" + bad)
       << "; psi9 matches n times the displayed (2/15)A^2(n^4-1)(n^4-5)";
    out.detail = os.str();
  });
}

VerifyCheck check_psi_prime_powers() {
  return timed("psi_prime_powers", [&](VerifyCheck& out) {
    MultPolyTable t = psi_table(6, Form::Extended);
    int count = 0;
    std::string bad;
    for (long long p : {2, 3, 5, 7})
      for (int l : {1, 2}) {
        long long pl = l == 1 ? p : p * p;
        for (int i = 1; i < p; ++i) {
          MultiPoly v = t(i).substitute({{Var::n, MultiPoly(pl)}});
          bool ok = true;
          for (const auto& [m, c] : v.terms())
            ok = ok && mpz_divisible_ui_p(c.get_num_mpz_t(), static_cast<unsigned long>(pl)) &&
                 !mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p));
          ++count;
          if (!ok) bad += " psi" + std::to_string(i) + "(" + std::to_string(pl) + ")";
        }
      }
    out.pass = bad.empty();
    out.detail = std::to_string(count) + " cases psi_i(p^l) = 0 mod p^l" + (bad.empty() ? "" : "; failing:" + bad);
  });
}

// ------------------------------------------------------------ conditions C1..C3

VerifyCheck check_conditions_symbolic(std::uint32_t p) {
  return timed("conditions p=" + std::to_string(p) + " symbolic", [&](VerifyCheck& out) {
    if (p > 13 || !is_prime(p)) raise(ErrorCode::InvalidArgument, "symbolic conditions cover primes p <= 13");
    Form form = p <= 3 ? Form::Extended : Form::Short;
    const int pp = static_cast<int>(p * p);
    std::vector<MultiPoly> psi = psi_at_integer(p, pp, form);
    std::vector<PolyP> r(pp + 1);
    for (int i = 1; i <= pp; ++i) r[i] = to_mod_p(psi[i], p);
    const PolyP& gp = r[p];
    bool c2 = true, c3 = true;
    for (int i = 1; i < pp; ++i) {
      if (i % static_cast<int>(p)) c2 = c2 && r[i].empty();
      else if (i > static_cast<int>(p)) c3 = c3 && divides(gp, r[i], p);
    }
    bool c1 = false;
    std::string how;
    if (form == Form::Extended) {
      // Eliminate a variable occurring linearly with constant coefficient in ψ_p(p).
      std::optional<Var> lin;
      for (Var v : {Var::a1, Var::a2, Var::a3, Var::a4, Var::a6}) {
        MultiPoly g = from_mod_p(gp);
        if (g.degree(v) == 1 && g.coefficient(v, 1).is_constant()) {
          lin = v;
          break;
        }
      }
      if (!lin) raise(ErrorCode::InternalInvariantViolation, "psi_p(p) has no linear variable to eliminate");
      MultiPoly g = from_mod_p(gp);
      std::uint32_t lc = to_mod_p(g.coefficient(*lin, 1), p).begin()->second;
      MultiPoly rest = g - g.coefficient(*lin, 1) * V(*lin);
      MultiPoly repl = rest.scaled(mpq_class(static_cast<unsigned long>(p - inv_mod(lc, p))));
      std::map<Var, MultiPoly> sub = {{*lin, repl}};
      PolyP d = to_mod_p(ext_curve().discriminant().substitute(sub), p);
      PolyP h = to_mod_p(from_mod_p(r[pp]).substitute(sub), p);
      PolyP dn = d;
      for (int N = 1; N <= 4 && !c1; ++N) {
        if (divides(h, dn, p)) {
          c1 = true;
          how = "disc^" + std::to_string(N) + " in <psi_p(p), psi_p^2(p)> after eliminating " + var_name(*lin);
        }
        dn = mul(dn, d, p);
      }
      if (!c1) how = "discriminant not in the radical of <psi_p(p), psi_p^2(p)>";
    } else {
      // Weighted homogeneous in A (weight 4), B (weight 6): nonzero orbits are (1,0), (0,1), (t,t).
      bool homogeneous = true;
      for (int i : {static_cast<int>(p), pp})
        for (const auto& [m, c] : r[i]) homogeneous = homogeneous && 4 * m[Var::A] + 6 * m[Var::B] == i - 1;
      if (!homogeneous) raise(ErrorCode::InternalInvariantViolation, "psi_i(p) not weighted homogeneous");
      auto at = [&](const PolyP& f, std::uint32_t A, std::uint32_t B) {
        std::uint64_t v = 0;
        for (const auto& [m, c] : f) {
          std::uint64_t t = c;
          for (int j = 0; j < m[Var::A]; ++j) t = t * A % p;
          for (int j = 0; j < m[Var::B]; ++j) t = t * B % p;
          v = (v + t) % p;
        }
        return v;
      };
      auto diag = [&](const PolyP& f) {
        UPoly u;
        for (const auto& [m, c] : f) {
          std::size_t d = m[Var::A] + m[Var::B];
          if (u.size() <= d) u.resize(d + 1, 0);
          u[d] = (u[d] + c) % p;
        }
        trim(u);
        return u;
      };
      bool axes = (at(gp, 1, 0) || at(r[pp], 1, 0)) && (at(gp, 0, 1) || at(r[pp], 0, 1));
      UPoly G = ugcd(diag(gp), diag(r[pp]), p);
      // Δ(t,t) = -16 t^2 (4t + 27): allowed common roots are 0 and -27/4.
      std::uint32_t bad_root = static_cast<std::uint32_t>((p - 27 % p) * std::uint64_t(inv_mod(4, p)) % p);
      G = strip_root(strip_root(G, 0, p), bad_root, p);
      c1 = axes && G.size() <= 1;
      how = std::string("common zeros of psi_p(p), psi_p^2(p) off the axes: ") +
            (G.size() <= 1 ? "only singular ones" : "found") + "; on the axes: " + (axes ? "none" : "found");
    }
    out.pass = c1 && c2 && c3;
    std::ostringstream os;
    os << "psi_" << p << "(" << p << ") = " << poly_str(gp) << " mod " << p << "; C1 " << (c1 ? "holds" : "FAILS") << " ("
       << how << "); C2 " << (c2 ? "holds" : "FAILS") << "; C3 " << (c3 ? "holds" : "FAILS");
    out.detail = os.str();
  });
}

VerifyCheck check_conditions_specialized(std::uint32_t p, int samples, std::uint64_t seed) {
  return timed("conditions p=" + std::to_string(p) + " specialized", [&](VerifyCheck& out) {
    if (p < 5 || p > 13 || !is_prime(p)) raise(ErrorCode::InvalidArgument, "specialized conditions cover 5 <= p <= 13");
    PolyP gp = to_mod_p(psi_pp_short_direct(p), p);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
    for (std::uint32_t A = 0; A < p; ++A)
      for (std::uint32_t B = 0; B < p; ++B) {
        std::uint64_t disc = (4ull * A * A % p * A + 27ull * B * B) % p, v = 0;
        if (!disc) continue;
        for (const auto& [m, c] : gp) {
          std::uint64_t t = c;
          for (int j = 0; j < m[Var::A]; ++j) t = t * A % p;
          for (int j = 0; j < m[Var::B]; ++j) t = t * B % p;
          v = (v + t) % p;
        }
        if (!v) residues.push_back({A, B});
      }
    std::mt19937_64 rng(seed);
    const int k = 6;
    RkCtx ring = RkContext::make(FqContext::make(p, 1), k);
    int ok = 0;
    std::string bad;
    for (int s = 0; s < samples; ++s) {
      auto [A0, B0] = residues[rng() % residues.size()];
      std::vector<std::uint32_t> ca(k), cb(k);
      ca[0] = A0;
      cb[0] = B0;
      for (int j = 1; j < k; ++j) {
        ca[j] = static_cast<std::uint32_t>(rng() % p);
        cb[j] = static_cast<std::uint32_t>(rng() % p);
      }
      LocalCurve curve(LocalCurveCoeffs::short_form(RkElement(ring, ca), RkElement(ring, cb)));
      ExceptionalReport rep = check_conditions(curve);
      if (rep.all()) ++ok;
      else bad += " (A,B)=(" + RkElement(ring, ca).str() + ";" + RkElement(ring, cb).str() + "):" + rep.failing;
    }
    out.pass = ok == samples;
    out.detail = std::to_string(ok) + "/" + std::to_string(samples) + " sampled exceptional curves over F_" +
                 std::to_string(p) + "[eps]/(eps^" + std::to_string(k) + ") satisfy C1-C3" + bad;
  });
}

std::vector<VerifyCheck> run_verify(const VerifyOptions& opts) {
  std::vector<VerifyCheck> out;
  out.push_back(check_shortsum(opts.corrupt_h2));
  out.push_back(check_fx_series());
  out.push_back(check_sum_mod_ideal());
  out.push_back(check_psi_tables(opts.quick));
  out.push_back(check_psi_prime_powers());
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    if (opts.quick && p >= 5) {
      VerifyCheck c;
      c.name = "conditions p=" + std::to_string(p) + " symbolic";
      c.skipped = c.pass = true;
      c.detail = "skipped (--quick)";
      out.push_back(c);
      continue;
    }
    out.push_back(check_conditions_symbolic(p));
  }
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    if (opts.quick) {
      VerifyCheck c;
      c.name = "conditions p=" + std::to_string(p) + " specialized";
      c.skipped = c.pass = true;
      c.detail = "skipped (--quick)";
      out.push_back(c);
      continue;
    }
    out.push_back(check_conditions_specialized(p, 3));
  }
  return out;
}

}  // namespace ecloc
