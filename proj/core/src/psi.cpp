#include <cstdlib>
#include <mutex>
#include <string>

#include "ecloc/infinity.hpp"

namespace ecloc {

namespace {

using SymSeries = TruncSeries<MultiPoly>;

Curve<SymSeries> series_curve(const Curve<MultiPoly>& c, int K) {
  return Curve<SymSeries>{SymSeries::constant(c.a1, K), SymSeries::constant(c.a2, K), SymSeries::constant(c.a3, K),
                          SymSeries::constant(c.a4, K), SymSeries::constant(c.a6, K)};
}

Point<SymSeries> generic_point(const Curve<MultiPoly>& c, int K) {
  std::vector<MultiPoly> f = f_coefficients(c, K);
  SymSeries x = SymSeries::variable(MultiPoly(), K);
  SymSeries z(MultiPoly(), K);
  for (int j = 0; j < K; ++j) z[j] = f[j];
  return Point<SymSeries>{x, x.one_like(), z};
}

}  // namespace

std::vector<SymSeries> symbolic_multiples(int K, int nmax, Form form) {
  Curve<MultiPoly> c = symbolic_curve(form);
  Curve<SymSeries> cs = series_curve(c, K);
  Point<SymSeries> P = generic_point(c, K);
  std::vector<SymSeries> out;
  Point<SymSeries> Q = P;
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) Q = add_inf(cs, Q, P);
    out.push_back(Q.X);
  }
  return out;
}

std::vector<MultiPoly> psi_at_integer(unsigned long long n, int imax, Form form) {
  const int K = imax + 1;
  Curve<MultiPoly> c = symbolic_curve(form);
  Point<SymSeries> nP = scalar_mul_inf(series_curve(c, K), n, generic_point(c, K));
  std::vector<MultiPoly> out(K);
  for (int i = 0; i < K; ++i) out[i] = nP.X[i];
  return out;
}

int symbolic_budget_for(Form form) {
  int def = form == Form::Extended ? 10 : 13;
  if (const char* env = std::getenv("ECLOC_SYMBOLIC_BUDGET")) {
    std::string s(env);
    auto comma = s.find(',');
    try {
      if (comma == std::string::npos) return std::stoi(s);
      return std::stoi(form == Form::Extended ? s.substr(0, comma) : s.substr(comma + 1));
    } catch (const std::exception&) {
      return def;
    }
  }
  return def;
}

int symbolic_budget() { return symbolic_budget_for(Form::Extended); }

bool validate_psi_table(const MultPolyTable& table) {
  const int K = table.imax + 1;
  Curve<MultiPoly> c = symbolic_curve(table.form);
  Curve<SymSeries> cs = series_curve(c, K);
  std::vector<MultiPoly> f = f_coefficients(c, K);
  Point<SymSeries> P = generic_point(c, K);

  SymSeries xn(MultiPoly(), K), xprev(MultiPoly(), K);
  MultiPoly n_minus_1 = MultiPoly::var(Var::n) - MultiPoly(1);
  for (int i = 1; i <= table.imax; ++i) {
    xn[i] = table(i);
    xprev[i] = table(i).substitute({{Var::n, n_minus_1}});
  }
  Point<SymSeries> Pprev{xprev, xprev.one_like(), SymSeries::compose(f, xprev)};
  Point<SymSeries> S = add_inf(cs, Pprev, P);
  return S.X == xn;
}

namespace {

std::mutex g_cache_mu;
std::map<Form, MultPolyTable> g_cache;

}  // namespace

MultPolyTable psi_table(int imax, Form form, PsiTableOptions opts) {
  if (imax < 1) raise(ErrorCode::InvalidArgument, "imax must be at least 1");
  auto truncated = [&](const MultPolyTable& t) {
    MultPolyTable r;
    r.form = form;
    r.imax = imax;
    r.psi.assign(t.psi.begin(), t.psi.begin() + imax + 1);
    r.validated = t.validated;
    return r;
  };
  if (opts.use_cache) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(form);
    if (it != g_cache.end() && it->second.imax >= imax) {
      MultPolyTable r = truncated(it->second);
      if (!opts.validate || r.validated) return r;
    }
  }

  const int K = imax + 1;
  std::vector<SymSeries> mult = symbolic_multiples(K, imax + 1, form);
  MultPolyTable t;
  t.form = form;
  t.imax = imax;
  t.psi.assign(imax + 1, MultiPoly());
  for (int i = 1; i <= imax; ++i) {
    std::vector<std::pair<long long, MultiPoly>> samples;
    for (int n = 1; n <= imax + 1; ++n) samples.emplace_back(n, mult[n - 1][i]);
    t.psi[i] = interpolate_n(samples, i, true);
  }
  if (opts.validate) {
    if (!validate_psi_table(t))
      raise(ErrorCode::ValidationFailed, "(n-1)P + P != nP for the fitted " + std::string(form_name(form)) + " table");
    t.validated = true;
  }
  if (opts.use_cache) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(form);
    if (it == g_cache.end() || it->second.imax < imax || (t.validated && !it->second.validated && it->second.imax <= imax))
      g_cache[form] = t;
  }
  return t;
}

RkElement psi_eval(const MultPolyTable& table, int i, long long n, const LocalCurve& curve) {
  if (i < 0 || i > table.imax) raise(ErrorCode::InvalidArgument, "psi index beyond table bound");
  const LocalCurveCoeffs& c = curve.coeffs();
  if (table.form == Form::Short && !c.is_short())
    raise(ErrorCode::InvalidArgument, "short-form table applied to a curve with a1, a2 or a3 nonzero");
  MultiPoly v = table(i).substitute({{Var::n, MultiPoly(n)}});
  for (const auto& t : v.terms())
    if (t.second.get_den() != 1)
      raise(ErrorCode::DenominatorNotClearing, "psi_" + std::to_string(i) + "(" + std::to_string(n) + ") keeps denominator " +
                                                   t.second.get_den().get_str());
  const RkCtx& ring = curve.ring();
  const unsigned long p = curve.p();
  return v.evaluate(
      RkElement::zero(ring),
      [&](Var var) -> const RkElement& {
        switch (var) {
          case Var::a1: return c.a1;
          case Var::a2: return c.a2;
          case Var::a3: return c.a3;
          case Var::a4: case Var::A: return c.a4;
          case Var::a6: case Var::B: return c.a6;
          default: raise(ErrorCode::InvalidArgument, std::string("unexpected variable ") + var_name(var));
        }
      },
      [&](const mpq_class& q) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), q.get_num().get_mpz_t(), p);
        return RkElement::from_int(ring, static_cast<long long>(r.get_ui()));
      });
}

std::vector<RkElement> psi_values_concrete(const LocalCurve& curve, unsigned long long n, int imax) {
  using RS = TruncSeries<RkElement>;
  const int K = imax + 1;
  const LocalCurveCoeffs& c = curve.coeffs();
  Curve<RS> cs{RS::constant(c.a1, K), RS::constant(c.a2, K), RS::constant(c.a3, K), RS::constant(c.a4, K),
               RS::constant(c.a6, K)};
  std::vector<RkElement> f = f_coefficients(c, K);
  RS x = RS::variable(c.a1, K);
  RS z(c.a1, K);
  for (int j = 0; j < K; ++j) z[j] = f[j];
  Point<RS> nP = scalar_mul_inf(cs, n, Point<RS>{x, x.one_like(), z});
  return nP.X.coeffs();
}

MultipleX x_of_multiple(const InfinityPoint& P, unsigned long long n, const MultPolyTable* table) {
  MultipleX out{inf_mul(n, P).x(), std::nullopt};
  if (table) {
    const int k = P.curve().k();
    Nu v = P.nu();
    if (v.infinite()) {
      out.from_table = RkElement::zero(P.curve().ring());
      return out;
    }
    const int needed = (k + v.value() - 1) / v.value() - 1;
    if (table->imax < needed)
      raise(ErrorCode::TableTooLarge, "table bound " + std::to_string(table->imax) + " below required " + std::to_string(needed));
    RkElement acc = RkElement::zero(P.curve().ring()), power = P.x();
    for (int i = 1; i <= needed; ++i) {
      acc += psi_eval(*table, i, static_cast<long long>(n), P.curve()) * power;
      power = power * P.x();
    }
    out.from_table = acc;
  }
  return out;
}

}  // namespace ecloc
