#include "ecloc/infinity.hpp"

namespace ecloc {

const char* form_name(Form f) { return f == Form::Extended ? "extended" : "short"; }

Curve<MultiPoly> symbolic_curve(Form form) {
  if (form == Form::Short) return Curve<MultiPoly>::short_form(MultiPoly::var(Var::A), MultiPoly::var(Var::B));
  return Curve<MultiPoly>{MultiPoly::var(Var::a1), MultiPoly::var(Var::a2), MultiPoly::var(Var::a3),
                          MultiPoly::var(Var::a4), MultiPoly::var(Var::a6)};
}

MultiPoly f_symbolic(int K, Form form) {
  std::vector<MultiPoly> c = f_coefficients(symbolic_curve(form), K);
  MultiPoly out;
  for (int j = 0; j < K; ++j) out += c[j] * MultiPoly::var(Var::X, j);
  return out.with_truncation(K);
}

MultiPoly f_by_substitution(int K, Form form) {
  Curve<MultiPoly> c = symbolic_curve(form);
  MultiPoly x = MultiPoly::var(Var::X), z = MultiPoly::var(Var::Z);
  MultiPoly F = (x.pow(3) - c.a1 * x * z + c.a2 * x * x * z - c.a3 * z * z + c.a4 * x * z * z + c.a6 * z.pow(3))
                    .with_truncation(K, 3);
  MultiPoly g = F;
  while (g.uses(Var::Z)) g = F.substitute({{Var::Z, g}});
  return g;
}

struct LocalCurveData {
  LocalCurveCoeffs coeffs;
  RkCtx ring;
  RkElement disc;
  FPolynomial<RkElement> f;
};

LocalCurve::LocalCurve(const LocalCurveCoeffs& coeffs) {
  auto d = std::make_shared<LocalCurveData>();
  d->coeffs = coeffs;
  d->ring = coeffs.a1.ctx();
  for (const RkElement* a : {&coeffs.a2, &coeffs.a3, &coeffs.a4, &coeffs.a6})
    if (!a->ctx()->same(*d->ring)) raise(ErrorCode::ContextMismatch, "curve coefficients from different rings");
  d->disc = coeffs.discriminant();
  d->f.c = f_coefficients(coeffs, d->ring->k());
  d_ = d;
}

const LocalCurveCoeffs& LocalCurve::coeffs() const { return d_->coeffs; }
const RkCtx& LocalCurve::ring() const { return d_->ring; }
int LocalCurve::k() const { return d_->ring->k(); }
std::uint32_t LocalCurve::p() const { return d_->ring->p(); }
int LocalCurve::e() const { return d_->ring->field()->e(); }
std::uint32_t LocalCurve::q() const { return d_->ring->field()->q(); }
bool LocalCurve::is_elliptic() const { return d_->disc.is_unit(); }
RkElement LocalCurve::discriminant() const { return d_->disc; }
const FPolynomial<RkElement>& LocalCurve::f() const { return d_->f; }

InfinityPoint::InfinityPoint(LocalCurve curve, RkElement x, RkElement z)
    : curve_(std::move(curve)), x_(std::move(x)), z_(std::move(z)) {}

LocalPoint InfinityPoint::triple() const { return LocalPoint{x_, x_.one_like(), z_}; }

InfinityPoint point_from_x(const LocalCurve& curve, const RkElement& x) {
  if (!x.ctx()->same(*curve.ring())) raise(ErrorCode::ContextMismatch, "x from another ring");
  if (x.is_unit()) raise(ErrorCode::NotInMaximalIdeal, "x = " + x.str() + " is a unit");
  InfinityPoint P(curve, x, curve.f().eval(x));
  if (!on_curve(curve.coeffs(), P.triple()))
    raise(ErrorCode::InternalInvariantViolation, "point from f(x) is not on the curve");
  return P;
}

InfinityPoint infinity_identity(const LocalCurve& curve) {
  RkElement z = RkElement::zero(curve.ring());
  return InfinityPoint(curve, z, z);
}

InfinityPoint from_triple(const LocalCurve& curve, const LocalPoint& P) {
  LocalPoint N = normalize(P);
  if (!N.Y.is_unit() || N.Z.is_unit() || N.X.is_unit() || N.Y != N.Y.one_like())
    raise(ErrorCode::NotInMaximalIdeal, "point does not project to (0:1:0)");
  if (!on_curve(curve.coeffs(), N)) raise(ErrorCode::NotOnCurve, "triple is not on the curve");
  return InfinityPoint(curve, N.X, N.Z);
}

InfinityPoint inf_add(const InfinityPoint& P, const InfinityPoint& Q, AddCounter* counter) {
  LocalPoint S = add_inf(P.curve().coeffs(), P.triple(), Q.triple(), counter);
  return InfinityPoint(P.curve(), S.X, S.Z);
}

InfinityPoint inf_neg(const InfinityPoint& P) {
  LocalPoint N = normalize(negate(P.curve().coeffs(), P.triple()));
  return InfinityPoint(P.curve(), N.X, N.Z);
}

InfinityPoint inf_sub(const InfinityPoint& P, const InfinityPoint& Q, AddCounter* counter) {
  return inf_add(P, inf_neg(Q), counter);
}

InfinityPoint inf_mul(unsigned long long n, const InfinityPoint& P, AddCounter* counter) {
  if (n == 0) return infinity_identity(P.curve());
  int top = 63;
  while (!((n >> top) & 1)) --top;
  InfinityPoint acc = P;
  for (int b = top - 1; b >= 0; --b) {
    acc = inf_add(acc, acc, counter);
    if ((n >> b) & 1) acc = inf_add(acc, P, counter);
  }
  return acc;
}

unsigned long long inf_order(const InfinityPoint& P) {
  const unsigned long long p = P.curve().p();
  unsigned long long ord = 1;
  InfinityPoint T = P;
  while (!T.is_identity()) {
    T = inf_mul(p, T);
    if (ord > ~0ULL / p) raise(ErrorCode::TooLarge, "order exceeds 64 bits");
    ord *= p;
  }
  return ord;
}

std::vector<Nu> trajectory(const InfinityPoint& P) {
  std::vector<Nu> out;
  InfinityPoint T = P;
  const unsigned long long p = P.curve().p();
  while (!T.is_identity()) {
    out.push_back(T.nu());
    T = inf_mul(p, T);
  }
  return out;
}

}  // namespace ecloc
