#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecloc/error.hpp"
#include "ecloc/localring.hpp"

namespace ecloc {

// c*x by an addition chain, valid in any ring.
template <class R>
R mul_int(long long c, const R& x) {
  bool neg = c < 0;
  unsigned long long n = neg ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
  R acc = x.zero_like();
  R base = x;
  while (n) {
    if (n & 1) acc = acc + base;
    n >>= 1;
    if (n) base = base + base;
  }
  return neg ? -acc : acc;
}

// y^2 z + a1 xyz + a3 yz^2 = x^3 + a2 x^2 z + a4 xz^2 + a6 z^3
template <class R>
struct Curve {
  R a1, a2, a3, a4, a6;

  static Curve short_form(const R& A, const R& B) {
    R z = A.zero_like();
    return Curve{z, z, z, A, B};
  }
  bool is_short() const { return a1.is_zero() && a2.is_zero() && a3.is_zero(); }

  R b2() const { return a1 * a1 + mul_int(4, a2); }
  R b4() const { return mul_int(2, a4) + a1 * a3; }
  R b6() const { return a3 * a3 + mul_int(4, a6); }
  R b8() const { return a1 * a1 * a6 + mul_int(4, a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  R discriminant() const {
    R B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - mul_int(8, B4 * B4 * B4) - mul_int(27, B6 * B6) + mul_int(9, B2 * B4 * B6);
  }
  bool is_elliptic() const { return discriminant().is_unit(); }
};

template <class R>
struct Point {
  R X, Y, Z;
  bool operator==(const Point& o) const { return X == o.X && Y == o.Y && Z == o.Z; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

template <class R>
Point<R> identity_point(const Curve<R>& c) {
  R z = c.a1.zero_like();
  return Point<R>{z, c.a1.one_like(), z};
}

template <class R>
R curve_equation(const Curve<R>& c, const Point<R>& P) {
  const R &X = P.X, &Y = P.Y, &Z = P.Z;
  R XZ = X * Z, ZZ = Z * Z;
  R lhs = Y * Y * Z + c.a1 * X * Y * Z + c.a3 * Y * ZZ;
  R rhs = X * X * X + c.a2 * X * XZ + c.a4 * X * ZZ + c.a6 * ZZ * Z;
  return lhs - rhs;
}

template <class R>
bool on_curve(const Curve<R>& c, const Point<R>& P) {
  return curve_equation(c, P).is_zero();
}

template <class R>
bool is_primitive(const Point<R>& P) {
  return P.X.is_unit() || P.Y.is_unit() || P.Z.is_unit();
}

// Standard form: divide by Z when Z is a unit, else by Y.
template <class R>
Point<R> normalize(const Point<R>& P) {
  if (P.Z.is_unit()) {
    R inv = P.Z.inverse();
    return Point<R>{P.X * inv, P.Y * inv, P.Z.one_like()};
  }
  if (P.Y.is_unit()) {
    R inv = P.Y.inverse();
    return Point<R>{P.X * inv, P.Y.one_like(), P.Z * inv};
  }
  if (P.X.is_unit()) {
    R inv = P.X.inverse();
    return Point<R>{P.X.one_like(), P.Y * inv, P.Z * inv};
  }
  raise(ErrorCode::InternalInvariantViolation, "normalizing a non-primitive triple");
}

template <class R>
Point<R> negate(const Curve<R>& c, const Point<R>& P) {
  return Point<R>{P.X, -P.Y - c.a1 * P.X - c.a3 * P.Z, P.Z};
}

template <class R>
struct ShortSumParts {
  R g1, g2, H1, H2, H3, H4;
};

template <class R>
ShortSumParts<R> short_sum_parts(const Curve<R>& c, const Point<R>& P1, const Point<R>& P2) {
  const R &X1 = P1.X, &Y1 = P1.Y, &Z1 = P1.Z, &X2 = P2.X, &Y2 = P2.Y, &Z2 = P2.Z;
  const R &a1 = c.a1, &a2 = c.a2, &a3 = c.a3, &a4 = c.a4, &a6 = c.a6;
  R t = a1 * X1 + a3 * Z1 + Y1;
  ShortSumParts<R> s;
  s.g1 = X2 * t + X1 * Y2;
  s.g2 = Z2 * t + Z1 * Y2;

  R X1X2 = X1 * X2, X1Z2 = X1 * Z2, X2Z1 = X2 * Z1, Z1Z2 = Z1 * Z2;
  R X2Y1 = X2 * Y1, Y1Y2 = Y1 * Y2, Y1Z2 = Y1 * Z2;
  R a1a3 = a1 * a3, a3sq = a3 * a3, a6x3 = mul_int(3, a6);
  R cZZ = a1a3 * a4 - a2 * a3sq - a1 * a1 * a6 + a4 * a4 - mul_int(4, a2 * a6);

  s.H1 = Y1Y2 - a1a3 * X1Z2 - a3sq * Z1Z2 + a1 * X2Y1 - a2 * X1X2 - a4 * (X2Z1 + X1Z2) - a6x3 * Z1Z2;
  s.H2 = cZZ * Z1Z2 - a3sq * X1Z2 + a3 * X2Y1 - a4 * X1X2 - a6x3 * (X2Z1 + X1Z2);
  s.H3 = a1 * a1 * X1Z2 + a1a3 * Z1Z2 + a1 * Y1Z2 + a2 * (X2Z1 + X1Z2) + a4 * Z1Z2 + mul_int(3, X1X2);
  s.H4 = Y1Y2 + a1a3 * X1Z2 + a3sq * Z1Z2 + a2 * X1X2 + a3 * Y1Z2 + a4 * (X2Z1 + X1Z2) + a6x3 * Z1Z2;
  return s;
}

// The +_(0:1:0) law through the factored form (g1 H1 + g2 H2 : H1 H4 - H2 H3 : g1 H3 + g2 H4).
template <class R>
Point<R> law_010(const Curve<R>& c, const Point<R>& P1, const Point<R>& P2) {
  ShortSumParts<R> s = short_sum_parts(c, P1, P2);
  return Point<R>{s.g1 * s.H1 + s.g2 * s.H2, s.H1 * s.H4 - s.H2 * s.H3, s.g1 * s.H3 + s.g2 * s.H4};
}

// The +_(0:0:1) law, bidegree (2,2); exceptional exactly on the diagonal P1 = P2.
template <class R>
Point<R> law_001(const Curve<R>& c, const Point<R>& P1, const Point<R>& P2) {
  const R &X1 = P1.X, &Y1 = P1.Y, &Z1 = P1.Z, &X2 = P2.X, &Y2 = P2.Y, &Z2 = P2.Z;
  const R &a1 = c.a1, &a2 = c.a2, &a3 = c.a3, &a4 = c.a4, &a6 = c.a6;
  R XX1 = X1 * X1, XY1 = X1 * Y1, XZ1 = X1 * Z1, YY1 = Y1 * Y1, YZ1 = Y1 * Z1, ZZ1 = Z1 * Z1;
  R XX2 = X2 * X2, XY2 = X2 * Y2, XZ2 = X2 * Z2, YY2 = Y2 * Y2, YZ2 = Y2 * Z2, ZZ2 = Z2 * Z2;
  R a6x3 = mul_int(3, a6);
  R a1a2 = a1 * a2, a1sq_a2 = a1 * a1 + a2, a2a3_a1a4 = a2 * a3 - a1 * a4;
  R t13 = mul_int(2, a1 * a3 + a4), a3sq_6 = a3 * a3 + a6x3, a3a4_a1a6 = a3 * a4 - a1 * a6x3;
  R a3x3 = mul_int(3, a3);

  R X3 = XX1 * (a2 * XZ2 - a1 * YZ2 + a4 * ZZ2)
       - XY1 * (mul_int(2, YZ2) + a3 * ZZ2)
       + XZ1 * (a6x3 * ZZ2 - a2 * XX2 - YY2 - mul_int(2, a3 * YZ2))
       + YY1 * XZ2
       + YZ1 * (a1 * XX2 + mul_int(2, XY2) + mul_int(2, a3 * XZ2))
       + ZZ1 * (a3 * XY2 - a4 * XX2 - a6x3 * XZ2);
  R Z3 = -(XX1 * (mul_int(3, XZ2) + a2 * ZZ2))
       + XY1 * (a1 * ZZ2)
       + XZ1 * (mul_int(3, XX2) - a4 * ZZ2)
       + YY1 * ZZ2
       + YZ1 * (a3 * ZZ2)
       + ZZ1 * (a2 * XX2 - a1 * XY2 + a4 * XZ2 - YY2 - a3 * YZ2);
  R Y3 = XX1 * (mul_int(3, XY2) + (a3x3 - a1a2) * XZ2 + a1sq_a2 * YZ2 + a2a3_a1a4 * ZZ2)
       + XY1 * (mul_int(2, a1 * YZ2) - mul_int(3, XX2) - mul_int(2, a2 * XZ2) - a4 * ZZ2)
       + XZ1 * ((a1a2 - a3x3) * XX2 + mul_int(2, a2 * XY2) + t13 * YZ2 + a3a4_a1a6 * ZZ2)
       + YY1 * YZ2
       - YZ1 * (a1sq_a2 * XX2 + mul_int(2, a1 * XY2) + t13 * XZ2 + YY2 + a3sq_6 * ZZ2)
       + ZZ1 * (a4 * XY2 - a2a3_a1a4 * XX2 - a3a4_a1a6 * XZ2 + a3sq_6 * YZ2);
  return Point<R>{X3, Y3, Z3};
}

struct AddCounter {
  long long additions = 0;
};

// +_(0:1:0) followed by normalization; fails when the y-coordinate is not a unit.
template <class R>
Point<R> add_inf(const Curve<R>& c, const Point<R>& P1, const Point<R>& P2, AddCounter* counter = nullptr) {
  if (counter) ++counter->additions;
  Point<R> S = law_010(c, P1, P2);
  if (!S.Y.is_unit()) raise(ErrorCode::ExceptionalPair, "y-coordinate of the short sum is not a unit");
  return normalize(S);
}

template <class R>
Point<R> add_complete(const Curve<R>& c, const Point<R>& P1, const Point<R>& P2, AddCounter* counter = nullptr) {
  if (counter) ++counter->additions;
  Point<R> S = law_010(c, P1, P2);
  if (S.Y.is_unit()) return normalize(S);
  Point<R> T = law_001(c, P1, P2);
  if (is_primitive(T)) return normalize(T);
  if (is_primitive(S)) return normalize(S);
  raise(ErrorCode::InternalInvariantViolation, "neither addition law is valid for this pair");
}

template <class R>
Point<R> scalar_mul(const Curve<R>& c, unsigned long long n, const Point<R>& P, AddCounter* counter = nullptr) {
  Point<R> acc = identity_point(c);
  if (n == 0) return acc;
  int top = 63;
  while (!((n >> top) & 1)) --top;
  acc = P;
  for (int b = top - 1; b >= 0; --b) {
    acc = add_complete(c, acc, acc, counter);
    if ((n >> b) & 1) acc = add_complete(c, acc, P, counter);
  }
  return acc;
}

template <class R>
bool same_point(const Point<R>& P, const Point<R>& Q) {
  return normalize(P) == normalize(Q);
}

using LocalPoint = Point<RkElement>;
using LocalCurveCoeffs = Curve<RkElement>;

// Residue projection to E(F_q), represented over R_1.
LocalCurveCoeffs project_curve(const LocalCurveCoeffs& c);
LocalPoint project_point(const LocalCurveCoeffs& c, const LocalPoint& P);
// #E(F_q) for a curve over R_1 (or the projection of one over R_k).
std::uint64_t count_points_fq(const LocalCurveCoeffs& c);
// Every point of E(R_k) in standard form.
std::vector<LocalPoint> enumerate_points(const LocalCurveCoeffs& c);
RkElement project_element(const RkElement& r, const RkCtx& residue);

}  // namespace ecloc
