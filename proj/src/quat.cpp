#include "mixedwitt/quat.hpp"

#include "mixedwitt/errors.hpp"

namespace mixedwitt {

QuaternionAlgebra::QuaternionAlgebra(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_.field() == b_.field())) throw Error(ErrorKind::FieldMismatch, "algebra slots over different fields");
  if (a_.is_zero() || b_.is_zero()) throw Error(ErrorKind::ZeroSlot, "quaternion algebra slots must be nonzero");
}

Quaternion::Quaternion(QuaternionAlgebra algebra, std::array<FieldElement, 4> x)
    : algebra_(std::move(algebra)), x_(std::move(x)) {
  for (const auto& c : x_)
    if (!(c.field() == algebra_.field())) throw Error(ErrorKind::FieldMismatch, "quaternion coordinate from another field");
}

Quaternion Quaternion::scalar(const QuaternionAlgebra& algebra, const FieldElement& c) {
  FieldElement zero(algebra.field(), Rational(0));
  return Quaternion(algebra, {c, zero, zero, zero});
}

Quaternion Quaternion::of(const QuaternionAlgebra& algebra, const Rational& x0, const Rational& x1,
                          const Rational& x2, const Rational& x3) {
  const auto& F = algebra.field();
  return Quaternion(algebra, {FieldElement(F, x0), FieldElement(F, x1), FieldElement(F, x2), FieldElement(F, x3)});
}

bool Quaternion::is_zero() const {
  for (const auto& c : x_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

void require_same(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
  if (!(x == y)) throw Error(ErrorKind::AlgebraMismatch, "quaternions from different algebras");
}

}  // namespace

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  require_same(algebra_, rhs.algebra_);
  for (std::size_t i = 0; i < 4; ++i) x_[i] += rhs.x_[i];
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  require_same(x.algebra_, y.algebra_);
  const FieldElement& a = x.algebra_.a();
  const FieldElement& b = x.algebra_.b();
  const auto& [x0, x1, x2, x3] = x.x_;
  const auto& [y0, y1, y2, y3] = y.x_;
  // ij = k, jk = -b i, ki = -a j and their reversals.
  FieldElement z0 = x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3;
  FieldElement z1 = x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2;
  FieldElement z2 = x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1;
  FieldElement z3 = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
  return Quaternion(x.algebra_, {z0, z1, z2, z3});
}

Quaternion operator*(const FieldElement& c, const Quaternion& x) {
  Quaternion out = x;
  for (auto& v : out.x_) v = c * v;
  return out;
}

Quaternion Quaternion::operator-() const {
  Quaternion out = *this;
  for (auto& v : out.x_) v = -v;
  return out;
}

std::string Quaternion::to_string() const {
  std::string out;
  for (std::size_t u = 0; u < 4; ++u) {
    const FieldElement& c = x_[u];
    if (c.is_zero()) continue;
    std::string coeff;
    if (c.is_rational()) {
      const Rational r = c.rational_value();
      coeff = u > 0 && r == 1 ? "" : u > 0 && r == -1 ? "-" : rational_to_string(r);
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (!out.empty() && coeff.rfind('-', 0) != 0) out += "+";
    out += coeff;
    if (u > 0) out += static_cast<char>('i' + u - 1);
  }
  return out.empty() ? "0" : out;
}

Quaternion conj(const Quaternion& x) {
  const auto& c = x.coords();
  return Quaternion(x.algebra(), {c[0], -c[1], -c[2], -c[3]});
}

FieldElement trd(const Quaternion& x) { return x[0] * Rational(2); }

FieldElement nrd(const Quaternion& x) {
  const FieldElement& a = x.algebra().a();
  const FieldElement& b = x.algebra().b();
  return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

PureQuaternion::PureQuaternion(QuaternionAlgebra algebra, FieldElement x1, FieldElement x2, FieldElement x3)
    : q_(algebra, {FieldElement(algebra.field(), Rational(0)), std::move(x1), std::move(x2), std::move(x3)}) {}

PureQuaternion::PureQuaternion(const Quaternion& q) : q_(q) {
  if (!q.is_pure()) throw Error(ErrorKind::NotPure, q.to_string() + " has a nonzero scalar part");
}

PureQuaternion PureQuaternion::of(const QuaternionAlgebra& algebra, const Rational& x1, const Rational& x2,
                                  const Rational& x3) {
  return PureQuaternion(Quaternion::of(algebra, 0, x1, x2, x3));
}

FieldElement pure_square(const PureQuaternion& z) {
  const FieldElement& a = z.algebra().a();
  const FieldElement& b = z.algebra().b();
  return a * z[1] * z[1] + b * z[2] * z[2] - a * b * z[3] * z[3];
}

PureQuaternion anticommuting_unit(const PureQuaternion& z) {
  if (!z.is_invertible()) throw Error(ErrorKind::NotInvertible, z.to_string() + " is not invertible");
  const QuaternionAlgebra& Q = z.algebra();
  const NumberField& F = Q.field();
  // z z' + z' z = 2 (a x1 y1 + b x2 y2 - ab x3 y3): one linear condition on y.
  const std::array<FieldElement, 3> w = {Q.a() * z[1], Q.b() * z[2], -(Q.a() * Q.b()) * z[3]};
  std::size_t pivot = 0;
  while (w[pivot].is_zero()) ++pivot;
  const FieldElement zero(F, Rational(0)), one(F, Rational(1));
  std::vector<std::array<FieldElement, 3>> basis;
  for (std::size_t q = 0; q < 3; ++q) {
    if (q == pivot) continue;
    std::array<FieldElement, 3> v = {zero, zero, zero};
    v[q] = one;
    v[pivot] = -(w[q] / w[pivot]);
    basis.push_back(v);
  }
  auto make = [&](const std::array<FieldElement, 3>& v) { return PureQuaternion(Q, v[0], v[1], v[2]); };
  const PureQuaternion b1 = make(basis[0]), b2 = make(basis[1]);
  // z-perp is a nondegenerate plane, so if both basis vectors are isotropic
  // their sum is not.
  for (const PureQuaternion& candidate :
       {b1, b2, PureQuaternion(b1.quaternion() + b2.quaternion()), PureQuaternion(b1.quaternion() + (-b2.quaternion()))})
    if (candidate.is_invertible()) return candidate;
  throw Error(ErrorKind::NoAnisotropicVector, "orthogonal plane of " + z.to_string() + " is totally isotropic");
}

FieldElement symbol_slot(const PureQuaternion& z) { return pure_square(anticommuting_unit(z)); }

}  // namespace mixedwitt
