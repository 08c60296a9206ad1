#include "mixedwitt/mixed.hpp"

#include "mixedwitt/errors.hpp"

namespace mixedwitt {

namespace {

void require_same(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
  if (!(x == y)) throw Error(ErrorKind::AlgebraMismatch, "elements over different quaternion algebras");
}

void require_field(const NumberField& a, const NumberField& b) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, "elements over different fields");
}

}  // namespace

HermitianDiagonal::HermitianDiagonal(QuaternionAlgebra algebra, std::vector<FieldElement> entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    require_field(e.field(), algebra_.field());
    if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "hermitian diagonal entries must be nonzero");
  }
}

SkewHermitianDiagonal::SkewHermitianDiagonal(QuaternionAlgebra algebra, std::vector<PureQuaternion> entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries)) {
  for (const auto& z : entries_) {
    require_same(z.algebra(), algebra_);
    if (!z.is_invertible()) throw Error(ErrorKind::NotInvertible, z.to_string() + " is not invertible");
  }
}

MixedElement::MixedElement(const QuaternionAlgebra& algebra)
    : scalar_(algebra.field()), herm_(algebra), skew_(algebra) {}

MixedElement::MixedElement(QuadraticForm scalar, HermitianDiagonal herm, SkewHermitianDiagonal skew)
    : scalar_(std::move(scalar)), herm_(std::move(herm)), skew_(std::move(skew)) {
  require_same(herm_.algebra(), skew_.algebra());
  require_field(scalar_.field(), herm_.algebra().field());
}

MixedElement MixedElement::from_scalar(const QuaternionAlgebra& algebra, QuadraticForm q) {
  return MixedElement(std::move(q), HermitianDiagonal(algebra), SkewHermitianDiagonal(algebra));
}

MixedElement MixedElement::from_herm(HermitianDiagonal h) {
  QuaternionAlgebra Q = h.algebra();
  return MixedElement(QuadraticForm(Q.field()), std::move(h), SkewHermitianDiagonal(Q));
}

MixedElement MixedElement::from_skew(SkewHermitianDiagonal s) {
  QuaternionAlgebra Q = s.algebra();
  return MixedElement(QuadraticForm(Q.field()), HermitianDiagonal(Q), std::move(s));
}

MixedElement mixed_add(const MixedElement& x, const MixedElement& y) {
  require_same(x.algebra(), y.algebra());
  std::vector<FieldElement> h = x.herm().entries();
  h.insert(h.end(), y.herm().entries().begin(), y.herm().entries().end());
  std::vector<PureQuaternion> s = x.skew().entries();
  s.insert(s.end(), y.skew().entries().begin(), y.skew().entries().end());
  return MixedElement(sum(x.scalar(), y.scalar()), HermitianDiagonal(x.algebra(), std::move(h)),
                      SkewHermitianDiagonal(x.algebra(), std::move(s)));
}

MixedElement module_action(const QuadraticForm& q, const MixedElement& x) {
  require_field(q.field(), x.algebra().field());
  std::vector<FieldElement> h;
  std::vector<PureQuaternion> s;
  for (const auto& c : q.entries()) {
    for (const auto& a : x.herm().entries()) h.push_back(c * a);
    for (const auto& z : x.skew().entries()) s.push_back(c * z);
  }
  return MixedElement(tensor(q, x.scalar()), HermitianDiagonal(x.algebra(), std::move(h)),
                      SkewHermitianDiagonal(x.algebra(), std::move(s)));
}

QuaternionSymbol phi_symbol(const PureQuaternion& z1, const PureQuaternion& z2) {
  require_same(z1.algebra(), z2.algebra());
  if (!z1.is_invertible() || !z2.is_invertible())
    throw Error(ErrorKind::NotInvertible, "phi needs invertible pure quaternions");
  return QuaternionSymbol(pure_square(z1), pure_square(z2) * symbol_slot(z1));
}

QuadraticForm pfister_phi(const PureQuaternion& z1, const PureQuaternion& z2) {
  return norm_form(phi_symbol(z1, z2));
}

QuadraticForm skew_product(const PureQuaternion& z1, const PureQuaternion& z2) {
  require_same(z1.algebra(), z2.algebra());
  const FieldElement t = trd(z1.quaternion() * z2.quaternion());
  if (t.is_zero()) return QuadraticForm(z1.algebra().field());
  return scale(pfister_phi(z1, z2), -t);
}

QuadraticForm herm_product(const FieldElement& a, const FieldElement& b, const QuaternionAlgebra& algebra) {
  return scale(algebra.norm_form(), a * b * Rational(2));
}

MixedElement mixed_mul(const MixedElement& x, const MixedElement& y) {
  require_same(x.algebra(), y.algebra());
  const QuaternionAlgebra& Q = x.algebra();
  // Scalar . anything is the module action; herm . skew vanishes.
  MixedElement out = module_action(x.scalar(), y);
  const MixedElement xr(QuadraticForm(Q.field()), x.herm(), x.skew());
  out = mixed_add(out, module_action(y.scalar(), xr));
  QuadraticForm extra(Q.field());
  for (const auto& a : x.herm().entries())
    for (const auto& b : y.herm().entries()) extra = sum(extra, herm_product(a, b, Q));
  for (const auto& z1 : x.skew().entries())
    for (const auto& z2 : y.skew().entries()) extra = sum(extra, skew_product(z1, z2));
  return mixed_add(out, MixedElement::from_scalar(Q, std::move(extra)));
}

int rdim2(const MixedElement& x) { return static_cast<int>(x.scalar().dim() % 2); }

QuadraticForm trace_form(const QuaternionAlgebra& algebra) {
  const FieldElement one(algebra.field(), Rational(1));
  return herm_product(one, one, algebra);
}

SplitMixedElement::SplitMixedElement(QuadraticForm even_, QuadraticForm odd_)
    : even(std::move(even_)), odd(std::move(odd_)) {
  require_field(even.field(), odd.field());
}

SplitMixedElement split_add(const SplitMixedElement& u, const SplitMixedElement& v) {
  return {sum(u.even, v.even), sum(u.odd, v.odd)};
}

SplitMixedElement split_mul(const SplitMixedElement& u, const SplitMixedElement& v) {
  return {sum(tensor(u.even, v.even), tensor(u.odd, v.odd)), sum(tensor(u.even, v.odd), tensor(u.odd, v.even))};
}

QuadraticForm split_augment(const SplitMixedElement& u) { return sum(u.even, u.odd); }

}  // namespace mixedwitt
