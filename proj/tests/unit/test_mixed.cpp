#include <doctest.h>

#include "mixedwitt/errors.hpp"
#include "testkit.hpp"

using namespace mixedwitt;
using testkit::Gen;

namespace {

QuaternionAlgebra over_q(long a, long b) { return QuaternionAlgebra(NumberField::rationals(), a, b); }

FieldElement c(const NumberField& F, long v) { return FieldElement(F, v); }

MixedElement herm1(const QuaternionAlgebra& A, long a) {
  return MixedElement::from_herm(HermitianDiagonal(A, {c(A.field(), a)}));
}

MixedElement skew1(const PureQuaternion& z) { return MixedElement::from_skew(SkewHermitianDiagonal(z.algebra(), {z})); }

bool same_representation(const MixedElement& x, const MixedElement& y) {
  if (!(x.scalar() == y.scalar())) return false;
  if (x.herm().entries() != y.herm().entries()) return false;
  return x.skew().entries() == y.skew().entries();
}

void check_same_signatures(const MixedElement& x, const MixedElement& y, const ReferencePolicy& refs) {
  for (const auto& P : x.algebra().field().orderings()) CHECK(signature_pair(x, P, refs) == signature_pair(y, P, refs));
}

}  // namespace

TEST_CASE("mixed_add examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  const PureQuaternion i = PureQuaternion::of(H, 1, 0, 0);
  const MixedElement x(QuadraticForm::of(Q, {1}), HermitianDiagonal(H, {c(Q, 1)}), SkewHermitianDiagonal(H));
  const MixedElement y(QuadraticForm(Q), HermitianDiagonal(H, {c(Q, -1)}), SkewHermitianDiagonal(H, {i}));
  const MixedElement s = mixed_add(x, y);
  CHECK(s.scalar() == QuadraticForm::of(Q, {1}));
  CHECK(s.herm().entries() == std::vector<FieldElement>{c(Q, 1), c(Q, -1)});
  CHECK(s.skew().entries() == std::vector<PureQuaternion>{i});
  CHECK(same_representation(mixed_add(x, MixedElement(H)), x));
  const MixedElement d = mixed_add(s, s);
  CHECK(d.scalar().dim() == 2);
  CHECK(d.herm().size() == 4);
  CHECK(d.skew().size() == 2);
  try {
    mixed_add(x, MixedElement(over_q(-1, 3)));
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlgebraMismatch);
  }
}

TEST_CASE("module_action examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  const PureQuaternion i = PureQuaternion::of(H, 1, 0, 0);
  Gen g(51);
  const MixedElement x = g.mixed(H);
  CHECK(same_representation(module_action(QuadraticForm::of(Q, {1}), x), x));
  CHECK(module_action(QuadraticForm::of(Q, {-1}), herm1(H, 1)).herm().entries() == std::vector<FieldElement>{c(Q, -1)});
  CHECK(module_action(QuadraticForm::of(Q, {1, 1}), skew1(i)).skew().entries() == std::vector<PureQuaternion>{i, i});
  CHECK_THROWS_AS(module_action(QuadraticForm::of(testkit::field_sqrt2(), {1}), x), Error);
}

TEST_CASE("pfister_phi examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  const PureQuaternion iH = PureQuaternion::of(H, 1, 0, 0), jH = PureQuaternion::of(H, 0, 1, 0);
  // <<-1, 1>> is hyperbolic.
  CHECK(witt_equal_rational(pfister_phi(iH, iH), QuadraticForm(Q)));
  const QuaternionAlgebra B = over_q(-1, 3);
  const PureQuaternion iB = PureQuaternion::of(B, 1, 0, 0);
  CHECK(pfister_phi(iB, iB) == pfister(Q, std::vector<FieldElement>{c(Q, -1), c(Q, -3)}));
  CHECK(witt_equal_rational(pfister_phi(iB, iB), QuadraticForm::of(Q, {1, 1, 3, 3})));
  CHECK(pfister_phi(iH, jH).dim() == 4);
  CHECK(mixed_mul(skew1(iH), skew1(jH)).is_zero_representation());
}

TEST_CASE("mixed_mul examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  const MixedElement hh = mixed_mul(herm1(H, 1), herm1(H, 1));
  CHECK(hh.scalar() == QuadraticForm::of(Q, {2, 2, 2, 2}));
  CHECK(hh.herm().empty());
  CHECK(hh.skew().empty());
  CHECK(mixed_mul(skew1(PureQuaternion::of(H, 1, 0, 0)), skew1(PureQuaternion::of(H, 0, 1, 0))).is_zero_representation());

  const QuaternionAlgebra B = over_q(-1, 3);
  const MixedElement ii = mixed_mul(skew1(PureQuaternion::of(B, 1, 0, 0)), skew1(PureQuaternion::of(B, 1, 0, 0)));
  CHECK(witt_equal_rational(ii.scalar(), QuadraticForm::of(Q, {2, 2, 6, 6})));
  CHECK(signature(ii.scalar(), Q.ordering(0)) == 4);
  CHECK(skew_product(PureQuaternion::of(B, 1, 0, 0), PureQuaternion::of(B, 1, 0, 0)) == ii.scalar());
  CHECK(herm_product(c(Q, 1), c(Q, 1), H) == QuadraticForm::of(Q, {2, 2, 2, 2}));
}

TEST_CASE("rdim2 examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  CHECK(rdim2(MixedElement::from_scalar(H, QuadraticForm::of(Q, {1}))) == 1);
  CHECK(rdim2(herm1(H, 1)) == 0);
  const MixedElement x(QuadraticForm::of(Q, {1, 1}), HermitianDiagonal(H, {c(Q, 1)}),
                       SkewHermitianDiagonal(H, {PureQuaternion::of(H, 1, 0, 0)}));
  CHECK(rdim2(x) == 0);
  CHECK(rdim2(MixedElement(H)) == 0);
}

TEST_CASE("trace_form examples") {
  const NumberField Q = NumberField::rationals();
  const QuadraticForm tH = trace_form(over_q(-1, -1));
  CHECK(tH == QuadraticForm::of(Q, {2, 2, 2, 2}));
  CHECK(signature(tH, Q.ordering(0)) == 4);
  const QuadraticForm t11 = trace_form(over_q(1, 1));
  CHECK(t11 == QuadraticForm::of(Q, {2, -2, -2, 2}));
  CHECK(witt_equal_rational(t11, QuadraticForm(Q)));
  const NumberField K = testkit::field_sqrt2();
  const QuaternionAlgebra A(c(K, -1), FieldElement::generator(K));
  const QuadraticForm tA = trace_form(A);
  CHECK(signature(tA, K.ordering(0)) == 4);
  CHECK(signature(tA, K.ordering(1)) == 0);
}

TEST_CASE("split model examples") {
  const NumberField Q = NumberField::rationals();
  const QuadraticForm one = QuadraticForm::of(Q, {1}), zero(Q);
  const SplitMixedElement e(QuadraticForm::of(Q, {2, 3}), QuadraticForm::of(Q, {-1}));
  const SplitMixedElement p = split_mul(SplitMixedElement(one, zero), e);
  CHECK(p.even == e.even);
  CHECK(p.odd == e.odd);
  const SplitMixedElement sq = split_mul(SplitMixedElement(zero, one), SplitMixedElement(zero, one));
  CHECK(sq.even == one);
  CHECK(sq.odd.empty());
  const QuadraticForm aug = split_augment(SplitMixedElement(one, one));
  CHECK(aug == QuadraticForm::of(Q, {1, 1}));
  CHECK(signature(aug, Q.ordering(0)) == 2);
  const SplitMixedElement s = split_add(e, e);
  CHECK(s.even.dim() == 4);
  CHECK(s.odd.dim() == 2);
  CHECK_THROWS_AS(SplitMixedElement(one, QuadraticForm::of(testkit::field_sqrt2(), {1})), Error);
}

TEST_CASE("property: herm times skew vanishes") {
  Gen g(52);
  for (const auto& [name, A] : testkit::test_algebras()) {
    for (int trial = 0; trial < 30; ++trial) {
      const MixedElement h = MixedElement::from_herm(g.herm(A));
      const MixedElement s = MixedElement::from_skew(g.skew(A));
      CHECK(mixed_mul(h, s).is_zero_representation());
      CHECK(mixed_mul(s, h).is_zero_representation());
    }
  }
}

TEST_CASE("property: products are commutative and associative at signature level") {
  Gen g(53);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
    for (int trial = 0; trial < 12; ++trial) {
      const MixedElement x = g.mixed(A), y = g.mixed(A), z = g.mixed(A);
      check_same_signatures(mixed_mul(x, y), mixed_mul(y, x), refs);
      check_same_signatures(mixed_mul(x, mixed_mul(y, z)), mixed_mul(mixed_mul(x, y), z), refs);
      if (A.field().is_rational()) {
        // Products of two non-scalar parts land in W(K), so the scalar parts
        // can be compared as Witt classes.
        const MixedElement hx = MixedElement::from_herm(x.herm()), hy = MixedElement::from_herm(y.herm());
        CHECK(witt_equal_rational(mixed_mul(hx, hy).scalar(), mixed_mul(hy, hx).scalar()));
        const MixedElement sx = MixedElement::from_skew(x.skew()), sy = MixedElement::from_skew(y.skew());
        CHECK(witt_equal_rational(mixed_mul(sx, sy).scalar(), mixed_mul(sy, sx).scalar()));
      }
    }
  }
}

TEST_CASE("property: e2 contract and symmetry of phi") {
  Gen g(54);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const NumberField& F = A.field();
    for (int trial = 0; trial < 25; ++trial) {
      const PureQuaternion z1 = g.pure(A), z2 = g.pure(A);
      const QuadraticForm p12 = pfister_phi(z1, z2), p21 = pfister_phi(z2, z1);
      CHECK(weak_equivalence(p12, p21) == WeakVerdict::EquivalentWeakly);
      if (!F.is_rational()) continue;
      CHECK(witt_equal_rational(p12, p21));
      const QuaternionSymbol s = phi_symbol(z1, z2);
      const BrauerClass2 target(F, {QuaternionSymbol(pure_square(z1), pure_square(z2)), A.symbol()});
      CHECK(class_equal_rational(BrauerClass2(F, {s}), target));
    }
  }
}

TEST_CASE("property: anticommuting pure quaternions multiply to zero") {
  Gen g(55);
  for (const auto& [name, A] : testkit::test_algebras()) {
    for (int trial = 0; trial < 20; ++trial) {
      const PureQuaternion z = g.pure(A);
      const PureQuaternion w = anticommuting_unit(z);
      CHECK(trd(z.quaternion() * w.quaternion()).is_zero());
      CHECK(mixed_mul(skew1(z), skew1(w)).is_zero_representation());
    }
  }
}

TEST_CASE("property: augmentation is a ring morphism") {
  Gen g(56);
  const NumberField Q = NumberField::rationals();
  for (int trial = 0; trial < 60; ++trial) {
    const SplitMixedElement u(g.form(Q, 2), g.form(Q, 2)), v(g.form(Q, 2), g.form(Q, 2));
    CHECK(witt_equal_rational(split_augment(split_mul(u, v)), tensor(split_augment(u), split_augment(v))));
    CHECK(witt_equal_rational(split_augment(split_add(u, v)), sum(split_augment(u), split_augment(v))));
  }
}

TEST_CASE("property: rdim2 is a ring morphism") {
  Gen g(57);
  for (const auto& [name, A] : testkit::test_algebras()) {
    for (int trial = 0; trial < 30; ++trial) {
      const MixedElement x = g.mixed(A), y = g.mixed(A);
      CHECK(rdim2(mixed_mul(x, y)) == rdim2(x) * rdim2(y));
      CHECK(rdim2(mixed_add(x, y)) == (rdim2(x) + rdim2(y)) % 2);
      CHECK(rdim2(x) == static_cast<int>(x.scalar().dim() % 2));
    }
  }
}
