#include <doctest.h>

#include <algorithm>
#include <set>

#include "mixedwitt/errors.hpp"
#include "testkit.hpp"

using namespace mixedwitt;
using testkit::Gen;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

QuaternionAlgebra over_q(long a, long b) { return QuaternionAlgebra(NumberField::rationals(), a, b); }

QuaternionAlgebra minus_one_theta() {
  const NumberField K = testkit::field_sqrt2();
  return QuaternionAlgebra(FieldElement(K, -1L), FieldElement::generator(K));
}

MixedElement herm(const QuaternionAlgebra& A, std::initializer_list<long> es) {
  std::vector<FieldElement> v;
  for (long e : es) v.emplace_back(A.field(), e);
  return MixedElement::from_herm(HermitianDiagonal(A, std::move(v)));
}

MixedElement skew1(const PureQuaternion& z) { return MixedElement::from_skew(SkewHermitianDiagonal(z.algebra(), {z})); }

MixedElement scalar(const QuaternionAlgebra& A, std::initializer_list<Rational> es) {
  return MixedElement::from_scalar(A, QuadraticForm::of(A.field(), es));
}

std::vector<std::size_t> indices(const std::vector<Ordering>& Ps) {
  std::vector<std::size_t> out;
  for (const auto& P : Ps) out.push_back(P.index());
  return out;
}

PolarizationMap pmap(std::map<std::size_t, int> labels) { return PolarizationMap(std::move(labels)); }

int mod(int v, int m) { return ((v % m) + m) % m; }

}  // namespace

TEST_CASE("partition_orderings examples") {
  const OrderingPartition h = partition_orderings(over_q(-1, -1));
  CHECK(h.x_plus.empty());
  CHECK(h.x_minus.size() == 1);
  const OrderingPartition s = partition_orderings(over_q(1, 1));
  CHECK(s.x_plus.size() == 1);
  CHECK(s.x_minus.empty());
  const QuaternionAlgebra A = minus_one_theta();
  const OrderingPartition m = partition_orderings(A);
  CHECK(indices(m.x_minus) == std::vector<std::size_t>{0});
  CHECK(indices(m.x_plus) == std::vector<std::size_t>{1});
  CHECK(m.stratum_of(A.field().ordering(0)) == Stratum::Nonsplit);
  CHECK(stratum(A, A.field().ordering(1)) == Stratum::Split);
}

TEST_CASE("herm_signature_nonsplit examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const Ordering R = H.field().ordering(0);
  CHECK(herm_signature_nonsplit(HermitianDiagonal(H, {FieldElement(H.field(), 1L)}), R) == 2);
  CHECK(herm_signature_nonsplit(herm(H, {1, -1}).herm(), R) == 0);
  CHECK(herm_signature_nonsplit(herm(H, {1, 1, 1}).herm(), R) == 6);
  const QuaternionAlgebra B = over_q(-1, 3);
  CHECK(kind_of([&] { herm_signature_nonsplit(herm(B, {1}).herm(), B.field().ordering(0)); }) ==
        ErrorKind::WrongStratum);
}

TEST_CASE("skew_signature_with_reference examples") {
  const QuaternionAlgebra B = over_q(-1, 3);
  const Ordering R = B.field().ordering(0);
  const PureQuaternion i = PureQuaternion::of(B, 1, 0, 0), j = PureQuaternion::of(B, 0, 1, 0);
  auto sig = [&](const PureQuaternion& z, const PureQuaternion& ref) {
    return skew_signature_with_reference(SkewHermitianDiagonal(B, {z}), R, ref);
  };
  CHECK(sig(i, i) == 2);
  CHECK(sig(-i, i) == -2);
  CHECK(sig(j, i) == 0);
  CHECK(sig(PureQuaternion::of(B, 2, 1, 0), PureQuaternion::of(B, 2, 1, 0)) == 2);
  // Oracle for the -i value: <-Trd(i . -i)> phi(i,-i) = <-2><1,1,3,3> has signature -4.
  CHECK(signature(skew_product(i, -i), R) == -4);
  CHECK(kind_of([&] { sig(i, j); }) == ErrorKind::DegenerateReference);
  const QuaternionAlgebra H = over_q(-1, -1);
  const PureQuaternion iH = PureQuaternion::of(H, 1, 0, 0);
  CHECK(kind_of([&] { skew_signature_with_reference(SkewHermitianDiagonal(H, {iH}), H.field().ordering(0), iH); }) ==
        ErrorKind::WrongStratum);
  // A rank-two reference normalizes by its own magnitude.
  const SkewHermitianDiagonal ii(B, {i, i});
  CHECK(reference_magnitude(ii, R) == 4);
  CHECK(skew_signature_with_reference(SkewHermitianDiagonal(B, {i}), R, ii) == 2);
}

TEST_CASE("signature_pair examples") {
  const QuaternionAlgebra H = over_q(-1, -1), B = over_q(-1, 3);
  for (const auto& A : {H, B, minus_one_theta()}) {
    for (const auto& P : A.field().orderings()) CHECK(signature_pair(scalar(A, {1, 1}), P) == SignaturePair{2, 2});
  }
  CHECK(signature_pair(herm(H, {1}), H.field().ordering(0)) == SignaturePair{2, -2});
  CHECK(signature_pair(herm(B, {1}), B.field().ordering(0)) == SignaturePair{0, 0});
  const PureQuaternion i = PureQuaternion::of(B, 1, 0, 0);
  CHECK(kind_of([&] { signature_pair(skew1(i), B.field().ordering(0)); }) == ErrorKind::MissingReference);
  CHECK(signature_pair(skew1(i), B.field().ordering(0), ReferencePolicy::single(i)) == SignaturePair{2, -2});
}

TEST_CASE("ReferencePolicy lookup") {
  const QuaternionAlgebra A = minus_one_theta();
  const Ordering P0 = A.field().ordering(0), P1 = A.field().ordering(1);
  CHECK(ReferencePolicy().at(P1) == nullptr);
  const SkewHermitianDiagonal r(A, {PureQuaternion::of(A, 1, 0, 0)});
  const ReferencePolicy g = ReferencePolicy::global(r);
  REQUIRE(g.at(P1) != nullptr);
  CHECK(g.at(P1)->entries() == r.entries());
  const ReferencePolicy per = ReferencePolicy::per_ordering({{1, r}});
  CHECK(per.at(P0) == nullptr);
  CHECK(per.at(P1) != nullptr);
  const ReferencePolicy local = ReferencePolicy::local_search(A);
  REQUIRE(local.at(P1) != nullptr);
  CHECK(reference_magnitude(*local.at(P1), P1) == 2);
}

TEST_CASE("principal_set examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  CHECK(indices(principal_set(herm(H, {1}))) == std::vector<std::size_t>{0});
  CHECK(principal_set(scalar(H, {1, 2, 3})).empty());
  const QuaternionAlgebra A = minus_one_theta();
  CHECK(indices(principal_set(herm(A, {1}))) == std::vector<std::size_t>{0});
}

TEST_CASE("find_reference examples") {
  const QuaternionAlgebra B = over_q(-1, 3);
  const ReferenceForm rB = find_reference(B);
  CHECK(rB.form.entries() == std::vector<PureQuaternion>{PureQuaternion::of(B, 1, 0, 0)});
  CHECK(rB.nonzero_set == std::vector<std::size_t>{0});

  const QuaternionAlgebra S = over_q(1, 1);
  const ReferenceForm rS = find_reference(S);
  REQUIRE(rS.form.size() == 1);
  const PureQuaternion& z = rS.form.entries()[0];
  CHECK(z == PureQuaternion::of(S, 0, 0, 1));
  CHECK(sign_at(pure_square(z), S.field().ordering(0)) < 0);
  CHECK(z.is_invertible());

  const ReferenceForm rH = find_reference(over_q(-1, -1));
  CHECK(rH.form.empty());
  CHECK(rH.nonzero_set.empty());

  CHECK(kind_of([&] { find_reference(B, 0); }) == ErrorKind::SearchBudgetExceeded);
  CHECK(kind_of([&] { find_reference(S, 2); }) == ErrorKind::SearchBudgetExceeded);
}

TEST_CASE("principal_polarization examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  CHECK(principal_polarization(herm(H, {1})) == pmap({{0, 1}}));
  CHECK(principal_polarization(herm(H, {-1})) == pmap({{0, -1}}));
  CHECK(principal_polarization(scalar(H, {1})).empty());
}

TEST_CASE("total_signature examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const PolarizationMap plus = pmap({{0, 1}}), minus = pmap({{0, -1}});
  CHECK(total_signature(scalar(H, {1, 1, -3}), plus) == std::map<std::size_t, int>{{0, 1}});
  CHECK(total_signature(scalar(H, {1, 1, -3}), minus) == std::map<std::size_t, int>{{0, 1}});
  CHECK(total_signature(herm(H, {1}), plus) == std::map<std::size_t, int>{{0, 2}});
  CHECK(total_signature(herm(H, {1}), minus) == std::map<std::size_t, int>{{0, -2}});
  const QuaternionAlgebra A = minus_one_theta();
  CHECK(kind_of([&] { total_signature(herm(A, {1}), pmap({{0, 1}})); }) ==
        ErrorKind::PartialPolarization);
}

TEST_CASE("act_on_polarization examples") {
  const PolarizationMap pol = pmap({{0, 1}, {1, -1}, {2, 1}});
  CHECK(act_on_polarization({{0, 1}, {1, 1}, {2, 1}}, pol) == pol);
  CHECK(act_on_polarization({{0, -1}, {1, -1}, {2, -1}}, pol) == pol.opposite());
  const PolarizationMap one = act_on_polarization({{0, 1}, {1, -1}, {2, 1}}, pol);
  CHECK(one == pmap({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(kind_of([&] { act_on_polarization({{0, 1}}, pol); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("PolarizationMap operations") {
  PolarizationMap p;
  p.set(0, 1);
  CHECK(p.at(0) == 1);
  CHECK_FALSE(p.at(1).has_value());
  CHECK(kind_of([&] { p.set(1, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { p.merged_with(pmap({{0, -1}})); }) == ErrorKind::DomainMismatch);
  const PolarizationMap m = p.merged_with(pmap({{1, -1}}));
  CHECK(m.is_global(testkit::field_sqrt2()));
  CHECK_FALSE(p.is_global(testkit::field_sqrt2()));
}

TEST_CASE("standard_automorphism examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const NumberField& Q = H.field();
  Gen g(61);
  const MixedElement x = g.mixed(H);
  const MixedElement y = standard_automorphism(FieldElement(Q, 1L), x);
  CHECK(signature_pair(y, Q.ordering(0)) == signature_pair(x, Q.ordering(0)));
  CHECK(y.herm().entries() == x.herm().entries());
  CHECK(signature_pair(standard_automorphism(FieldElement(Q, -1L), herm(H, {1})), Q.ordering(0)) ==
        SignaturePair{-2, 2});
  const NumberField K = testkit::field_sqrt2();
  CHECK(swap_set(FieldElement::generator(K)) == std::vector<std::size_t>{0});
  CHECK(swap_set(FieldElement(K, 3L)).empty());
  CHECK(kind_of([&] { standard_automorphism(FieldElement(Q, 0L), x); }) == ErrorKind::ZeroElement);
}

TEST_CASE("ideal_membership examples") {
  const QuaternionAlgebra H = over_q(-1, -1);
  const auto fund = SpectrumLabel::fundamental();
  for (int eta : {1, -1}) {
    for (long p : {0L, 3L, 5L}) CHECK(ideal_membership(scalar(H, {1, -1}), SpectrumLabel::signature(0, p, eta)));
    CHECK_FALSE(ideal_membership(scalar(H, {1}), SpectrumLabel::signature(0, 0, eta)));
    CHECK(ideal_membership(scalar(H, {1, 1, 1}), SpectrumLabel::signature(0, 3, eta)));
    CHECK_FALSE(ideal_membership(scalar(H, {1, 1, 1}), SpectrumLabel::signature(0, 0, eta)));
  }
  CHECK(ideal_membership(scalar(H, {1, -1}), fund));
  CHECK_FALSE(ideal_membership(scalar(H, {1}), fund));
  CHECK(kind_of([] { SpectrumLabel::signature(0, 2, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SpectrumLabel::signature(0, 9, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SpectrumLabel::signature(0, 3, 0); }) == ErrorKind::InvalidArgument);
  CHECK(SpectrumLabel::signature(0, 3, 1).to_string() == "I[P=0,p=3,eta=+1]");
  CHECK(fund.to_string() == "I");
}

TEST_CASE("spectrum_report examples") {
  const SpectrumReport r = spectrum_report(over_q(-1, -1), {3});
  CHECK(r.labels.size() == 5);
  CHECK(r.labels[0].kind == SpectrumLabel::Kind::Fundamental);
  std::set<std::string> names;
  for (const auto& l : r.labels) names.insert(l.to_string());
  CHECK(names == std::set<std::string>{"I", "I[P=0,p=0,eta=+1]", "I[P=0,p=0,eta=-1]", "I[P=0,p=3,eta=+1]",
                                       "I[P=0,p=3,eta=-1]"});
  CHECK(r.xtilde.size() == 2);
  CHECK(r.fundamental_fiber == 1);
  for (const auto& [label, size] : r.fibers) CHECK(size == 2);

  const NumberField G = NumberField::make(parse_polynomial("t^2+1"));
  const SpectrumReport rg = spectrum_report(QuaternionAlgebra(G, -1, -1), {3, 5});
  CHECK(rg.labels.size() == 1);
  CHECK(rg.xtilde.empty());

  const SpectrumReport rk = spectrum_report(minus_one_theta(), {});
  CHECK(rk.xtilde.size() == 4);
  CHECK(rk.labels.size() == 5);
  CHECK(kind_of([] { spectrum_report(over_q(-1, -1), {2}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { spectrum_report(over_q(-1, -1), {15}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cover_union and global assembly") {
  const QuaternionAlgebra A = minus_one_theta();
  const ReferenceForm ref = find_reference(A);
  const ReferencePolicy refs = ReferencePolicy::global(ref.form);
  const MixedElement split_cover = MixedElement::from_skew(ref.form), nonsplit_cover = herm(A, {1});
  const PolarizationMap pol = assemble_global_polarization(split_cover, nonsplit_cover, refs);
  CHECK(pol.is_global(A.field()));
  CHECK(kind_of([&] { assemble_global_polarization(nonsplit_cover, nonsplit_cover, refs); }) ==
        ErrorKind::PartialPolarization);

  const auto u = cover_union(split_cover, nonsplit_cover, refs);
  REQUIRE(u.has_value());
  CHECK(principal_set(*u, refs).size() == 2);
}

TEST_CASE("property: signatures are ring morphisms") {
  Gen g(62);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
    for (int trial = 0; trial < 25; ++trial) {
      const MixedElement x = g.mixed(A), y = g.mixed(A);
      for (const auto& P : A.field().orderings()) {
        const SignaturePair sx = signature_pair(x, P, refs), sy = signature_pair(y, P, refs);
        const SignaturePair ssum = signature_pair(mixed_add(x, y), P, refs);
        const SignaturePair sprod = signature_pair(mixed_mul(x, y), P, refs);
        for (int eta : {1, -1}) {
          CHECK(ssum.at(eta) == sx.at(eta) + sy.at(eta));
          CHECK(sprod.at(eta) == sx.at(eta) * sy.at(eta));
        }
      }
    }
  }
}

TEST_CASE("property: sign dichotomy, vanishing stratum and mod-2 collapse") {
  Gen g(63);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
    const OrderingPartition part = partition_orderings(A);
    for (int trial = 0; trial < 25; ++trial) {
      const MixedElement x = g.mixed(A);
      const MixedElement nonscalar(QuadraticForm(A.field()), x.herm(), x.skew());
      const MixedElement h = MixedElement::from_herm(x.herm()), s = MixedElement::from_skew(x.skew());
      for (const auto& P : A.field().orderings()) {
        const SignaturePair pn = signature_pair(nonscalar, P, refs);
        CHECK(pn.plus == -pn.minus);
        const SignaturePair ps = signature_pair(MixedElement::from_scalar(A, x.scalar()), P, refs);
        CHECK(ps.plus == ps.minus);
        if (part.stratum_of(P) == Stratum::Split) CHECK(signature_pair(h, P, refs) == SignaturePair{0, 0});
        else CHECK(signature_pair(s, P, refs) == SignaturePair{0, 0});
        const SignaturePair px = signature_pair(x, P, refs);
        for (int eta : {1, -1}) CHECK(mod(px.at(eta), 2) == rdim2(x));
      }
    }
  }
}

TEST_CASE("property: square law and reference relative sign") {
  Gen g(64);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
    for (int trial = 0; trial < 25; ++trial) {
      const PureQuaternion z = g.pure(A);
      const FieldElement a = g.element(A.field());
      for (const auto& P : A.field().orderings()) {
        const int sq = signature(skew_product(z, z), P);
        const int v = signature_pair(skew1(z), P, refs).plus;
        CHECK(sq == v * v);
        CHECK((sq == 0 || sq == 4));
        const int hs = signature(herm_product(a, a, A), P);
        const int ha = signature_pair(MixedElement::from_herm(HermitianDiagonal(A, {a})), P).plus;
        CHECK(hs == ha * ha);
        CHECK((hs == 0 || hs == 4));

        if (stratum(A, P) != Stratum::Split) continue;
        const PureQuaternion r1 = g.pure(A), r2 = g.pure(A);
        if (signature(skew_product(r1, r1), P) != 4 || signature(skew_product(r2, r2), P) != 4) continue;
        const int rel = reference_relative_sign(r1, r2, P);
        const SkewHermitianDiagonal sz(A, {z});
        CHECK(skew_signature_with_reference(sz, P, r2) == rel * skew_signature_with_reference(sz, P, r1));
      }
    }
  }
}

TEST_CASE("property: covering yields a global polarization") {
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferenceForm ref = find_reference(A);
    const ReferencePolicy refs = ReferencePolicy::global(ref.form);
    const OrderingPartition part = partition_orderings(A);
    CHECK(indices(principal_set(MixedElement::from_skew(ref.form), refs)) == indices(part.x_plus));
    CHECK(ref.nonzero_set == indices(part.x_plus));
    CHECK(indices(principal_set(herm(A, {1}), refs)) == indices(part.x_minus));
    const PolarizationMap pol = assemble_global_polarization(MixedElement::from_skew(ref.form), herm(A, {1}), refs);
    CHECK(pol.is_global(A.field()));
  }
}

TEST_CASE("property: the sign group acts simply transitively") {
  Gen g(65);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = g.uniform(1, 4);
    std::map<std::size_t, int> a, b, f;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = g.coin() ? 1 : -1;
      b[i] = g.coin() ? 1 : -1;
      f[i] = g.coin() ? 1 : -1;
    }
    const PolarizationMap pa(a), pb(b);
    CHECK(act_on_polarization(f, act_on_polarization(f, pa)) == pa);
    // The unique f taking pa to pb.
    std::map<std::size_t, int> ratio;
    for (std::size_t i = 0; i < n; ++i) ratio[i] = a[i] * b[i];
    CHECK(act_on_polarization(ratio, pa) == pb);
    const bool moves = std::any_of(f.begin(), f.end(), [](const auto& kv) { return kv.second < 0; });
    CHECK((act_on_polarization(f, pa) == pa) == !moves);
  }
}

TEST_CASE("property: total signatures transform under the sign group") {
  Gen g(66);
  const QuaternionAlgebra A = minus_one_theta();
  const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
  for (int trial = 0; trial < 20; ++trial) {
    const MixedElement x = g.mixed(A);
    const PolarizationMap pol({{0, g.coin() ? 1 : -1}, {1, g.coin() ? 1 : -1}});
    const std::map<std::size_t, int> f{{0, g.coin() ? 1 : -1}, {1, g.coin() ? 1 : -1}};
    const auto base = total_signature(x, pol, refs);
    const auto moved = total_signature(x, act_on_polarization(f, pol), refs);
    for (const auto& [i, v] : base) {
      const bool scalar_only = x.herm().empty() && x.skew().empty();
      if (f.at(i) == 1 || scalar_only) CHECK(moved.at(i) == v);
      const SignaturePair pr = signature_pair(x, A.field().ordering(i), refs);
      CHECK(moved.at(i) == pr.at(f.at(i) * pol.at(i).value()));
    }
  }
}

TEST_CASE("property: standard automorphisms swap labels on the negative set") {
  Gen g(67);
  for (const auto& [name, A] : testkit::test_algebras()) {
    INFO(name);
    const ReferencePolicy refs = ReferencePolicy::global(find_reference(A).form);
    for (int trial = 0; trial < 20; ++trial) {
      const MixedElement x = g.mixed(A);
      const FieldElement a = g.element(A.field());
      const MixedElement y = standard_automorphism(a, x);
      const auto swaps = swap_set(a);
      for (const auto& P : A.field().orderings()) {
        const SignaturePair px = signature_pair(x, P, refs), py = signature_pair(y, P, refs);
        const bool swapped = std::find(swaps.begin(), swaps.end(), P.index()) != swaps.end();
        CHECK(swapped == (sign_at(a, P) < 0));
        if (swapped) CHECK(py == SignaturePair{px.minus, px.plus});
        else CHECK(py == px);
      }
    }
  }
}
