#include "mixedwitt/signpol.hpp"

#include <algorithm>
#include <set>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/integer.hpp"

namespace mixedwitt {

namespace {

int isqrt_exact(int v) {
  int r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) throw Error(ErrorKind::InvalidArgument, "square signature " + std::to_string(v) + " is not a square");
  return r;
}

// The nine-element pool i, j, k, i+-j, i+-k, j+-k.
std::vector<std::array<int, 3>> pool_coordinates() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},  {1, -1, 0},
          {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}};
}

// Pool first, then every nonzero x i + y j + w k with coordinates in [-2, 2].
std::vector<std::array<int, 3>> single_candidate_coordinates() {
  std::vector<std::array<int, 3>> out = pool_coordinates();
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int w = -2; w <= 2; ++w)
        if (x || y || w) out.push_back({x, y, w});
  return out;
}

PureQuaternion make_pure(const QuaternionAlgebra& Q, const std::array<int, 3>& c) {
  return PureQuaternion::of(Q, c[0], c[1], c[2]);
}

int square_signature(const PureQuaternion& z, const Ordering& P) { return signature(skew_product(z, z), P); }

}  // namespace

Stratum OrderingPartition::stratum_of(const Ordering& P) const {
  for (const auto& o : x_minus)
    if (o == P) return Stratum::Nonsplit;
  return Stratum::Split;
}

Stratum stratum(const QuaternionAlgebra& algebra, const Ordering& P) {
  return splits_at_real(algebra.symbol(), P) ? Stratum::Split : Stratum::Nonsplit;
}

OrderingPartition partition_orderings(const QuaternionAlgebra& algebra) {
  OrderingPartition out;
  for (const auto& P : algebra.field().orderings())
    (stratum(algebra, P) == Stratum::Split ? out.x_plus : out.x_minus).push_back(P);
  return out;
}

int herm_signature_nonsplit(const HermitianDiagonal& h, const Ordering& P) {
  if (stratum(h.algebra(), P) != Stratum::Nonsplit)
    throw Error(ErrorKind::WrongStratum, "hermitian signature requested at split ordering " + std::to_string(P.index()));
  int s = 0;
  for (const auto& a : h.entries()) s += sign_at(a, P);
  return 2 * s;
}

int reference_magnitude(const SkewHermitianDiagonal& ref, const Ordering& P) {
  int sq = 0;
  for (const auto& r1 : ref.entries())
    for (const auto& r2 : ref.entries()) sq += signature(skew_product(r1, r2), P);
  return isqrt_exact(sq);
}

int skew_signature_with_reference(const SkewHermitianDiagonal& s, const Ordering& P,
                                  const SkewHermitianDiagonal& ref) {
  if (!(s.algebra() == ref.algebra())) throw Error(ErrorKind::AlgebraMismatch, "reference from another algebra");
  if (stratum(s.algebra(), P) != Stratum::Split)
    throw Error(ErrorKind::WrongStratum, "skew signature requested at nonsplit ordering " + std::to_string(P.index()));
  const int m = reference_magnitude(ref, P);
  if (m == 0)
    throw Error(ErrorKind::DegenerateReference, "reference has zero signature at ordering " + std::to_string(P.index()));
  int total = 0;
  for (const auto& r : ref.entries())
    for (const auto& z : s.entries()) total += signature(skew_product(r, z), P);
  if (total % m != 0)
    throw Error(ErrorKind::InvalidArgument, "signature of R.s not divisible by the signature of R");
  return total / m;
}

int skew_signature_with_reference(const SkewHermitianDiagonal& s, const Ordering& P, const PureQuaternion& ref) {
  return skew_signature_with_reference(s, P, SkewHermitianDiagonal(ref.algebra(), {ref}));
}

int reference_relative_sign(const PureQuaternion& r, const PureQuaternion& r2, const Ordering& P) {
  for (const auto* z : {&r, &r2})
    if (square_signature(*z, P) != 4)
      throw Error(ErrorKind::DegenerateReference, "reference has zero signature at ordering " + std::to_string(P.index()));
  return signature(skew_product(r, r2), P) / 4;
}

// ---------------------------------------------------------------------------

ReferencePolicy ReferencePolicy::global(SkewHermitianDiagonal ref) {
  ReferencePolicy p;
  p.global_ = std::move(ref);
  return p;
}

ReferencePolicy ReferencePolicy::single(const PureQuaternion& ref) {
  return global(SkewHermitianDiagonal(ref.algebra(), {ref}));
}

ReferencePolicy ReferencePolicy::per_ordering(std::map<std::size_t, SkewHermitianDiagonal> refs) {
  ReferencePolicy p;
  p.per_ = std::move(refs);
  return p;
}

ReferencePolicy ReferencePolicy::local_search(const QuaternionAlgebra& algebra) {
  std::map<std::size_t, SkewHermitianDiagonal> refs;
  const auto candidates = single_candidate_coordinates();
  for (const auto& P : partition_orderings(algebra).x_plus) {
    for (const auto& c : candidates) {
      PureQuaternion z = make_pure(algebra, c);
      if (z.is_invertible() && square_signature(z, P) == 4) {
        refs.emplace(P.index(), SkewHermitianDiagonal(algebra, {z}));
        break;
      }
    }
    // Each split ordering has a negative-square pure quaternion, but possibly
    // outside the searched box; such orderings are left without a reference.
  }
  return per_ordering(std::move(refs));
}

const SkewHermitianDiagonal* ReferencePolicy::at(const Ordering& P) const {
  if (auto it = per_.find(P.index()); it != per_.end()) return &it->second;
  return global_ ? &*global_ : nullptr;
}

SignaturePair signature_pair(const MixedElement& x, const Ordering& P, const ReferencePolicy& refs) {
  const int base = signature(x.scalar(), P);
  int twisted = 0;
  if (stratum(x.algebra(), P) == Stratum::Nonsplit) {
    twisted = herm_signature_nonsplit(x.herm(), P);
  } else if (!x.skew().empty()) {
    const SkewHermitianDiagonal* ref = refs.at(P);
    if (!ref)
      throw Error(ErrorKind::MissingReference, "split ordering " + std::to_string(P.index()) + " needs a reference form");
    twisted = skew_signature_with_reference(x.skew(), P, *ref);
  }
  return {base + twisted, base - twisted};
}

std::vector<Ordering> principal_set(const MixedElement& x, const ReferencePolicy& refs) {
  std::vector<Ordering> out;
  for (const auto& P : x.algebra().field().orderings()) {
    SignaturePair s = signature_pair(x, P, refs);
    if (s.plus != s.minus) out.push_back(P);
  }
  return out;
}

ReferenceForm find_reference(const QuaternionAlgebra& algebra, std::size_t budget) {
  const auto split = partition_orderings(algebra).x_plus;
  if (split.empty()) return {SkewHermitianDiagonal(algebra), {}};

  std::size_t tried = 0;
  auto covers = [&](const SkewHermitianDiagonal& form) {
    if (++tried > budget)
      throw Error(ErrorKind::SearchBudgetExceeded, "no reference form within " + std::to_string(budget) + " candidates");
    for (const auto& P : split)
      if (reference_magnitude(form, P) == 0) return false;
    return true;
  };
  auto finish = [&](SkewHermitianDiagonal form) {
    std::vector<std::size_t> nz;
    for (const auto& P : split) nz.push_back(P.index());
    return ReferenceForm{std::move(form), std::move(nz)};
  };

  for (const auto& c : single_candidate_coordinates()) {
    PureQuaternion z = make_pure(algebra, c);
    if (!z.is_invertible()) continue;
    SkewHermitianDiagonal form(algebra, {z});
    if (covers(form)) return finish(std::move(form));
  }
  const auto pool = pool_coordinates();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      PureQuaternion z1 = make_pure(algebra, pool[i]), z2 = make_pure(algebra, pool[j]);
      if (!z1.is_invertible() || !z2.is_invertible()) continue;
      SkewHermitianDiagonal form(algebra, {z1, z2});
      if (covers(form)) return finish(std::move(form));
    }
  }
  throw Error(ErrorKind::SearchBudgetExceeded, "reference search space exhausted after " + std::to_string(tried) +
                                                   " candidates");
}

// ---------------------------------------------------------------------------

PolarizationMap::PolarizationMap(std::map<std::size_t, int> labels) {
  for (const auto& [k, v] : labels) set(k, v);
}

std::optional<int> PolarizationMap::at(std::size_t index) const {
  auto it = labels_.find(index);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

void PolarizationMap::set(std::size_t index, int eta) {
  if (eta != 1 && eta != -1) throw Error(ErrorKind::InvalidArgument, "polarization labels must be +1 or -1");
  labels_[index] = eta;
}

bool PolarizationMap::is_global(const NumberField& field) const {
  for (std::size_t i = 0; i < field.ordering_count(); ++i)
    if (!contains(i)) return false;
  return true;
}

PolarizationMap PolarizationMap::merged_with(const PolarizationMap& other) const {
  PolarizationMap out = *this;
  for (const auto& [k, v] : other.labels_) {
    if (out.contains(k)) throw Error(ErrorKind::DomainMismatch, "polarizations overlap at ordering " + std::to_string(k));
    out.set(k, v);
  }
  return out;
}

PolarizationMap PolarizationMap::opposite() const {
  PolarizationMap out;
  for (const auto& [k, v] : labels_) out.set(k, -v);
  return out;
}

PolarizationMap principal_polarization(const MixedElement& x, const ReferencePolicy& refs) {
  PolarizationMap out;
  for (const auto& P : x.algebra().field().orderings()) {
    SignaturePair s = signature_pair(x, P, refs);
    if (s.plus != s.minus) out.set(P.index(), s.plus > s.minus ? 1 : -1);
  }
  return out;
}

std::map<std::size_t, int> total_signature(const MixedElement& x, const PolarizationMap& pol,
                                           const ReferencePolicy& refs) {
  const NumberField& F = x.algebra().field();
  if (!pol.is_global(F)) throw Error(ErrorKind::PartialPolarization, "total signature needs a label at every ordering");
  std::map<std::size_t, int> out;
  for (const auto& P : F.orderings()) out[P.index()] = signature_pair(x, P, refs).at(*pol.at(P.index()));
  return out;
}

PolarizationMap act_on_polarization(const std::map<std::size_t, int>& fn, const PolarizationMap& pol) {
  PolarizationMap out;
  for (const auto& [k, eta] : pol.labels()) {
    auto it = fn.find(k);
    if (it == fn.end()) throw Error(ErrorKind::DomainMismatch, "function undefined at ordering " + std::to_string(k));
    if (it->second != 1 && it->second != -1) throw Error(ErrorKind::InvalidArgument, "function values must be +-1");
    out.set(k, eta * it->second);
  }
  return out;
}

MixedElement standard_automorphism(const FieldElement& a, const MixedElement& x) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "standard automorphism by zero");
  std::vector<FieldElement> h;
  for (const auto& e : x.herm().entries()) h.push_back(a * e);
  std::vector<PureQuaternion> s;
  for (const auto& z : x.skew().entries()) s.push_back(a * z);
  return MixedElement(x.scalar(), HermitianDiagonal(x.algebra(), std::move(h)),
                      SkewHermitianDiagonal(x.algebra(), std::move(s)));
}

std::vector<std::size_t> swap_set(const FieldElement& a) {
  std::vector<std::size_t> out;
  for (const auto& P : a.field().orderings())
    if (sign_at(a, P) < 0) out.push_back(P.index());
  return out;
}

PolarizationMap assemble_global_polarization(const MixedElement& split_cover, const MixedElement& nonsplit_cover,
                                             const ReferencePolicy& refs) {
  const QuaternionAlgebra& Q = split_cover.algebra();
  const OrderingPartition part = partition_orderings(Q);
  const PolarizationMap a = principal_polarization(split_cover, refs);
  const PolarizationMap b = principal_polarization(nonsplit_cover, refs);
  PolarizationMap out;
  for (const auto& P : part.x_plus)
    if (auto eta = a.at(P.index())) out.set(P.index(), *eta);
  for (const auto& P : part.x_minus)
    if (auto eta = b.at(P.index())) out.set(P.index(), *eta);
  if (!out.is_global(Q.field()))
    throw Error(ErrorKind::PartialPolarization, "covering elements leave an ordering unlabeled");
  return out;
}

std::optional<MixedElement> cover_union(const MixedElement& x1, const MixedElement& x2, const ReferencePolicy& refs) {
  const QuaternionAlgebra& Q = x1.algebra();
  const NumberField& F = Q.field();
  std::set<std::size_t> target;
  for (const auto* x : {&x1, &x2})
    for (const auto& P : principal_set(*x, refs)) target.insert(P.index());

  std::vector<FieldElement> pool;
  if (F.is_rational()) {
    for (int v = 1; v <= 10; ++v) {
      pool.emplace_back(F, Rational(v));
      pool.emplace_back(F, Rational(-v));
    }
  } else {
    const FieldElement t = FieldElement::generator(F);
    const Rational shifts[] = {0, 1, -1, 2, -2};
    for (const Rational& c : {Rational(1), Rational(-1), Rational(2), Rational(-2)}) pool.emplace_back(F, c);
    for (const Rational& s : shifts) {
      pool.push_back(t + s);
      pool.push_back(-t + s);
    }
    for (const Rational& m : {Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2), Rational(3), Rational(-3)})
      pool.push_back(t * m);
  }
  for (const auto& lambda : pool) {
    if (lambda.is_zero()) continue;
    MixedElement candidate = mixed_add(x1, module_action(QuadraticForm(F, {lambda}), x2));
    std::set<std::size_t> got;
    for (const auto& P : principal_set(candidate, refs)) got.insert(P.index());
    if (got == target) return candidate;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SpectrumLabel SpectrumLabel::signature(std::size_t ordering, const Integer& p, int eta) {
  if (eta != 1 && eta != -1) throw Error(ErrorKind::InvalidArgument, "eta must be +1 or -1");
  if (p != 0 && (p == 2 || !integer::is_prime(p)))
    throw Error(ErrorKind::InvalidArgument, "residual characteristic must be 0 or an odd prime, got " + p.get_str());
  return {Kind::Signature, ordering, p, eta};
}

std::string SpectrumLabel::to_string() const {
  if (kind == Kind::Fundamental) return "I";
  return "I[P=" + std::to_string(ordering) + ",p=" + p.get_str() + ",eta=" + (eta > 0 ? "+1" : "-1") + "]";
}

bool ideal_membership(const MixedElement& x, const SpectrumLabel& label, const ReferencePolicy& refs) {
  if (label.kind == SpectrumLabel::Kind::Fundamental) return rdim2(x) == 0;
  const Ordering P = x.algebra().field().ordering(label.ordering);
  const int v = signature_pair(x, P, refs).at(label.eta);
  if (label.p == 0) return v == 0;
  return mpz_divisible_p(Integer(v).get_mpz_t(), label.p.get_mpz_t()) != 0;
}

SpectrumReport spectrum_report(const QuaternionAlgebra& algebra, const std::vector<Integer>& primes) {
  SpectrumReport r;
  std::set<Integer> ps;
  for (const auto& p : primes) {
    if (p == 2 || !integer::is_prime(p))
      throw Error(ErrorKind::InvalidArgument, "spectrum primes must be odd primes, got " + p.get_str());
    ps.insert(p);
  }
  r.primes.assign(ps.begin(), ps.end());
  r.partition = partition_orderings(algebra);
  r.ordering_count = algebra.field().ordering_count();
  r.labels.push_back(SpectrumLabel::fundamental());
  std::vector<Integer> chars{0};
  chars.insert(chars.end(), r.primes.begin(), r.primes.end());
  for (std::size_t i = 0; i < r.ordering_count; ++i) {
    for (const auto& p : chars) {
      r.fibers.emplace_back(SpectrumLabel::signature(i, p, 1), 2);
      for (int eta : {1, -1}) {
        auto label = SpectrumLabel::signature(i, p, eta);
        r.labels.push_back(label);
        if (p == 0) r.xtilde.push_back(label);
      }
    }
  }
  return r;
}

}  // namespace mixedwitt
