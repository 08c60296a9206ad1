#include "mixedwitt/witt.hpp"

#include <set>
#include <sstream>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/integer.hpp"

namespace mixedwitt {

QuadraticForm::QuadraticForm(NumberField field, std::vector<FieldElement> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "form entry from another field");
    if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "quadratic form entries must be nonzero");
  }
}

QuadraticForm QuadraticForm::of(const NumberField& field, std::initializer_list<Rational> entries) {
  std::vector<FieldElement> v;
  for (const auto& r : entries) v.emplace_back(field, r);
  return QuadraticForm(field, std::move(v));
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i].to_string();
  os << ">";
  return os.str();
}

namespace {

void require_same(const NumberField& a, const NumberField& b) {
  if (!(a == b)) throw Error(ErrorKind::FieldMismatch, "forms over different fields");
}

void require_rational(const QuadraticForm& q) {
  if (!q.field().is_rational()) throw Error(ErrorKind::NonRationalField, "operation is only available over Q");
}

QuadraticForm padded(const QuadraticForm& q, std::size_t dim) {
  std::vector<FieldElement> e = q.entries();
  while (e.size() < dim) {
    e.emplace_back(q.field(), Rational(1));
    e.emplace_back(q.field(), Rational(-1));
  }
  return QuadraticForm(q.field(), std::move(e));
}

Integer product_class(const QuadraticForm& q) {
  Rational prod = 1;
  for (const auto& e : q.entries()) prod *= e.rational_value();
  return integer::squarefree_part(prod);
}

// (-1)^{e(u)} with u odd: e(u) = (u-1)/2 mod 2.
int eps2(const Integer& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 1 ? 0 : 1; }
// w(u) = (u^2-1)/8 mod 2.
int omega2(const Integer& u) {
  unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return (r == 1 || r == 7) ? 0 : 1;
}

}  // namespace

QuadraticForm sum(const QuadraticForm& q1, const QuadraticForm& q2) {
  require_same(q1.field(), q2.field());
  std::vector<FieldElement> e = q1.entries();
  e.insert(e.end(), q2.entries().begin(), q2.entries().end());
  return QuadraticForm(q1.field(), std::move(e));
}

QuadraticForm tensor(const QuadraticForm& q1, const QuadraticForm& q2) {
  require_same(q1.field(), q2.field());
  std::vector<FieldElement> e;
  e.reserve(q1.dim() * q2.dim());
  for (const auto& a : q1.entries())
    for (const auto& b : q2.entries()) e.push_back(a * b);
  return QuadraticForm(q1.field(), std::move(e));
}

QuadraticForm negate(const QuadraticForm& q) {
  std::vector<FieldElement> e;
  for (const auto& a : q.entries()) e.push_back(-a);
  return QuadraticForm(q.field(), std::move(e));
}

QuadraticForm scale(const QuadraticForm& q, const FieldElement& c) {
  require_same(q.field(), c.field());
  if (c.is_zero()) throw Error(ErrorKind::ZeroScale, "scaling by zero");
  std::vector<FieldElement> e;
  for (const auto& a : q.entries()) e.push_back(a * c);
  return QuadraticForm(q.field(), std::move(e));
}

QuadraticForm pfister(const NumberField& field, std::span<const FieldElement> slots) {
  QuadraticForm out = QuadraticForm::of(field, {1});
  for (const auto& a : slots) {
    require_same(field, a.field());
    if (a.is_zero()) throw Error(ErrorKind::ZeroSlot, "Pfister slot is zero");
    out = tensor(out, QuadraticForm(field, {FieldElement(field, Rational(1)), -a}));
  }
  return out;
}

int signature(const QuadraticForm& q, const Ordering& P) {
  require_same(q.field(), P.field());
  int s = 0;
  for (const auto& a : q.entries()) s += sign_at(a, P);
  return s;
}

ClassicalInvariants invariants(const QuadraticForm& q) {
  const std::size_t n = q.dim();
  FieldElement disc(q.field(), Rational((n * (n - 1) / 2) % 2 == 0 ? 1 : -1));
  for (const auto& a : q.entries()) disc *= a;
  return {static_cast<int>(n % 2), disc};
}

Place Place::prime(const Integer& p) {
  if (!integer::is_prime(p)) throw Error(ErrorKind::InvalidArgument, p.get_str() + " is not prime");
  return {Kind::Finite, p};
}

std::string Place::to_string() const { return kind == Kind::Real ? "inf" : p.get_str(); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroArgument, "Hilbert symbol of zero");
  if (v.kind == Place::Kind::Real) return (a < 0 && b < 0) ? -1 : 1;
  const Integer sa = integer::squarefree_part(a), sb = integer::squarefree_part(b);
  const Integer& p = v.p;
  const unsigned alpha = integer::valuation(sa, p), beta = integer::valuation(sb, p);
  const Integer u = alpha ? Integer(sa / p) : sa;
  const Integer w = beta ? Integer(sb / p) : sb;
  if (p == 2) {
    int e = eps2(u) * eps2(w) + static_cast<int>(alpha) * omega2(w) + static_cast<int>(beta) * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
  if (beta) s *= integer::legendre(u, p);
  if (alpha) s *= integer::legendre(w, p);
  return s;
}

int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroArgument, "Hilbert symbol of zero");
  if (!a.field().is_rational() || !b.field().is_rational())
    throw Error(ErrorKind::NonRationalField, "Hilbert symbols are only computed over Q");
  return hilbert_symbol(a.rational_value(), b.rational_value(), v);
}

int hasse_invariant(const QuadraticForm& q, const Place& v) {
  require_rational(q);
  int s = 1;
  const auto& e = q.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) s *= hilbert_symbol(e[i], e[j], v);
  return s;
}

std::vector<Place> relevant_places(std::span<const QuadraticForm> forms) {
  std::set<Integer> primes{2};
  for (const auto& q : forms) {
    require_rational(q);
    for (const auto& a : q.entries())
      for (const auto& [p, e] : integer::factor(integer::squarefree_part(a.rational_value()))) primes.insert(p);
  }
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back({Place::Kind::Finite, p});
  return out;
}

bool witt_equal_rational(const QuadraticForm& q1, const QuadraticForm& q2) {
  require_rational(q1);
  require_rational(q2);
  if (q1.dim() % 2 != q2.dim() % 2) return false;
  // Same dimension after adding hyperbolic planes; then Witt equality is
  // isometry, decided by determinant, signature and Hasse invariants.
  const std::size_t n = std::max(q1.dim(), q2.dim());
  const QuadraticForm a = padded(q1, n), b = padded(q2, n);
  const Ordering real = q1.field().ordering(0);
  if (signature(a, real) != signature(b, real)) return false;
  if (n == 0) return true;
  if (product_class(a) != product_class(b)) return false;
  const QuadraticForm both[] = {a, b};
  for (const auto& v : relevant_places(both)) {
    if (v.kind == Place::Kind::Real) continue;
    if (hasse_invariant(a, v) != hasse_invariant(b, v)) return false;
  }
  return true;
}

WeakVerdict weak_equivalence(const QuadraticForm& q1, const QuadraticForm& q2) {
  require_same(q1.field(), q2.field());
  if (q1.dim() % 2 != q2.dim() % 2) return WeakVerdict::Distinguished;
  for (const auto& P : q1.field().orderings())
    if (signature(q1, P) != signature(q2, P)) return WeakVerdict::Distinguished;
  const std::size_t n = std::max(q1.dim(), q2.dim());
  const FieldElement ratio = invariants(padded(q1, n)).signed_disc / invariants(padded(q2, n)).signed_disc;
  if (ratio.is_rational()) {
    if (!integer::is_square(ratio.rational_value())) {
      // A rational non-square stays a non-square in K unless K contains a
      // quadratic subfield, impossible in odd degree.
      if (q1.field().degree() % 2 == 1) return WeakVerdict::Distinguished;
    }
  }
  for (const auto& P : q1.field().orderings())
    if (sign_at(ratio, P) < 0) return WeakVerdict::Distinguished;
  return WeakVerdict::EquivalentWeakly;
}

}  // namespace mixedwitt
