#include "mixedwitt/brauer.hpp"

#include <set>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/integer.hpp"

namespace mixedwitt {

QuaternionSymbol::QuaternionSymbol(FieldElement a_, FieldElement b_) : a(std::move(a_)), b(std::move(b_)) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "symbol slots over different fields");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroSlot, "quaternion symbol slots must be nonzero");
}

BrauerClass2::BrauerClass2(NumberField field_, std::vector<QuaternionSymbol> symbols_)
    : field(std::move(field_)), symbols(std::move(symbols_)) {
  for (const auto& s : symbols)
    if (!(s.field() == field)) throw Error(ErrorKind::FieldMismatch, "Brauer class summand from another field");
}

bool splits_at_real(const QuaternionSymbol& s, const Ordering& P) {
  if (!(s.field() == P.field())) throw Error(ErrorKind::FieldMismatch, "symbol and ordering over different fields");
  return sign_at(s.a, P) > 0 || sign_at(s.b, P) > 0;
}

QuadraticForm norm_form(const QuaternionSymbol& s) {
  const FieldElement slots[] = {s.a, s.b};
  return pfister(s.field(), slots);
}

int local_invariant(const BrauerClass2& c, const Place& v) {
  int out = 1;
  for (const auto& s : c.symbols) out *= hilbert_symbol(s.a, s.b, v);
  return out;
}

namespace {

void collect_primes(const BrauerClass2& c, std::set<Integer>& primes) {
  for (const auto& s : c.symbols)
    for (const auto* slot : {&s.a, &s.b})
      for (const auto& [p, e] : integer::factor(integer::squarefree_part(slot->rational_value()))) primes.insert(p);
}

}  // namespace

bool class_equal_rational(const BrauerClass2& c1, const BrauerClass2& c2) {
  if (!c1.field.is_rational() || !c2.field.is_rational())
    throw Error(ErrorKind::NonRationalField, "Brauer class equality is only decided over Q");
  if (local_invariant(c1, Place::real()) != local_invariant(c2, Place::real())) return false;
  std::set<Integer> primes{2};
  collect_primes(c1, primes);
  collect_primes(c2, primes);
  for (const auto& p : primes) {
    Place v{Place::Kind::Finite, p};
    if (local_invariant(c1, v) != local_invariant(c2, v)) return false;
  }
  return true;
}

bool class_equal_at_real_places(const BrauerClass2& c1, const BrauerClass2& c2) {
  if (!(c1.field == c2.field)) throw Error(ErrorKind::FieldMismatch, "classes over different fields");
  for (const auto& P : c1.field.orderings()) {
    auto real_invariant = [&](const BrauerClass2& c) {
      int out = 1;
      for (const auto& s : c.symbols) out *= splits_at_real(s, P) ? 1 : -1;
      return out;
    };
    if (real_invariant(c1) != real_invariant(c2)) return false;
  }
  return true;
}

}  // namespace mixedwitt
