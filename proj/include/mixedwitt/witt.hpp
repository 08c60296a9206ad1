#pragma once

#include <span>
#include <string>
#include <vector>

#include "mixedwitt/numberfield.hpp"

namespace mixedwitt {

/// Diagonal quadratic form <a1, ..., an> over K, standing for its Witt class.
/// Entries are kept exactly as given; n = 0 is the zero form.
class QuadraticForm {
 public:
  explicit QuadraticForm(NumberField field) : field_(std::move(field)) {}
  /// Throws ZeroElement on a zero entry, FieldMismatch on a foreign entry.
  QuadraticForm(NumberField field, std::vector<FieldElement> entries);
  /// Convenience for rational entries.
  static QuadraticForm of(const NumberField& field, std::initializer_list<Rational> entries);

  const NumberField& field() const noexcept { return field_; }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::string to_string() const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  NumberField field_;
  std::vector<FieldElement> entries_;
};

// Representation-level ring operations on W(K).
QuadraticForm sum(const QuadraticForm& q1, const QuadraticForm& q2);
QuadraticForm tensor(const QuadraticForm& q1, const QuadraticForm& q2);
QuadraticForm negate(const QuadraticForm& q);
/// Throws ZeroScale.
QuadraticForm scale(const QuadraticForm& q, const FieldElement& c);

/// <<a1, ..., an>> = (x) <1, -ai>; throws ZeroSlot.
QuadraticForm pfister(const NumberField& field, std::span<const FieldElement> slots);

/// sign_P(q) = sum of the P-signs of the entries.
int signature(const QuadraticForm& q, const Ordering& P);

struct ClassicalInvariants {
  int dim_mod2;
  /// (-1)^(n(n-1)/2) * prod ai; 1 for the zero form.
  FieldElement signed_disc;
};
ClassicalInvariants invariants(const QuadraticForm& q);

/// A place of Q.
struct Place {
  enum class Kind { Real, Finite };
  Kind kind = Kind::Real;
  Integer p = 0;

  static Place real() { return {}; }
  /// Throws InvalidArgument unless p is prime.
  static Place prime(const Integer& p);
  std::string to_string() const;
};

/// Hilbert symbol (a, b)_v over Q; throws ZeroArgument.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);
/// Same for rational elements of a number field; throws NonRationalField.
int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v);

/// Hasse invariant prod_{i<j} (ai, aj)_v of a form over Q.
int hasse_invariant(const QuadraticForm& q, const Place& v);

/// Places where some entry of the given forms is not a v-adic unit, plus 2
/// and the real place. Hasse data at every other place is trivial.
std::vector<Place> relevant_places(std::span<const QuadraticForm> forms);

/// Exact Witt-class equality over Q via Hasse-Minkowski; throws NonRationalField.
bool witt_equal_rational(const QuadraticForm& q1, const QuadraticForm& q2);

enum class WeakVerdict { EquivalentWeakly, Distinguished };

/// Necessary conditions for Witt equality over any number field: dimension
/// parity, total signature, and the signed discriminant ratio passing the
/// available square tests (exact over Q, positivity at all orderings otherwise).
WeakVerdict weak_equivalence(const QuadraticForm& q1, const QuadraticForm& q2);

}  // namespace mixedwitt
