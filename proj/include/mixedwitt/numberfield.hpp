#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mixedwitt/polynomial.hpp"

namespace mixedwitt {

class Ordering;

/// Maximum degree accepted by NumberField::make; irreducibility is only
/// certified up to this degree.
inline constexpr int kMaxFieldDegree = 6;

/// K = Q[t]/(f) for a monic irreducible f. Cheap to copy: all copies share
/// one immutable definition, including the isolated real roots.
class NumberField {
 public:
  /// Validates f (monic, squarefree, no factor found) and isolates its real
  /// roots. Throws NotMonic, NotSquarefree, ReducibleDetected or
  /// DegreeTooLarge.
  static NumberField make(const Polynomial& f);
  static NumberField rationals();

  int degree() const noexcept;
  const Polynomial& minimal_polynomial() const noexcept;
  bool is_rational() const noexcept { return degree() == 1; }

  /// One ordering per real root, ascending.
  std::vector<Ordering> orderings() const;
  std::size_t ordering_count() const noexcept;
  /// Throws InvalidArgument if there is no real root with this index.
  Ordering ordering(std::size_t index) const;

  /// Same defining polynomial; distinct handles of the same field compare equal.
  friend bool operator==(const NumberField& lhs, const NumberField& rhs);

 private:
  struct Data;
  explicit NumberField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Returns the orderings of F (equivalently its real embeddings).
std::vector<Ordering> real_orderings(const NumberField& field);

/// True iff f has a monic factor of degree 1..deg/2 over Z after making f
/// integral; degree must be at most kMaxFieldDegree.
bool has_nontrivial_factor(const Polynomial& f);

/// Element of K stored as its reduced representative of degree < n.
class FieldElement {
 public:
  FieldElement(NumberField field, const Rational& c);
  FieldElement(NumberField field, long c) : FieldElement(std::move(field), Rational(c)) {}
  /// Reduces `representative` modulo the minimal polynomial.
  FieldElement(NumberField field, const Polynomial& representative);

  /// The class of t.
  static FieldElement generator(const NumberField& field);
  static FieldElement parse(const NumberField& field, std::string_view text);

  const NumberField& field() const noexcept { return field_; }
  /// Exactly degree() coefficients, lowest first.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Polynomial representative() const { return Polynomial(coeffs_); }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NonRationalField if the element is not in Q.
  Rational rational_value() const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& c);
  friend FieldElement operator*(const Rational& c, FieldElement a) { return std::move(a) * c; }
  friend FieldElement operator+(FieldElement a, const Rational& c);

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& other) const;
  NumberField field_;
  std::vector<Rational> coeffs_;
};

/// A real embedding of K, identified by an isolating interval (lo, hi) that
/// contains exactly one real root of f, with f(lo)*f(hi) < 0.
class Ordering {
 public:
  Ordering(NumberField field, Rational lo, Rational hi, std::size_t index);

  const NumberField& field() const noexcept { return field_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  /// Position of the root among the real roots sorted ascending.
  std::size_t index() const noexcept { return index_; }

  /// Halves the interval, keeping the root.
  Ordering refined() const;
  /// Refines until the width is at most `width`.
  Ordering refined_to(const Rational& width) const;

  /// Orderings are identified by field and index; the interval is only a
  /// representation.
  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  NumberField field_;
  Rational lo_;
  Rational hi_;
  std::size_t index_;
};

/// P-sign of a nonzero element. Throws ZeroElement or FieldMismatch.
int sign_at(const FieldElement& a, const Ordering& P);

}  // namespace mixedwitt
