#pragma once

#include <array>
#include <string>

#include "mixedwitt/brauer.hpp"

namespace mixedwitt {

/// (a, b)_K: i^2 = a, j^2 = b, ij = k = -ji, k^2 = -ab; with its canonical
/// (symplectic) involution x -> conj(x).
class QuaternionAlgebra {
 public:
  /// Throws ZeroSlot or FieldMismatch.
  QuaternionAlgebra(FieldElement a, FieldElement b);
  QuaternionAlgebra(const NumberField& field, const Rational& a, const Rational& b)
      : QuaternionAlgebra(FieldElement(field, a), FieldElement(field, b)) {}

  const NumberField& field() const noexcept { return a_.field(); }
  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }
  QuaternionSymbol symbol() const { return {a_, b_}; }
  /// The norm form n_Q = <<a, b>>.
  QuadraticForm norm_form() const { return mixedwitt::norm_form(symbol()); }

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  FieldElement a_;
  FieldElement b_;
};

class Quaternion {
 public:
  /// x0 + x1 i + x2 j + x3 k.
  Quaternion(QuaternionAlgebra algebra, std::array<FieldElement, 4> x);
  static Quaternion scalar(const QuaternionAlgebra& algebra, const FieldElement& c);
  static Quaternion of(const QuaternionAlgebra& algebra, const Rational& x0, const Rational& x1,
                       const Rational& x2, const Rational& x3);

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }
  const std::array<FieldElement, 4>& coords() const noexcept { return x_; }
  const FieldElement& operator[](std::size_t i) const { return x_[i]; }
  bool is_pure() const { return x_[0].is_zero(); }
  bool is_zero() const;

  Quaternion& operator+=(const Quaternion& rhs);
  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(const FieldElement& c, const Quaternion& x);
  Quaternion operator-() const;

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.algebra_ == y.algebra_ && x.x_ == y.x_;
  }

  std::string to_string() const;

 private:
  QuaternionAlgebra algebra_;
  std::array<FieldElement, 4> x_;
};

/// The canonical involution gamma.
Quaternion conj(const Quaternion& x);
/// Reduced trace, 2 x0.
FieldElement trd(const Quaternion& x);
/// Reduced norm x0^2 - a x1^2 - b x2^2 + ab x3^2.
FieldElement nrd(const Quaternion& x);

/// A quaternion with zero scalar part. These are exactly the
/// gamma-skew-symmetric elements, the entries of skew-hermitian diagonals.
class PureQuaternion {
 public:
  /// x1 i + x2 j + x3 k.
  PureQuaternion(QuaternionAlgebra algebra, FieldElement x1, FieldElement x2, FieldElement x3);
  /// Throws NotPure.
  explicit PureQuaternion(const Quaternion& q);
  static PureQuaternion of(const QuaternionAlgebra& algebra, const Rational& x1, const Rational& x2,
                           const Rational& x3);

  const Quaternion& quaternion() const noexcept { return q_; }
  operator const Quaternion&() const noexcept { return q_; }
  const QuaternionAlgebra& algebra() const noexcept { return q_.algebra(); }
  const FieldElement& operator[](std::size_t i) const { return q_[i]; }
  bool is_invertible() const { return !nrd(q_).is_zero(); }

  PureQuaternion operator-() const { return PureQuaternion(-q_); }
  friend PureQuaternion operator*(const FieldElement& c, const PureQuaternion& z) {
    return PureQuaternion(c * z.q_);
  }
  friend bool operator==(const PureQuaternion& x, const PureQuaternion& y) { return x.q_ == y.q_; }

  std::string to_string() const { return q_.to_string(); }

 private:
  Quaternion q_;
};

/// z^2 = a x1^2 + b x2^2 - ab x3^2 = -nrd(z), a scalar.
FieldElement pure_square(const PureQuaternion& z);

/// An invertible pure z' with z z' = -z' z. Throws NotInvertible.
PureQuaternion anticommuting_unit(const PureQuaternion& z);

/// c with [Q] = (z^2, c): the square of anticommuting_unit(z).
FieldElement symbol_slot(const PureQuaternion& z);

}  // namespace mixedwitt
