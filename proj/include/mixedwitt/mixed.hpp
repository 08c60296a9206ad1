#pragma once

#include <vector>

#include "mixedwitt/quat.hpp"

namespace mixedwitt {

/// <a1, ..., an>_gamma: hermitian diagonal over (Q, gamma). The
/// gamma-symmetric elements of Q are the scalars, so entries live in K.
class HermitianDiagonal {
 public:
  explicit HermitianDiagonal(QuaternionAlgebra algebra) : algebra_(std::move(algebra)) {}
  /// Throws ZeroElement or FieldMismatch.
  HermitianDiagonal(QuaternionAlgebra algebra, std::vector<FieldElement> entries);

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  QuaternionAlgebra algebra_;
  std::vector<FieldElement> entries_;
};

/// <z1, ..., zn>_gamma: skew-hermitian diagonal with invertible pure entries.
class SkewHermitianDiagonal {
 public:
  explicit SkewHermitianDiagonal(QuaternionAlgebra algebra) : algebra_(std::move(algebra)) {}
  /// Throws NotInvertible or AlgebraMismatch.
  SkewHermitianDiagonal(QuaternionAlgebra algebra, std::vector<PureQuaternion> entries);

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<PureQuaternion>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  QuaternionAlgebra algebra_;
  std::vector<PureQuaternion> entries_;
};

/// An element of W(K) + W^1(Q, gamma) + W^-1(Q, gamma), kept as three
/// diagonals with no Witt reduction.
class MixedElement {
 public:
  /// The zero element.
  explicit MixedElement(const QuaternionAlgebra& algebra);
  MixedElement(QuadraticForm scalar, HermitianDiagonal herm, SkewHermitianDiagonal skew);

  static MixedElement from_scalar(const QuaternionAlgebra& algebra, QuadraticForm q);
  static MixedElement from_herm(HermitianDiagonal h);
  static MixedElement from_skew(SkewHermitianDiagonal s);

  const QuaternionAlgebra& algebra() const noexcept { return herm_.algebra(); }
  const QuadraticForm& scalar() const noexcept { return scalar_; }
  const HermitianDiagonal& herm() const noexcept { return herm_; }
  const SkewHermitianDiagonal& skew() const noexcept { return skew_; }
  bool is_zero_representation() const { return scalar_.empty() && herm_.empty() && skew_.empty(); }

 private:
  QuadraticForm scalar_;
  HermitianDiagonal herm_;
  SkewHermitianDiagonal skew_;
};

MixedElement mixed_add(const MixedElement& x, const MixedElement& y);

/// W(K)-module structure: scalars multiply every diagonal entry.
MixedElement module_action(const QuadraticForm& q, const MixedElement& x);

/// Slots (z1^2, z2^2 c) with c = symbol_slot(z1), so that
/// e2(<<z1^2, z2^2 c>>) = (z1^2, z2^2) + [Q].
QuaternionSymbol phi_symbol(const PureQuaternion& z1, const PureQuaternion& z2);

/// The 2-fold Pfister form phi_{z1,z2} built from phi_symbol.
QuadraticForm pfister_phi(const PureQuaternion& z1, const PureQuaternion& z2);

/// <z1>_gamma . <z2>_gamma = <-Trd(z1 z2)> phi_{z1,z2}; the zero form when
/// Trd(z1 z2) = 0.
QuadraticForm skew_product(const PureQuaternion& z1, const PureQuaternion& z2);

/// <a>_gamma . <b>_gamma = <2ab> n_Q.
QuadraticForm herm_product(const FieldElement& a, const FieldElement& b, const QuaternionAlgebra& algebra);

/// Full product of the mixed Witt ring, extended bilinearly over entries.
MixedElement mixed_mul(const MixedElement& x, const MixedElement& y);

/// Reduced dimension mod 2; rank-one (skew-)hermitian entries have reduced
/// dimension 2.
int rdim2(const MixedElement& x);

/// The involution trace form <1>_gamma^2 = <2> n_Q.
QuadraticForm trace_form(const QuaternionAlgebra& algebra);

/// Element (even, odd) of W(K)[Z/2Z], the mixed Witt ring of (K, Id).
struct SplitMixedElement {
  SplitMixedElement(QuadraticForm even, QuadraticForm odd);

  const NumberField& field() const noexcept { return even.field(); }

  QuadraticForm even;
  QuadraticForm odd;
};

SplitMixedElement split_add(const SplitMixedElement& u, const SplitMixedElement& v);
SplitMixedElement split_mul(const SplitMixedElement& u, const SplitMixedElement& v);
/// The canonical retraction (augmentation) e + o.
QuadraticForm split_augment(const SplitMixedElement& u);

}  // namespace mixedwitt
