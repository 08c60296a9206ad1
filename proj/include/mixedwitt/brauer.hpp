#pragma once

#include <vector>

#include "mixedwitt/witt.hpp"

namespace mixedwitt {

/// The Brauer class of the quaternion algebra (a, b)_K.
struct QuaternionSymbol {
  QuaternionSymbol(FieldElement a, FieldElement b);

  const NumberField& field() const noexcept { return a.field(); }

  FieldElement a;
  FieldElement b;
};

/// A formal sum of quaternion symbols in the 2-torsion of Br(K).
struct BrauerClass2 {
  explicit BrauerClass2(NumberField field, std::vector<QuaternionSymbol> symbols = {});

  NumberField field;
  std::vector<QuaternionSymbol> symbols;
};

/// (a, b)_P = +1, i.e. a or b is P-positive.
bool splits_at_real(const QuaternionSymbol& s, const Ordering& P);

/// <<a, b>> = <1, -a, -b, ab>.
QuadraticForm norm_form(const QuaternionSymbol& s);

/// Product of the local symbols of every summand at v (over Q).
int local_invariant(const BrauerClass2& c, const Place& v);

/// Equality in Br_2(Q) by comparing local invariants at the real place, 2 and
/// every odd prime dividing a slot. Throws NonRationalField.
bool class_equal_rational(const BrauerClass2& c1, const BrauerClass2& c2);

/// Agreement of the real local invariants at every ordering. Over a general
/// number field this is necessary, not sufficient, for equality.
bool class_equal_at_real_places(const BrauerClass2& c1, const BrauerClass2& c2);

}  // namespace mixedwitt
