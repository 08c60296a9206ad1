#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "mixedwitt/signpol.hpp"

namespace mixedwitt::io {

using json = nlohmann::json;

// Readers accept the JSON objects described in the README and, where noted,
// the equivalent text syntax. Malformed input throws ParseError; well-formed
// but mathematically invalid input throws the library error of the
// constructor involved.

/// [num, den]; components become strings when they do not fit in 64 bits.
json to_json(const Rational& r);
/// [num, den], an integer, or a string such as "-3/4".
Rational rational_from_json(const json& j);

/// {"poly": [[n, d], ...]} lowest degree first.
json to_json(const Polynomial& f);
/// {"poly": [...]} or polynomial text in t.
Polynomial polynomial_from_json(const json& j);

json to_json(const FieldElement& a);
/// {"coeffs": [...]}, a number, or an expression in t.
FieldElement element_from_json(const NumberField& field, const json& j);

json to_json(const QuadraticForm& q);
/// {"entries": [...]}, a bare array of elements, or comma-separated text.
QuadraticForm form_from_json(const NumberField& field, const json& j);

json to_json(const QuaternionSymbol& s);
QuaternionSymbol symbol_from_json(const NumberField& field, const json& j);

json to_json(const Quaternion& x);
/// {"x": [e0, e1, e2, e3]}.
Quaternion quaternion_from_json(const QuaternionAlgebra& algebra, const json& j);
/// {"x": [...]} with e0 = 0, or text such as "i-2j" or "(1+t)k".
PureQuaternion pure_from_json(const QuaternionAlgebra& algebra, const json& j);

/// Sum of coefficient-times-unit terms over i, j, k; coefficients are field
/// expressions, parenthesized when not a plain rational.
PureQuaternion parse_pure_quaternion(const QuaternionAlgebra& algebra, std::string_view text);

/// Inverse of parse_pure_quaternion: "i-2j", "(t+1)k"; the zero quaternion is "0i".
std::string format_pure(const PureQuaternion& z);

json to_json(const MixedElement& x);
/// {"scalar": form, "herm": [element, ...], "skew": [quaternion, ...]};
/// missing parts are empty.
MixedElement mixed_from_json(const QuaternionAlgebra& algebra, const json& j);

json to_json(const PolarizationMap& pol);
PolarizationMap polarization_from_json(const json& j);

json to_json(const Ordering& P);
json to_json(const OrderingPartition& part);
json to_json(const SpectrumLabel& label);
json to_json(const SpectrumReport& report);

struct Workspace {
  NumberField field = NumberField::rationals();
  std::optional<QuaternionAlgebra> algebra;
  std::map<std::string, MixedElement> forms;
  std::map<std::string, PolarizationMap> polarizations;

  /// Throws InvalidArgument when the workspace has no algebra.
  const QuaternionAlgebra& require_algebra() const;
  /// Throws InvalidArgument for an unknown name.
  const MixedElement& form(const std::string& name) const;
};

/// {"field": poly, "algebra": symbol, "forms": {...}, "polarizations": {...}}.
/// Forms require an algebra.
Workspace workspace_from_json(const json& j);
json to_json(const Workspace& ws);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

}  // namespace mixedwitt::io
