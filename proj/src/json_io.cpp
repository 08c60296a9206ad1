#include "mixedwitt/json_io.hpp"

#include <cctype>

#include "mixedwitt/errors.hpp"

namespace mixedwitt::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 0); }

json integer_to_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
  return n.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Integer n;
    if (s.empty() || n.set_str(s, 10) != 0) fail("'" + s + "' is not an integer");
    return n;
  }
  fail("expected an integer, got " + j.dump());
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail("unknown key \"" + it.key() + "\"");
  }
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

json to_json(const Rational& r) { return json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())}); }

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail("rational must be [num, den], got " + j.dump());
    Integer n = integer_from_json(j[0]), d = integer_from_json(j[1]);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in " + j.dump());
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational, got " + j.dump());
}

json to_json(const Polynomial& f) {
  json cs = json::array();
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(to_json(f.coeff(i)));
  return {{"poly", cs}};
}

Polynomial polynomial_from_json(const json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  if (!j.is_object()) fail("expected a polynomial, got " + j.dump());
  only_keys(j, {"poly"});
  const json& cs = member(j, "poly");
  if (!cs.is_array()) fail("\"poly\" must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cs) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

json to_json(const FieldElement& a) {
  json cs = json::array();
  for (const auto& c : a.coeffs()) cs.push_back(to_json(c));
  return {{"coeffs", cs}};
}

FieldElement element_from_json(const NumberField& field, const json& j) {
  if (j.is_string()) return FieldElement::parse(field, j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return FieldElement(field, rational_from_json(j));
  if (!j.is_object()) fail("expected a field element, got " + j.dump());
  only_keys(j, {"coeffs"});
  const json& cs = member(j, "coeffs");
  if (!cs.is_array()) fail("\"coeffs\" must be an array");
  if (cs.size() > static_cast<std::size_t>(field.degree()))
    throw Error(ErrorKind::InvalidArgument, "element has " + std::to_string(cs.size()) +
                                                " coefficients in a field of degree " +
                                                std::to_string(field.degree()));
  std::vector<Rational> coeffs;
  for (const auto& c : cs) coeffs.push_back(rational_from_json(c));
  return FieldElement(field, Polynomial(std::move(coeffs)));
}

json to_json(const QuadraticForm& q) {
  json es = json::array();
  for (const auto& e : q.entries()) es.push_back(to_json(e));
  return {{"entries", es}};
}

QuadraticForm form_from_json(const NumberField& field, const json& j) {
  std::vector<FieldElement> entries;
  if (j.is_string()) {
    const std::string text = trim(j.get<std::string>());
    if (!text.empty())
      for (const auto& part : split_top_level(text, ',')) entries.push_back(FieldElement::parse(field, part));
    return QuadraticForm(field, std::move(entries));
  }
  const json* es = &j;
  if (j.is_object()) {
    only_keys(j, {"entries"});
    es = &member(j, "entries");
  }
  if (!es->is_array()) fail("expected a form, got " + j.dump());
  for (const auto& e : *es) entries.push_back(element_from_json(field, e));
  return QuadraticForm(field, std::move(entries));
}

json to_json(const QuaternionSymbol& s) { return {{"a", to_json(s.a)}, {"b", to_json(s.b)}}; }

QuaternionSymbol symbol_from_json(const NumberField& field, const json& j) {
  if (j.is_string()) {
    auto parts = split_top_level(j.get<std::string>(), ',');
    if (parts.size() != 2) fail("symbol text must be 'a,b'");
    return QuaternionSymbol(FieldElement::parse(field, parts[0]), FieldElement::parse(field, parts[1]));
  }
  if (!j.is_object()) fail("expected a symbol, got " + j.dump());
  only_keys(j, {"a", "b"});
  return QuaternionSymbol(element_from_json(field, member(j, "a")), element_from_json(field, member(j, "b")));
}

json to_json(const Quaternion& x) {
  json xs = json::array();
  for (const auto& c : x.coords()) xs.push_back(to_json(c));
  return {{"x", xs}};
}

Quaternion quaternion_from_json(const QuaternionAlgebra& algebra, const json& j) {
  if (!j.is_object()) fail("expected a quaternion, got " + j.dump());
  only_keys(j, {"x"});
  const json& xs = member(j, "x");
  if (!xs.is_array() || xs.size() != 4) fail("\"x\" must hold four coordinates");
  const NumberField& F = algebra.field();
  return Quaternion(algebra, {element_from_json(F, xs[0]), element_from_json(F, xs[1]), element_from_json(F, xs[2]),
                              element_from_json(F, xs[3])});
}

PureQuaternion pure_from_json(const QuaternionAlgebra& algebra, const json& j) {
  if (j.is_string()) return parse_pure_quaternion(algebra, j.get<std::string>());
  return PureQuaternion(quaternion_from_json(algebra, j));
}

PureQuaternion parse_pure_quaternion(const QuaternionAlgebra& algebra, std::string_view text) {
  const NumberField& F = algebra.field();
  std::array<FieldElement, 3> x = {FieldElement(F, 0L), FieldElement(F, 0L), FieldElement(F, 0L)};
  int depth = 0;
  bool any = false;
  // Terms start at every top-level sign that is not the first character.
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && i > 0 && trim(text.substr(start, i - start)) != "") {
      terms.emplace_back(start, i);
      start = i;
    }
  }
  terms.emplace_back(start, text.size());
  for (const auto& [b, e] : terms) {
    std::string term = trim(text.substr(b, e - b));
    if (term.empty()) throw ParseError("empty term", b);
    const char unit = term.back();
    if (unit != 'i' && unit != 'j' && unit != 'k') throw ParseError("term must end in i, j or k", e - 1);
    std::string coeff = trim(term.substr(0, term.size() - 1));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    FieldElement c(F, 1L);
    if (coeff == "-") {
      c = FieldElement(F, -1L);
    } else if (coeff == "+" || coeff.empty()) {
    } else {
      try {
        c = FieldElement::parse(F, coeff);
      } catch (const ParseError& err) {
        throw ParseError("bad coefficient '" + coeff + "'", b + err.position());
      }
    }
    x[static_cast<std::size_t>(unit - 'i')] += c;
    any = true;
  }
  if (!any) throw ParseError("empty quaternion", 0);
  return PureQuaternion(algebra, x[0], x[1], x[2]);
}

std::string format_pure(const PureQuaternion& z) {
  std::string out;
  for (std::size_t u = 0; u < 3; ++u) {
    const FieldElement& c = z[u + 1];
    if (c.is_zero()) continue;
    std::string coeff;
    if (c.is_rational()) {
      const Rational r = c.rational_value();
      coeff = r == 1 ? "" : r == -1 ? "-" : rational_to_string(r);
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (!out.empty() && coeff.rfind('-', 0) != 0) out += "+";
    out += coeff;
    out += static_cast<char>('i' + u);
  }
  return out.empty() ? "0i" : out;
}

json to_json(const MixedElement& x) {
  json herm = json::array(), skew = json::array();
  for (const auto& a : x.herm().entries()) herm.push_back(to_json(a));
  for (const auto& z : x.skew().entries()) skew.push_back(to_json(z.quaternion()));
  return {{"scalar", to_json(x.scalar())}, {"herm", herm}, {"skew", skew}};
}

MixedElement mixed_from_json(const QuaternionAlgebra& algebra, const json& j) {
  if (!j.is_object()) fail("expected a mixed element, got " + j.dump());
  only_keys(j, {"scalar", "herm", "skew"});
  const NumberField& F = algebra.field();
  QuadraticForm scalar(F);
  if (j.contains("scalar")) scalar = form_from_json(F, j["scalar"]);
  std::vector<FieldElement> herm;
  if (j.contains("herm")) {
    if (!j["herm"].is_array()) fail("\"herm\" must be an array");
    for (const auto& e : j["herm"]) herm.push_back(element_from_json(F, e));
  }
  std::vector<PureQuaternion> skew;
  if (j.contains("skew")) {
    if (!j["skew"].is_array()) fail("\"skew\" must be an array");
    for (const auto& z : j["skew"]) skew.push_back(pure_from_json(algebra, z));
  }
  return MixedElement(std::move(scalar), HermitianDiagonal(algebra, std::move(herm)),
                      SkewHermitianDiagonal(algebra, std::move(skew)));
}

json to_json(const PolarizationMap& pol) {
  json labels = json::object();
  for (const auto& [k, v] : pol.labels()) labels[std::to_string(k)] = v;
  return {{"labels", labels}};
}

PolarizationMap polarization_from_json(const json& j) {
  if (!j.is_object()) fail("expected a polarization, got " + j.dump());
  only_keys(j, {"labels"});
  const json& labels = member(j, "labels");
  if (!labels.is_object()) fail("\"labels\" must be an object");
  PolarizationMap pol;
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    const std::string& key = it.key();
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos)
      fail("polarization key '" + key + "' is not an ordering index");
    if (!it.value().is_number_integer()) fail("polarization label must be 1 or -1");
    pol.set(std::stoul(key), it.value().get<int>());
  }
  return pol;
}

json to_json(const Ordering& P) {
  return {{"index", P.index()}, {"interval", json::array({to_json(P.lo()), to_json(P.hi())})}};
}

json to_json(const OrderingPartition& part) {
  json split = json::array(), nonsplit = json::array();
  for (const auto& P : part.x_plus) split.push_back(P.index());
  for (const auto& P : part.x_minus) nonsplit.push_back(P.index());
  return {{"split", split}, {"nonsplit", nonsplit}};
}

json to_json(const SpectrumLabel& label) {
  if (label.kind == SpectrumLabel::Kind::Fundamental) return {{"kind", "fundamental"}, {"name", label.to_string()}};
  return {{"kind", "signature"},
          {"ordering", label.ordering},
          {"p", integer_to_json(label.p)},
          {"eta", label.eta},
          {"name", label.to_string()}};
}

json to_json(const SpectrumReport& r) {
  json primes = json::array(), labels = json::array(), fibers = json::array(), xtilde = json::array();
  for (const auto& p : r.primes) primes.push_back(integer_to_json(p));
  for (const auto& l : r.labels) labels.push_back(to_json(l));
  for (const auto& [l, n] : r.fibers)
    fibers.push_back({{"ordering", l.ordering}, {"p", integer_to_json(l.p)}, {"size", n}});
  for (const auto& l : r.xtilde) xtilde.push_back(to_json(l));
  return {{"ordering_count", r.ordering_count},
          {"primes", primes},
          {"partition", to_json(r.partition)},
          {"labels", labels},
          {"label_count", r.labels.size()},
          {"fibers", {{"fundamental", r.fundamental_fiber}, {"signature", fibers}}},
          {"xtilde", {{"size", r.xtilde.size()}, {"labels", xtilde}}},
          {"topology",
           "X(K) is finite and discrete: every polarization is continuous and every principal set is clopen"}};
}

const QuaternionAlgebra& Workspace::require_algebra() const {
  if (!algebra) throw Error(ErrorKind::InvalidArgument, "workspace has no quaternion algebra");
  return *algebra;
}

const MixedElement& Workspace::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw Error(ErrorKind::InvalidArgument, "workspace has no form named '" + name + "'");
  return it->second;
}

Workspace workspace_from_json(const json& j) {
  if (!j.is_object()) fail("workspace must be a JSON object");
  only_keys(j, {"field", "algebra", "forms", "polarizations"});
  Workspace ws;
  if (j.contains("field")) {
    const json& f = j["field"];
    ws.field = NumberField::make(polynomial_from_json(f));
  }
  if (j.contains("algebra")) {
    QuaternionSymbol s = symbol_from_json(ws.field, j["algebra"]);
    ws.algebra.emplace(s.a, s.b);
  }
  if (j.contains("forms")) {
    if (!j["forms"].is_object()) fail("\"forms\" must be an object");
    const QuaternionAlgebra& Q = ws.require_algebra();
    for (auto it = j["forms"].begin(); it != j["forms"].end(); ++it)
      ws.forms.emplace(it.key(), mixed_from_json(Q, it.value()));
  }
  if (j.contains("polarizations")) {
    if (!j["polarizations"].is_object()) fail("\"polarizations\" must be an object");
    for (auto it = j["polarizations"].begin(); it != j["polarizations"].end(); ++it) {
      PolarizationMap pol = polarization_from_json(it.value());
      for (const auto& [k, v] : pol.labels())
        if (k >= ws.field.ordering_count())
          throw Error(ErrorKind::DomainMismatch, "polarization '" + it.key() + "' labels ordering " +
                                                     std::to_string(k) + " which does not exist");
      ws.polarizations.emplace(it.key(), std::move(pol));
    }
  }
  return ws;
}

json to_json(const Workspace& ws) {
  json out = {{"field", to_json(ws.field.minimal_polynomial())}};
  if (ws.algebra) out["algebra"] = to_json(ws.algebra->symbol());
  json forms = json::object(), pols = json::object();
  for (const auto& [k, v] : ws.forms) forms[k] = to_json(v);
  for (const auto& [k, v] : ws.polarizations) pols[k] = to_json(v);
  out["forms"] = forms;
  out["polarizations"] = pols;
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

}  // namespace mixedwitt::io
