#include "mixedwitt/numberfield.hpp"

#include <algorithm>
#include <cmath>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/integer.hpp"

namespace mixedwitt {

struct NumberField::Data {
  Polynomial f;
  std::vector<Polynomial> sturm;
  // Isolating intervals of the real roots, ascending.
  std::vector<std::pair<Rational, Rational>> roots;
};

namespace {

// Bisects (lo, hi] until every piece holds at most one root; f squarefree.
void isolate(const std::vector<Polynomial>& chain, Rational lo, Rational hi,
             std::vector<std::pair<Rational, Rational>>& out) {
  const Polynomial& f = chain.front();
  int n = count_real_roots(chain, lo, hi);
  if (n == 0) return;
  if (n == 1 && f.sign_at(hi) != 0) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  // Keep endpoints off the roots so each interval stays open at both ends.
  for (int k = 3; f.sign_at(mid) == 0; ++k) mid = (lo * (k - 1) + hi) / k;
  isolate(chain, lo, mid, out);
  isolate(chain, mid, hi, out);
}

std::pair<Rational, Rational> bisect_once(const Polynomial& f, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  int sm = f.sign_at(mid);
  if (sm == 0) {
    // Only reachable for a rational root (degree one): collapse around it.
    Rational w = (hi - lo) / 4;
    return {mid - w, mid + w};
  }
  if (sm == f.sign_at(lo)) return {mid, hi};
  return {lo, mid};
}

// Monic integer polynomial with the same irreducibility as the monic rational f:
// D^n f(s / D) for D the lcm of the denominators.
std::vector<Integer> integral_model(const Polynomial& f) {
  Integer d = 1;
  for (const auto& c : f.coeffs()) d = lcm(d, Integer(c.get_den()));
  const int n = f.degree();
  std::vector<Integer> g(static_cast<std::size_t>(n + 1));
  Integer dk = 1;  // D^(n-k)
  for (int k = n; k >= 0; --k) {
    Rational v = f.coeffs()[static_cast<std::size_t>(k)] * Rational(dk);
    g[static_cast<std::size_t>(k)] = v.get_num();
    dk *= d;
  }
  return g;
}

Integer eval_int(const std::vector<Integer>& p, long x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool divides_exactly(const std::vector<Integer>& g, const std::vector<Integer>& h) {
  // Monic h: integer long division.
  std::vector<Integer> rem = g;
  const std::size_t dh = h.size() - 1;
  for (std::size_t k = rem.size() - 1; k >= dh; --k) {
    Integer q = rem[k];
    if (q != 0)
      for (std::size_t i = 0; i <= dh; ++i) rem[k - dh + i] -= q * h[i];
    if (k == dh) break;
  }
  for (std::size_t i = 0; i < dh; ++i)
    if (rem[i] != 0) return false;
  return true;
}

// Enumerates monic integer candidates of degree k under the Landau-Mignotte
// coefficient bounds; the constant term ranges over divisors of g(0).
bool has_factor_of_degree(const std::vector<Integer>& g, int k) {
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  auto binom = [](int n, int r) {
    long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
  };
  std::vector<Integer> bounds(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) bounds[static_cast<std::size_t>(i)] = norm * binom(k, i);

  double space = 1;
  for (int i = 1; i < k; ++i) space *= 2 * bounds[static_cast<std::size_t>(i)].get_d() + 1;
  if (space > 5e8)
    throw Error(ErrorKind::InvalidArgument,
                "coefficients too large to certify irreducibility by exhaustive factor search");

  const Integer g1 = eval_int(g, 1), gm1 = eval_int(g, -1);
  std::vector<Integer> consts;
  for (const auto& d : integer::divisors(g[0])) {
    if (d > bounds[0]) break;
    consts.push_back(d);
    consts.push_back(-d);
  }
  std::vector<Integer> h(static_cast<std::size_t>(k + 1));
  h[static_cast<std::size_t>(k)] = 1;
  // Odometer over the middle coefficients.
  for (const auto& c0 : consts) {
    h[0] = c0;
    for (int i = 1; i < k; ++i) h[static_cast<std::size_t>(i)] = -bounds[static_cast<std::size_t>(i)];
    while (true) {
      Integer h1 = eval_int(h, 1), hm1 = eval_int(h, -1);
      bool plausible = h1 != 0 && hm1 != 0 && mpz_divisible_p(g1.get_mpz_t(), h1.get_mpz_t()) &&
                       mpz_divisible_p(gm1.get_mpz_t(), hm1.get_mpz_t());
      if (plausible && divides_exactly(g, h)) return true;
      int i = 1;
      for (; i < k; ++i) {
        auto& hi = h[static_cast<std::size_t>(i)];
        if (hi < bounds[static_cast<std::size_t>(i)]) {
          ++hi;
          break;
        }
        hi = -bounds[static_cast<std::size_t>(i)];
      }
      if (i >= k) break;
    }
  }
  return false;
}

}  // namespace

bool has_nontrivial_factor(const Polynomial& f) {
  const int n = f.degree();
  if (n > kMaxFieldDegree) throw Error(ErrorKind::DegreeTooLarge, "degree above " + std::to_string(kMaxFieldDegree));
  if (n <= 1) return false;
  std::vector<Integer> g = integral_model(f.monic());
  if (g[0] == 0) return true;
  // Rational root test: roots of a monic integer polynomial are integers dividing g(0).
  for (const auto& d : integer::divisors(g[0])) {
    for (const Integer& r : {d, Integer(-d)}) {
      Integer acc = 0;
      for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * r + *it;
      if (acc == 0) return true;
    }
  }
  for (int k = 2; 2 * k <= n; ++k)
    if (has_factor_of_degree(g, k)) return true;
  return false;
}

NumberField NumberField::make(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, f.to_string() + " is not monic");
  if (f.degree() > kMaxFieldDegree)
    throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(f.degree()) + " exceeds " +
                                               std::to_string(kMaxFieldDegree));
  if (gcd(f, f.derivative()).degree() > 0) throw Error(ErrorKind::NotSquarefree, f.to_string());
  if (has_nontrivial_factor(f)) throw Error(ErrorKind::ReducibleDetected, f.to_string() + " has a nontrivial factor");

  auto data = std::make_shared<Data>();
  data->f = f;
  data->sturm = sturm_chain(f);
  const Rational bound = cauchy_bound(f);
  isolate(data->sturm, -bound, bound, data->roots);
  // Pre-refine so later sign determinations start from narrow intervals.
  const Rational width(1, 1 << 20);
  for (auto& [lo, hi] : data->roots)
    while (hi - lo > width) std::tie(lo, hi) = bisect_once(f, lo, hi);
  return NumberField(std::move(data));
}

NumberField NumberField::rationals() { return make(Polynomial{0, 1}); }

int NumberField::degree() const noexcept { return data_->f.degree(); }

const Polynomial& NumberField::minimal_polynomial() const noexcept { return data_->f; }

std::size_t NumberField::ordering_count() const noexcept { return data_->roots.size(); }

Ordering NumberField::ordering(std::size_t index) const {
  if (index >= data_->roots.size())
    throw Error(ErrorKind::InvalidArgument, "no ordering with index " + std::to_string(index));
  const auto& [lo, hi] = data_->roots[index];
  return Ordering(*this, lo, hi, index);
}

std::vector<Ordering> NumberField::orderings() const {
  std::vector<Ordering> out;
  out.reserve(data_->roots.size());
  for (std::size_t i = 0; i < data_->roots.size(); ++i) out.push_back(ordering(i));
  return out;
}

bool operator==(const NumberField& lhs, const NumberField& rhs) {
  return lhs.data_ == rhs.data_ || lhs.data_->f == rhs.data_->f;
}

std::vector<Ordering> real_orderings(const NumberField& field) { return field.orderings(); }

// ---------------------------------------------------------------------------

FieldElement::FieldElement(NumberField field, const Rational& c)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_.degree())) {
  coeffs_[0] = c;
}

FieldElement::FieldElement(NumberField field, const Polynomial& representative)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_.degree())) {
  Polynomial r = representative % field_.minimal_polynomial();
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) coeffs_[k] = r.coeffs()[k];
}

FieldElement FieldElement::generator(const NumberField& field) {
  return FieldElement(field, Polynomial::monomial(1, 1));
}

FieldElement FieldElement::parse(const NumberField& field, std::string_view text) {
  return FieldElement(field, parse_polynomial(text));
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::NonRationalField, to_string() + " is not rational");
  return coeffs_[0];
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorKind::FieldMismatch, "operands live in " + field_.minimal_polynomial().to_string() + " and " +
                                              other.field_.minimal_polynomial().to_string());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // f irreducible, so gcd(a, f) = 1 and s*a + u*f = 1.
  auto eg = extended_gcd(representative(), field_.minimal_polynomial());
  return FieldElement(field_, eg.s);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this, out(field_, Rational(1));
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  *this = FieldElement(field_, representative() * rhs.representative());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + field_.minimal_polynomial().to_string());
  return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement operator*(FieldElement a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

FieldElement operator+(FieldElement a, const Rational& c) {
  a.coeffs_[0] += c;
  return a;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

std::string FieldElement::to_string() const { return representative().to_string(); }

// ---------------------------------------------------------------------------

Ordering::Ordering(NumberField field, Rational lo, Rational hi, std::size_t index)
    : field_(std::move(field)), lo_(std::move(lo)), hi_(std::move(hi)), index_(index) {
  if (!(lo_ < hi_)) throw Error(ErrorKind::InvalidArgument, "ordering interval must satisfy lo < hi");
}

Ordering Ordering::refined() const {
  auto [lo, hi] = bisect_once(field_.minimal_polynomial(), lo_, hi_);
  return Ordering(field_, lo, hi, index_);
}

Ordering Ordering::refined_to(const Rational& width) const {
  Ordering out = *this;
  while (out.hi_ - out.lo_ > width) out = out.refined();
  return out;
}

int sign_at(const FieldElement& a, const Ordering& P) {
  if (!(a.field() == P.field())) throw Error(ErrorKind::FieldMismatch, "element and ordering over different fields");
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "sign of zero is undefined");
  const Polynomial rep = a.representative();
  if (rep.degree() == 0) return sign(rep.leading());
  const Polynomial& f = P.field().minimal_polynomial();

  // A common root with f inside the interval would make the bisection below
  // run forever; certify there is none.
  Polynomial g = gcd(rep, f);
  if (g.degree() > 0) {
    auto chain = sturm_chain(g);
    if (count_real_roots(chain, P.lo(), P.hi()) > 0)
      throw Error(ErrorKind::ZeroElement, a.to_string() + " vanishes at the ordering");
  }
  Rational lo = P.lo(), hi = P.hi();
  while (true) {
    RationalInterval v = evaluate_on(rep, {lo, hi});
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    std::tie(lo, hi) = bisect_once(f, lo, hi);
  }
}

}  // namespace mixedwitt
