#include "mixedwitt/integer.hpp"

#include <algorithm>

#include "mixedwitt/errors.hpp"

namespace mixedwitt::integer {

namespace {

constexpr unsigned long kTrialLimit = 20000;

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    const unsigned long m = 64;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        g = ::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = ::gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::map<Integer, unsigned> factor(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::ZeroArgument, "cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer squarefree_part(const Rational& r) {
  if (r == 0) throw Error(ErrorKind::ZeroArgument, "zero has no square class");
  // n/d and n*d differ by the square d^2.
  Integer m = r.get_num() * r.get_den();
  Integer out = sgn(m) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(m))
    if (e % 2 == 1) out *= p;
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int legendre(const Integer& n, const Integer& p) { return mpz_legendre(n.get_mpz_t(), p.get_mpz_t()); }

bool is_square(const Rational& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

}  // namespace mixedwitt::integer
