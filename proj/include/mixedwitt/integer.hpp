#pragma once

#include <map>
#include <vector>

#include "mixedwitt/polynomial.hpp"

// Elementary integer number theory used by the local (Hilbert symbol)
// computations over Q.
namespace mixedwitt::integer {

bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0). Trial division followed by Pollard rho.
std::map<Integer, unsigned> factor(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

/// Signed squarefree integer in the square class of r (r != 0).
Integer squarefree_part(const Rational& r);

/// Exponent of p in |n| (n != 0).
unsigned valuation(const Integer& n, const Integer& p);

/// Legendre symbol (n / p) for an odd prime p not dividing n.
int legendre(const Integer& n, const Integer& p);

bool is_square(const Rational& r);

}  // namespace mixedwitt::integer
