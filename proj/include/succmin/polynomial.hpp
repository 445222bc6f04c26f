#pragma once

// Dense univariate polynomials, coefficients stored lowest degree first.

#include "succmin/core.hpp"

#include <cstdint>
#include <set>

namespace succmin::poly {

using PolyZ = std::vector<Integer>;
using PolyQ = std::vector<Rational>;

int degree(const PolyQ& f);
PolyQ to_rational(const PolyZ& f);
PolyQ derivative(const PolyQ& f);
PolyQ remainder(PolyQ a, const PolyQ& b);
/// Monic gcd over Q (the zero polynomial's gcd with b is b made monic).
PolyQ gcd(PolyQ a, PolyQ b);
bool is_squarefree(const PolyZ& f);

/// Degrees of the irreducible factors of f mod p (with multiplicity); empty
/// when f mod p is not squarefree or drops degree.
std::vector<int> factor_degrees_mod_p(const PolyZ& f, std::uint64_t p);

enum class Irreducibility { Certified, Unverified };

/// Certifies irreducibility from factorization patterns modulo small primes:
/// a rational factor of degree d would need a sub-multiset of factor degrees
/// summing to d for every good prime.
Irreducibility check_irreducible(const PolyZ& f, int prime_count = 40);

}  // namespace succmin::poly
