#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace moran {

/// Unbounded-precision integer. Everything downstream (frequency numerators,
/// the q^((alpha+n)s) values of the large-family construction) overflows any
/// fixed-width type, so this alias is used throughout.
using Integer = mpz_class;

Integer gcd_int(const Integer& a, const Integer& b);
Integer lcm_int(const Integer& a, const Integer& b);

/// True iff d divides n (sign-insensitive). d must be nonzero.
bool divides(const Integer& d, const Integer& n);

Integer pow_int(const Integer& base, unsigned long exponent);

/// Exact k-th root: returns b with b^k = n, or nullopt when n is not a
/// perfect k-th power. Requires n >= 0, k >= 1.
std::optional<Integer> exact_root(const Integer& n, unsigned long k);

/// a^e mod m with m >= 1.
Integer pow_mod(const Integer& a, const Integer& e, const Integer& m);

/// Deterministic primality by trial division. Digit cardinalities are small
/// primes, so nothing faster is needed.
bool is_prime(const Integer& n);

/// Trial-division factorization, ascending primes. Requires n >= 1.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

struct PerfectPower {
    Integer base;
    unsigned exponent; // maximal: base is not itself a perfect power
};

/// Writes n = base^exponent with the exponent maximal. n >= 2 required;
/// non-perfect-powers come back as (n, 1).
PerfectPower perfect_power_decompose(const Integer& n);

/// Smallest s >= 1 with a^s = 1 (mod m). Requires m >= 2 and gcd(a, m) = 1;
/// the order is undefined otherwise and a std::domain_error is thrown.
Integer multiplicative_order(const Integer& a, const Integer& m);

/// Largest v with d^v | n. Requires n != 0 and d >= 2.
unsigned long padic_valuation(const Integer& n, const Integer& d);

} // namespace moran
