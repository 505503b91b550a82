#pragma once

// Integer helpers shared by the field and cyclic-code modules.

#include <cstdint>
#include <utility>
#include <vector>

namespace eccir::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Sorted list of all positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Smallest m >= 1 with q^m = 1 (mod n). Requires gcd(q, n) = 1 and n >= 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

// Returns (p, m) when q = p^m with p prime, otherwise throws std::invalid_argument.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

// Checked p^m; throws std::overflow_error when the result exceeds 2^63.
std::uint64_t checked_pow(std::uint64_t p, unsigned m);

}  // namespace eccir::nt
