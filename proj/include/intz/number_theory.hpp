#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "intz/bigint.hpp"

namespace intz {

bool is_prime(std::uint64_t n);

/// All primes <= n in increasing order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// v_p(n!) by Legendre's formula.
unsigned factorial_valuation(std::uint64_t n, std::uint64_t p);

BigInt factorial(std::uint64_t n);

/// Prime factorization of a positive integer by trial division with primes <= bound.
/// A surviving cofactor > 1 is accepted only if it is (probably) prime; otherwise
/// BoundError is thrown.
std::map<std::uint64_t, unsigned> factor_small(const BigInt& n, std::uint64_t bound = 1000000);

/// The same factorization as a sorted multiset of primes.
std::vector<BigInt> prime_multiset(const BigInt& n, std::uint64_t bound = 1000000);

}  // namespace intz
