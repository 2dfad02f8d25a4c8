#include "intz/number_theory.hpp"

namespace intz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

unsigned factorial_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) v += static_cast<unsigned>(q);
  return v;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::map<std::uint64_t, unsigned> factor_small(const BigInt& n, std::uint64_t bound) {
  if (n <= 0) throw DomainError("factor_small: expected a positive integer");
  std::map<std::uint64_t, unsigned> out;
  BigInt rest = n;
  auto divide_out = [&](std::uint64_t p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++out[p];
    }
  };
  divide_out(2);
  for (std::uint64_t p = 3; p <= bound && rest > 1; p += 2) {
    if (BigInt(p) * p > rest) break;
    divide_out(p);
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
      throw BoundError("factor_small: composite cofactor " + to_decimal(rest) + " beyond trial bound");
    if (!rest.fits_ulong_p())
      throw BoundError("factor_small: prime factor " + to_decimal(rest) + " exceeds 64 bits");
    ++out[rest.get_ui()];
  }
  return out;
}

std::vector<BigInt> prime_multiset(const BigInt& n, std::uint64_t bound) {
  std::vector<BigInt> out;
  for (auto [p, e] : factor_small(n, bound)) {
    for (unsigned k = 0; k < e; ++k) out.emplace_back(static_cast<unsigned long>(p));
  }
  return out;
}

}  // namespace intz
