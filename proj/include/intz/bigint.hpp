#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace intz {

using BigInt = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (zero polynomial, non-prime modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured search bound would be exceeded. Never silently truncated.
class BoundError : public Error {
 public:
  using Error::Error;
};

std::string to_decimal(const BigInt& v);

/// Parses an optionally signed decimal integer; throws DomainError on anything else.
BigInt parse_decimal(std::string_view text);

inline int sign(const BigInt& v) { return sgn(v); }

/// p-adic valuation of v, clamped to `cap`. Zero has infinite valuation and yields `cap`.
unsigned valuation(const BigInt& v, unsigned long p, unsigned cap);

/// Unclamped p-adic valuation of a nonzero integer.
unsigned valuation(const BigInt& v, unsigned long p);

}  // namespace intz
