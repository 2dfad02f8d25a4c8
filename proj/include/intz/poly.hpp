#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intz/bigint.hpp"

namespace intz {

/// Dense polynomial in Z[x], coefficients in ascending degree order.
///
/// Always canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all. Its degree is "none" (std::nullopt).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  /// The monic linear polynomial x - r.
  static IntPoly x_minus(const BigInt& r);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Degree of a polynomial known to be nonzero; throws DomainError on zero.
  std::size_t deg() const;

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b);
  /// Total order: by degree, then by coefficients from the top down.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Polynomial in Q[x] as numerator / denominator.
struct RationalPoly {
  IntPoly numerator;
  BigInt denominator{1};

  /// Divides out gcd(content(numerator), denominator). Zero becomes 0/1.
  RationalPoly normalized() const;
  friend bool operator==(const RationalPoly& a, const RationalPoly& b);
};

/// Parses an integer polynomial in x. Grammar: terms joined by + or -, each
/// term `c`, `x`, `c x`, `c*x`, `x^k`, `c*x^k`; whitespace is free.
IntPoly parse_poly(std::string_view text);

/// Canonical text: descending powers, explicit signs, `x^k`, no `*`.
std::string format_poly(const IntPoly& f);

/// Position-carrying parse failure.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

IntPoly product(std::span<const IntPoly> fs);
BigInt evaluate(const IntPoly& f, const BigInt& c);
BigInt content(const IntPoly& f);

struct PrimitiveDecomposition {
  int sign = 1;
  IntPoly primitive;
  BigInt content;
};

/// f = sign * content * primitive, primitive has content 1 and positive leading coefficient.
PrimitiveDecomposition primitive_part(const IntPoly& f);

bool is_primitive(const IntPoly& f);

/// Forward differences Delta^k f(0), k = 0..deg f: the coordinates of f in the
/// binomial basis C(x,0), C(x,1), ...
std::vector<BigInt> binomial_coefficients(const IntPoly& f);

/// Inverse transform: sum_k c_k C(x,k) as a normalized rational polynomial.
RationalPoly from_binomial_coefficients(std::span<const BigInt> coords);

/// Monic product of (x - r) over the roots; repeated roots allowed.
IntPoly from_roots(std::span<const BigInt> roots);

}  // namespace intz
