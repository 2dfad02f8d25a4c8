#include "intz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "intz/number_theory.hpp"

namespace intz {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::x_minus(const BigInt& r) { return IntPoly({BigInt(-r), BigInt(1)}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (is_zero()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t IntPoly::deg() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial is undefined");
  return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

RationalPoly RationalPoly::normalized() const {
  if (denominator <= 0) throw DomainError("rational polynomial needs a positive denominator");
  if (numerator.is_zero()) return {IntPoly{}, BigInt(1)};
  BigInt g = gcd(content(numerator), denominator);
  std::vector<BigInt> cs = numerator.coeffs();
  for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  BigInt d = denominator / g;
  return {IntPoly(std::move(cs)), d};
}

bool operator==(const RationalPoly& a, const RationalPoly& b) {
  auto x = a.normalized();
  auto y = b.normalized();
  return x.numerator == y.numerator && x.denominator == y.denominator;
}

// ---------------------------------------------------------------------------
// Text I/O

ParseError::ParseError(const std::string& what, std::size_t position)
    : DomainError(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    std::vector<BigInt> acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sgn = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [c, k] = term();
      c *= sgn;
      if (acc.size() <= k) acc.resize(k + 1);
      acc[k] += c;
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return IntPoly(std::move(acc));
  }

 private:
  std::pair<BigInt, std::size_t> term() {
    BigInt c(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = digits();
      have_coeff = true;
      if (!at_end() && (peek() == '.' || peek() == '/'))
        throw ParseError("non-integer coefficient", pos_);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
          throw ParseError("expected variable after '*'", pos_);
      }
    }
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      if (peek() != 'x') throw ParseError(std::string("unknown variable '") + peek() + "'", pos_);
      ++pos_;
      skip_ws();
      std::size_t k = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected exponent after '^'", pos_);
        std::size_t at = pos_;
        BigInt e = digits();
        if (e > 1000000) throw ParseError("exponent too large", at);
        k = e.get_ui();
      }
      return {c, k};
    }
    if (!have_coeff) {
      if (at_end()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return {c, 0};
  }

  BigInt digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& cs = f.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const BigInt& c = cs[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    BigInt mag = abs(c);
    if (k == 0 || mag != 1) out += to_decimal(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntPoly product(std::span<const IntPoly> fs) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& f : fs) acc *= f;
  return acc;
}

BigInt evaluate(const IntPoly& f, const BigInt& c) {
  BigInt acc = 0;
  const auto& cs = f.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc *= c;
    acc += cs[k];
  }
  return acc;
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(const IntPoly& f) { return content(f) == 1; }

PrimitiveDecomposition primitive_part(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("primitive_part: zero polynomial");
  PrimitiveDecomposition r;
  r.content = content(f);
  r.sign = f.leading() < 0 ? -1 : 1;
  std::vector<BigInt> cs = f.coeffs();
  for (auto& c : cs) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), r.content.get_mpz_t());
    if (r.sign < 0) c = -c;
  }
  r.primitive = IntPoly(std::move(cs));
  return r;
}

std::vector<BigInt> binomial_coefficients(const IntPoly& f) {
  if (f.is_zero()) return {};
  std::size_t n = f.deg();
  std::vector<BigInt> table(n + 1);
  for (std::size_t c = 0; c <= n; ++c) table[c] = evaluate(f, BigInt(static_cast<unsigned long>(c)));
  std::vector<BigInt> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = table[0];
    for (std::size_t i = 0; i + 1 < table.size() - k; ++i) table[i] = table[i + 1] - table[i];
  }
  return out;
}

RationalPoly from_binomial_coefficients(std::span<const BigInt> coords) {
  if (coords.empty()) return {IntPoly{}, BigInt(1)};
  const std::size_t top = coords.size() - 1;
  const BigInt denom = factorial(top);
  IntPoly numerator;
  IntPoly falling = IntPoly::constant(1);
  for (std::size_t k = 0; k <= top; ++k) {
    if (k > 0) falling *= IntPoly::x_minus(BigInt(static_cast<unsigned long>(k - 1)));
    if (coords[k] == 0) continue;
    BigInt scale = denom / factorial(k);
    numerator += falling * BigInt(coords[k] * scale);
  }
  return RationalPoly{numerator, denom}.normalized();
}

IntPoly from_roots(std::span<const BigInt> roots) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& r : roots) acc *= IntPoly::x_minus(r);
  return acc;
}

}  // namespace intz
