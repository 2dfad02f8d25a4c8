#include "intz/bigint.hpp"

#include <cctype>

namespace intz {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(i));
  BigInt v(digits, 10);
  if (text[0] == '-') v = -v;
  return v;
}

unsigned valuation(const BigInt& v, unsigned long p, unsigned cap) {
  if (v == 0) return cap;
  if (p == 2) {
    auto bits = mpz_scan1(v.get_mpz_t(), 0);
    return bits < cap ? static_cast<unsigned>(bits) : cap;
  }
  unsigned k = 0;
  if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) return 0;
  BigInt t = v;
  while (k < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++k;
  }
  return k;
}

unsigned valuation(const BigInt& v, unsigned long p) {
  if (v == 0) throw DomainError("valuation of zero is infinite");
  BigInt t;
  mpz_t pz;
  mpz_init_set_ui(pz, p);
  auto k = mpz_remove(t.get_mpz_t(), v.get_mpz_t(), pz);
  mpz_clear(pz);
  return static_cast<unsigned>(k);
}

}  // namespace intz
