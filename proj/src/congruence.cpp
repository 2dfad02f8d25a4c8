#include "intz/congruence.hpp"

#include <string>

namespace intz {

BigInt crt(std::span<const Congruence> system) {
  BigInt x = 0, modulus = 1;
  for (const auto& [residue, m] : system) {
    if (m < 1) throw DomainError("crt: modulus must be positive");
    if (gcd(modulus, m) != 1) throw DomainError("crt: moduli are not pairwise coprime");
    // x + modulus * t == residue (mod m)
    BigInt inv, diff = residue - x, t;
    if (m == 1) {
      continue;
    }
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
    t = diff * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    x += modulus * t;
    modulus *= m;
  }
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return x;
}

ResidueSystem safe_residue_system(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("safe_residue_system: " + std::to_string(p) + " is not prime");
  ResidueSystem rs;
  rs.p = p;
  auto smaller = primes_up_to(p - 1);
  for (std::uint64_t k = 1; k <= p; ++k) {
    std::vector<Congruence> sys;
    sys.push_back({BigInt(static_cast<unsigned long>(k % p)), BigInt(static_cast<unsigned long>(p))});
    for (auto q : smaller) sys.push_back({BigInt(1), BigInt(static_cast<unsigned long>(q))});
    rs.elements.push_back(crt(sys));
  }
  return rs;
}

namespace {

std::vector<std::uint64_t> missing_residues(std::span<const BigInt> elements, std::uint64_t q) {
  std::vector<bool> hit(q, false);
  for (const auto& s : elements) hit[mpz_fdiv_ui(s.get_mpz_t(), q)] = true;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < q; ++r)
    if (!hit[r]) out.push_back(r);
  return out;
}

}  // namespace

ResidueCheckReport check_residue_system(std::span<const BigInt> elements, std::uint64_t p) {
  ResidueCheckReport r;
  r.p_is_prime = is_prime(p);
  if (p == 0) return r;
  r.missing_mod_p = missing_residues(elements, p);
  r.complete_mod_p = r.missing_mod_p.empty();
  std::uint64_t top = std::max<std::uint64_t>(p - 1, elements.size());
  for (auto q : primes_up_to(top)) {
    if (q == p) continue;
    auto miss = missing_residues(elements, q);
    PrimeWitness w{q, std::nullopt};
    if (!miss.empty()) w.missing_residue = miss.front();
    if (miss.empty() && !r.offending_prime) r.offending_prime = q;
    r.witnesses.push_back(w);
  }
  return r;
}

bool is_eisenstein(const IntPoly& f, std::uint64_t q) {
  if (f.is_zero() || f.deg() == 0) throw DomainError("is_eisenstein: polynomial must be non-constant");
  const auto& cs = f.coeffs();
  if (mpz_divisible_ui_p(cs.back().get_mpz_t(), q)) return false;
  for (std::size_t k = 0; k + 1 < cs.size(); ++k)
    if (!mpz_divisible_ui_p(cs[k].get_mpz_t(), q)) return false;
  BigInt q2 = BigInt(static_cast<unsigned long>(q)) * static_cast<unsigned long>(q);
  return !mpz_divisible_p(cs[0].get_mpz_t(), q2.get_mpz_t());
}

}  // namespace intz
