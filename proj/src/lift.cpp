#include "intz/lift.hpp"

#include <random>
#include <string>

#include "intz/congruence.hpp"
#include "intz/fixed_divisor.hpp"
#include "intz/number_theory.hpp"
#include "intz/valuation_matrix.hpp"

namespace intz {

LiftCertificate lift_family(std::span<const IntPoly> family) {
  LiftCertificate cert;
  for (const auto& f : family) {
    if (f.is_zero() || f.deg() == 0) throw DomainError("lift_family: constant polynomial in family");
    if (!f.is_monic()) throw DomainError("lift_family: non-monic polynomial " + format_poly(f));
    cert.total_degree += f.deg();
  }
  cert.family.assign(family.begin(), family.end());
  const std::size_t n = cert.total_degree;
  cert.modulus = factorial(n);
  cert.q = next_prime(n);
  const BigInt q(static_cast<unsigned long>(cert.q));
  const BigInt q2 = q * q;
  BigInt m_inv;
  mpz_invert(m_inv.get_mpz_t(), cert.modulus.get_mpz_t(), q.get_mpz_t());

  for (const auto& f : family) {
    std::vector<BigInt> phi(f.deg());
    for (std::size_t j = 0; j < f.deg(); ++j) {
      BigInt t = -f.coeffs()[j] * m_inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
      if (j == 0) {
        BigInt c = f.coeffs()[0] + cert.modulus * t;
        if (mpz_divisible_p(c.get_mpz_t(), q2.get_mpz_t())) t += q;
      }
      phi[j] = cert.modulus * t;
    }
    IntPoly perturbation(phi);
    IntPoly lifted = f + perturbation;
    BigInt offset = 0;
    const BigInt step = q2 * cert.modulus;
    auto collides = [&](const IntPoly& g) {
      for (const auto& h : cert.lifted)
        if (h == g) return true;
      return false;
    };
    while (collides(lifted)) {
      offset += step;
      lifted += IntPoly::constant(step);
    }
    cert.perturbations.push_back(std::move(perturbation));
    cert.uniqueness_offsets.push_back(offset);
    cert.lifted.push_back(std::move(lifted));
  }
  return cert;
}

namespace {

std::uint64_t fnv1a(std::span<const IntPoly> polys) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& f : polys) {
    for (char ch : format_poly(f) + ";") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string indices_text(const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i]);
  return s + "}";
}

void structural_checks(const LiftCertificate& c, LiftReport& r, bool& primitive_ok) {
  const std::size_t k = c.family.size();
  bool sizes = c.lifted.size() == k && c.perturbations.size() == k && c.uniqueness_offsets.size() == k;
  r.items.push_back({"lift.sizes", sizes, sizes ? "" : "family, lifted, perturbation and offset counts differ"});
  if (!sizes) {
    primitive_ok = false;
    return;
  }

  std::size_t n = 0;
  bool monic_family = true;
  for (const auto& f : c.family) {
    if (f.is_zero() || f.deg() == 0 || !f.is_monic()) monic_family = false;
    else n += f.deg();
  }
  r.items.push_back({"lift.family_monic", monic_family, ""});
  r.items.push_back({"lift.total_degree", n == c.total_degree,
                     "declared " + std::to_string(c.total_degree) + ", recomputed " + std::to_string(n)});

  BigInt m = 1;
  for (auto p : primes_up_to(n)) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, factorial_valuation(n, p));
    m *= pe;
  }
  r.items.push_back({"lift.modulus", m == c.modulus, "modulus must be prod p^{v_p(n!)} over p <= n"});
  bool q_ok = is_prime(c.q) && c.q > n;
  r.items.push_back({"lift.eisenstein_prime", q_ok, "q = " + std::to_string(c.q)});

  bool shape = true, congruent = true, eisenstein = true;
  std::string shape_detail, cong_detail, eis_detail;
  primitive_ok = monic_family;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = c.family[i];
    const auto& F = c.lifted[i];
    if (F.is_zero() || F.deg() == 0 || !F.is_monic() || f.is_zero() || F.deg() != f.deg()) {
      shape = false;
      primitive_ok = false;
      shape_detail = "member " + std::to_string(i) + " is not monic of the original degree";
      continue;
    }
    IntPoly phi = F - f;
    bool phi_matches = phi == c.perturbations[i] + IntPoly::constant(c.uniqueness_offsets[i]);
    bool phi_low = phi.is_zero() || phi.deg() < f.deg();
    bool phi_div = true;
    for (const auto& a : phi.coeffs())
      if (!mpz_divisible_p(a.get_mpz_t(), c.modulus.get_mpz_t())) phi_div = false;
    if (!(phi_matches && phi_low && phi_div)) {
      congruent = false;
      cong_detail = "member " + std::to_string(i) + ": F - f is not the recorded multiple of M of lower degree";
    }
    if (!q_ok || !is_eisenstein(F, c.q)) {
      eisenstein = false;
      eis_detail = "member " + std::to_string(i) + " fails Eisenstein at q";
    }
  }
  r.items.push_back({"lift.shape", shape, shape_detail});
  r.items.push_back({"lift.congruent_mod_M", congruent, cong_detail});
  r.items.push_back({"lift.eisenstein", eisenstein, eis_detail});

  bool distinct = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c.lifted[i] == c.lifted[j]) distinct = false;
  r.items.push_back({"lift.pairwise_distinct", distinct, ""});
}

}  // namespace

LiftReport verify_lift(const LiftCertificate& cert, const LiftVerifyOptions& opts) {
  LiftReport r;
  bool usable = true;
  structural_checks(cert, r, usable);
  const std::size_t k = cert.family.size();
  if (!usable) {
    r.items.push_back({"lift.fixed_divisors", false, "skipped: certificate polynomials are malformed"});
    return r;
  }
  if (opts.replacement && opts.replacement->size() != k) {
    r.items.push_back({"lift.replacement", false, "replacement mask has the wrong length"});
    return r;
  }

  // Rows 0..k-1 hold f_i, rows k..2k-1 hold F_i. Every product considered is
  // monic of degree <= n, so v_p(d) <= v_p(n!) and n+1 points suffice.
  std::size_t n = 0;
  for (const auto& f : cert.family) n += f.deg();
  std::vector<IntPoly> polys = cert.family;
  polys.insert(polys.end(), cert.lifted.begin(), cert.lifted.end());
  auto primes = primes_up_to(n);
  std::vector<unsigned> caps;
  for (auto p : primes) caps.push_back(factorial_valuation(n, p) + 1);
  ValuationMatrix m(polys, primes, caps, n + 1);

  bool ok = true;
  std::string detail;
  auto mismatch = [&](const std::vector<std::size_t>& K, const std::string& which) {
    if (ok) detail = "d differs on K = " + indices_text(K) + " (" + which + ")";
    ok = false;
  };

  auto pow3_fits = [&] {
    std::size_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
      v *= 3;
      if (v > opts.subset_budget) return false;
    }
    return true;
  };
  const bool subsets_fit = k < 63 && (std::size_t{1} << k) <= opts.subset_budget;

  if (subsets_fit) {
    r.exhaustive_subsets = true;
    std::vector<std::vector<std::uint16_t>> base(std::size_t{1} << k);
    std::vector<std::vector<std::size_t>> slots(k);
    for (std::size_t i = 0; i < k; ++i) slots[i] = {i};
    for_each_selection(m, slots, [&](std::span<const int> choice, std::span<const std::uint16_t> ex) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (choice[i] >= 0) mask |= std::size_t{1} << i;
      base[mask].assign(ex.begin(), ex.end());
    });
    auto compare = [&](const std::vector<std::vector<std::size_t>>& alt, const std::string& label) {
      for_each_selection(m, alt, [&](std::span<const int> choice, std::span<const std::uint16_t> ex) {
        std::size_t mask = 0;
        std::vector<std::size_t> K;
        for (std::size_t i = 0; i < k; ++i)
          if (choice[i] >= 0) {
            mask |= std::size_t{1} << i;
            K.push_back(i);
          }
        ++r.selections_checked;
        if (!std::equal(ex.begin(), ex.end(), base[mask].begin())) mismatch(K, label);
      });
    };
    if (pow3_fits()) {
      r.exhaustive_mixed = true;
      std::vector<std::vector<std::size_t>> mixed(k);
      for (std::size_t i = 0; i < k; ++i) mixed[i] = {i, k + i};
      compare(mixed, "mixed replacement");
    } else {
      std::vector<std::vector<std::size_t>> lifted(k);
      for (std::size_t i = 0; i < k; ++i) lifted[i] = {k + i};
      compare(lifted, "all replaced");
      if (opts.replacement) {
        std::vector<std::vector<std::size_t>> used(k);
        for (std::size_t i = 0; i < k; ++i) used[i] = {(*opts.replacement)[i] ? k + i : i};
        compare(used, "production replacement");
      }
    }
  } else {
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ fnv1a(cert.family));
    std::vector<std::vector<bool>> subsets;
    auto add = [&](std::vector<bool> s) { subsets.push_back(std::move(s)); };
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<bool> s(k, false);
      s[i] = true;
      add(s);
      for (std::size_t j = i + 1; j < k; ++j) {
        auto t = s;
        t[j] = true;
        add(t);
      }
    }
    add(std::vector<bool>(k, true));
    for (std::size_t t = 0; t < opts.sample_size; ++t) {
      std::vector<bool> s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = rng() & 1;
      add(s);
    }
    for (const auto& s : subsets) {
      std::vector<std::size_t> K, rowsF, rowsJ, rowsUsed;
      for (std::size_t i = 0; i < k; ++i) {
        if (!s[i]) continue;
        K.push_back(i);
        rowsF.push_back(k + i);
        rowsJ.push_back((rng() & 1) ? k + i : i);
        rowsUsed.push_back(opts.replacement && (*opts.replacement)[i] ? k + i : i);
      }
      auto ref = m.subset_exponents(K);
      r.selections_checked += 3;
      if (m.subset_exponents(rowsF) != ref) mismatch(K, "all replaced");
      if (m.subset_exponents(rowsJ) != ref) mismatch(K, "sampled mixed replacement");
      if (m.subset_exponents(rowsUsed) != ref) mismatch(K, "production replacement");
    }
  }
  r.items.push_back({"lift.fixed_divisors", ok,
                     ok ? std::to_string(r.selections_checked) + " selections agree" : detail});

  // Independent big-integer route on the full family.
  bool direct = fixed_divisor_of_product(cert.family) == fixed_divisor_of_product(cert.lifted);
  r.items.push_back({"lift.direct_full_product", direct, ""});
  return r;
}

}  // namespace intz
