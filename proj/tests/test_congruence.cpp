#include "doctest.h"
#include "intz/congruence.hpp"

using namespace intz;

TEST_CASE("crt") {
  std::vector<Congruence> s{{BigInt(2), BigInt(3)}, {BigInt(3), BigInt(5)}, {BigInt(2), BigInt(7)}};
  CHECK(crt(s) == 23);
  std::vector<Congruence> bad{{BigInt(1), BigInt(4)}, {BigInt(1), BigInt(6)}};
  CHECK_THROWS_AS(crt(bad), DomainError);
  std::vector<Congruence> neg{{BigInt(-1), BigInt(5)}, {BigInt(0), BigInt(1)}};
  CHECK(crt(neg) == 4);
}

TEST_CASE("safe residue systems") {
  auto r = safe_residue_system(5);
  CHECK(r.elements == std::vector<BigInt>{BigInt(1), BigInt(7), BigInt(13), BigInt(19), BigInt(25)});
  CHECK(safe_residue_system(2).elements == std::vector<BigInt>{BigInt(1), BigInt(0)});
  CHECK(safe_residue_system(3).elements == std::vector<BigInt>{BigInt(1), BigInt(5), BigInt(3)});
  CHECK_THROWS_AS(safe_residue_system(9), DomainError);
  for (auto p : primes_up_to(40)) CHECK(check_residue_system(safe_residue_system(p).elements, p).passed());
}

TEST_CASE("residue check catches defects") {
  std::vector<BigInt> consecutive{BigInt(0), BigInt(1), BigInt(2), BigInt(3), BigInt(4)};
  auto rep = check_residue_system(consecutive, 5);
  CHECK(rep.complete_mod_p);
  CHECK(rep.offending_prime == 2u);
  CHECK_FALSE(rep.passed());
  std::vector<BigInt> incomplete{BigInt(1), BigInt(7), BigInt(13), BigInt(19), BigInt(26)};
  auto r2 = check_residue_system(incomplete, 5);
  CHECK_FALSE(r2.complete_mod_p);
  CHECK(r2.missing_mod_p == std::vector<std::uint64_t>{0});
  CHECK_FALSE(check_residue_system(consecutive, 6).p_is_prime);
}

TEST_CASE("eisenstein") {
  CHECK(is_eisenstein(parse_poly("x^2 + 2x + 2"), 2));
  CHECK_FALSE(is_eisenstein(parse_poly("x^2 + 2x + 4"), 2));
  CHECK_FALSE(is_eisenstein(parse_poly("2x^2 + 2x + 2"), 2));
  CHECK_FALSE(is_eisenstein(parse_poly("x^2 + x + 2"), 2));
  CHECK_THROWS_AS(is_eisenstein(parse_poly("5"), 5), DomainError);
}
