#pragma once

#include <string>
#include <vector>

#include "intz/construct.hpp"
#include "intz/report.hpp"

namespace intz {

struct VerifyOptions {
  std::size_t lift_budget = std::size_t{1} << 16;
  EnumerationOptions enumeration;
};

struct VerificationReport {
  std::string kind;
  std::vector<CheckItem> items;
  std::vector<std::size_t> expected_lengths;
  std::vector<std::size_t> enumerated_lengths;
  bool passed() const { return !items.empty() && all_passed(items); }
};

/// Re-derives every claim of a certificate from its raw content: residue
/// system conditions, lift validity, membership, exact denominators,
/// irreducibility of the factors, and the enumerated length multiset.
VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& opts = {});

}  // namespace intz
