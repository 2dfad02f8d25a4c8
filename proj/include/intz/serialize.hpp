#pragma once

#include <string>

#include "json.hpp"

#include "intz/construct.hpp"
#include "intz/fixed_divisor.hpp"
#include "intz/lift.hpp"
#include "intz/monoid.hpp"
#include "intz/verify.hpp"

namespace intz {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or schema-violating JSON input.
class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Big integers are decimal strings; counts, primes and indices are JSON numbers.
Json to_json(const BigInt& v);
Json to_json(const IntPoly& f);
Json to_json(const FixedDivisor& d);
Json to_json(const IvpElement& e);
Json to_json(const Factorization& f);
Json to_json(const LengthProfile& p);
Json to_json(const ResidueSystem& r);
Json to_json(const LiftCertificate& c);
Json to_json(const LiftReport& r);
Json to_json(const Certificate& c);
Json to_json(const VerificationReport& r);

BigInt bigint_from_json(const Json& j);
/// Array of decimal strings (ascending degree) or polynomial text.
IntPoly poly_from_json(const Json& j);
FixedDivisor fixed_divisor_from_json(const Json& j);
/// "certified" flags are re-derived from the polynomials; a claim that cannot
/// be substantiated is downgraded to asserted.
IvpElement element_from_json(const Json& j);
ResidueSystem residue_system_from_json(const Json& j);
LiftCertificate lift_certificate_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace intz
