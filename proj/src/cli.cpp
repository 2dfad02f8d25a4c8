#include "intz/cli.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "intz/serialize.hpp"

namespace intz::cli {
namespace {

struct Settings {
  std::string out_path;
  bool no_verify = false;
  bool allow_asserted = false;
  unsigned threads = 0;
  std::size_t lift_budget = std::size_t{1} << 16;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void emit(const Json& j, const Settings& s, std::ostream& out) {
  if (s.out_path.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream f(s.out_path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + s.out_path);
  f << dump(j);
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw DomainError(std::string(what) + ": \"" + text + "\" is not a non-negative integer");
  return v;
}

std::vector<std::uint64_t> parse_lengths(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    out.push_back(parse_count(part, "--lengths"));
  }
  if (out.empty()) throw DomainError("--lengths: empty list");
  return out;
}

Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw DomainError("--ratio must look like num/den");
  return {parse_count(text.substr(0, slash), "--ratio"), parse_count(text.substr(slash + 1), "--ratio")};
}

VerifyOptions verify_options(const Settings& s) {
  VerifyOptions o;
  o.lift_budget = s.lift_budget;
  o.enumeration.threads = s.threads;
  o.enumeration.allow_asserted = s.allow_asserted;
  return o;
}

void log_failures(const std::vector<CheckItem>& items, std::ostream& err) {
  for (const auto& c : items)
    if (!c.passed) err << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

int finish_certificate(const Certificate& cert, const Settings& s, std::ostream& out, std::ostream& err) {
  emit(to_json(cert), s, out);
  if (s.no_verify) return kOk;
  auto report = verify_certificate(cert, verify_options(s));
  if (report.passed()) {
    err << "verified " << report.kind << ": " << report.items.size() << " checks passed\n";
    return kOk;
  }
  log_failures(report.items, err);
  return kVerificationFailed;
}

int cmd_verify(const std::string& path, const Settings& s, std::ostream& out, std::ostream& err) {
  auto cert = certificate_from_json(read_json(path));
  auto report = verify_certificate(cert, verify_options(s));
  emit(to_json(report), s, out);
  if (report.passed()) return kOk;
  log_failures(report.items, err);
  return kVerificationFailed;
}

int cmd_lengths(const std::string& path, const Settings& s, std::ostream& out) {
  IvpElement e = element_from_json(read_json(path));
  EnumerationOptions o;
  o.threads = s.threads;
  o.allow_asserted = s.allow_asserted;
  auto fs = enumerate_factorizations(e, o);
  Json list = Json::array();
  for (const auto& f : fs) list.push_back(to_json(f));
  Json j = to_json(profile_of(fs));
  j["factorizations"] = list;
  emit(j, s, out);
  return kOk;
}

int cmd_residues(std::uint64_t p, const Settings& s, std::ostream& out, std::ostream& err) {
  auto r = safe_residue_system(p);
  emit(to_json(r), s, out);
  if (s.no_verify) return kOk;
  auto rep = check_residue_system(r.elements, p);
  if (rep.passed()) return kOk;
  err << "FAIL residue system check\n";
  return kVerificationFailed;
}

int cmd_lift(const std::string& path, const Settings& s, std::ostream& out, std::ostream& err) {
  Json j = read_json(path);
  const Json& fam = j.is_object() && j.contains("family") ? j["family"] : j;
  if (!fam.is_array()) throw SchemaError("family must be an array of polynomials");
  std::vector<IntPoly> family;
  for (const auto& f : fam) family.push_back(poly_from_json(f));
  auto cert = lift_family(family);
  emit(to_json(cert), s, out);
  if (s.no_verify) return kOk;
  LiftVerifyOptions o;
  o.subset_budget = s.lift_budget;
  auto rep = verify_lift(cert, o);
  if (rep.passed()) return kOk;
  log_failures(rep.items, err);
  return kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization lengths in Int(Z): constructions, certificates and verification", "intz"};
  app.require_subcommand(1);
  Settings s;
  auto common = [&](CLI::App* c) {
    c->add_option("--out", s.out_path, "Write the JSON payload to this file instead of stdout");
    c->add_option("--threads", s.threads, "Worker threads for enumeration (0 = all cores)");
    c->add_option("--lift-budget", s.lift_budget, "Subset budget for lift verification");
  };
  auto constructive = [&](CLI::App* c) {
    common(c);
    c->add_flag("--no-verify", s.no_verify, "Skip verification of the constructed output");
  };

  std::string lengths_text, verify_path, element_path, poly_text, family_path, ratio_text;
  std::uint64_t prime = 0, n = 0, m = 0;
  bool literal = false;

  auto* construct = app.add_subcommand("construct", "Polynomial with a prescribed multiset of lengths");
  construct->add_option("--lengths", lengths_text, "Comma-separated lengths, each >= 2")->required();
  constructive(construct);

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("file", verify_path, "Certificate JSON ('-' for stdin)")->required();
  common(verify);
  verify->add_flag("--allow-asserted", s.allow_asserted, "Accept factors with asserted irreducibility");

  auto* lengths = app.add_subcommand("lengths", "All factorizations of an element and its length profile");
  lengths->add_option("--element", element_path, "Element JSON ('-' for stdin)")->required();
  common(lengths);
  lengths->add_flag("--allow-asserted", s.allow_asserted, "Accept factors with asserted irreducibility");

  auto* fixdiv = app.add_subcommand("fixdiv", "Fixed divisor of a polynomial");
  fixdiv->add_option("--poly", poly_text, "Polynomial, e.g. \"x^3-x\"")->required();
  fixdiv->add_option("--out", s.out_path, "Output file");

  auto* residues = app.add_subcommand("residues", "Safe complete residue system mod p");
  residues->add_option("--prime", prime, "The prime p")->required();
  constructive(residues);

  auto* lift = app.add_subcommand("lift", "Eisenstein lift of a monic family");
  lift->add_option("--family", family_path, "Family JSON: array of polynomials")->required();
  constructive(lift);

  auto* ex7 = app.add_subcommand("example7", "Element with lengths {2, n + 2}");
  ex7->add_option("--n", n, "n >= 1")->required();
  constructive(ex7);

  auto* ex8 = app.add_subcommand("example8", "Element with lengths {m + 1, n + 1}");
  ex8->add_option("--m", m, "m >= 1")->required();
  ex8->add_option("--n", n, "n >= m")->required();
  constructive(ex8);

  auto* elasticity = app.add_subcommand("elasticity", "Element of prescribed elasticity");
  elasticity->add_option("--ratio", ratio_text, "Rational num/den > 1")->required();
  constructive(elasticity);

  auto* t10 = app.add_subcommand("theorem10", "Irreducible H with x H a product of n + 1 irreducibles");
  t10->add_option("--n", n, "n >= 1")->required();
  t10->add_flag("--literal", literal, "Use the odd congruences instead of the even shift");
  constructive(t10);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (*construct) return finish_certificate(construct_lengths(parse_lengths(lengths_text)), s, out, err);
    if (*verify) return cmd_verify(verify_path, s, out, err);
    if (*lengths) return cmd_lengths(element_path, s, out);
    if (*fixdiv) {
      emit(to_json(fixed_divisor(parse_poly(poly_text))), s, out);
      return kOk;
    }
    if (*residues) return cmd_residues(prime, s, out, err);
    if (*lift) return cmd_lift(family_path, s, out, err);
    if (*ex7) return finish_certificate(construct_example7(n), s, out, err);
    if (*ex8) return finish_certificate(construct_example8(m, n), s, out, err);
    if (*elasticity) {
      auto r = parse_ratio(ratio_text);
      return finish_certificate(construct_elasticity(r.num, r.den), s, out, err);
    }
    if (*t10)
      return finish_certificate(
          construct_theorem10(n, literal ? Theorem10Congruences::Literal : Theorem10Congruences::EvenShift), s,
          out, err);
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace intz::cli
