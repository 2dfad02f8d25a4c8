// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "intz/cli.hpp"
#include "intz/serialize.hpp"
#include "oracles.hpp"

using namespace intz;

namespace {

// Per-case wall-clock limit for the prescribed-lengths round trips.
constexpr double kCaseSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "intz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("intz_acceptance_" + name)).string();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ac1() {
  Outcome o;
  const std::vector<std::vector<std::size_t>> cases{{2, 3}, {2, 2}, {2, 5}, {3, 4, 6}, {2, 2, 2, 5, 5}, {4}, {2}};
  double worst = 0;
  for (const auto& lengths : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string path = scratch("ac1_" + join(lengths) + ".json");
    auto c = cli_run({"construct", "--lengths", join(lengths), "--out", path, "--no-verify"});
    auto v = cli_run({"verify", path});
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (c.code != 0 || v.code != 0) {
      o.fail("{" + join(lengths) + "}: exit codes " + std::to_string(c.code) + "/" + std::to_string(v.code));
      continue;
    }
    Json report = Json::parse(v.out);
    auto got = report["enumerated_lengths"].get<std::vector<std::size_t>>();
    auto want = lengths;
    std::sort(want.begin(), want.end());
    if (got != want) o.fail("{" + join(lengths) + "}: enumerated {" + join(got) + "}");
    if (dt >= kCaseSeconds) o.fail("{" + join(lengths) + "} took " + std::to_string(dt) + " s");
  }
  if (o.pass) o.detail = "7 multisets round-trip; slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::uint64_t n = 0; n <= 4; ++n) {
    auto cert = construct_example7(n);
    auto r = verify_certificate(cert);
    std::vector<std::size_t> want{2, static_cast<std::size_t>(n + 2)};
    if (!r.passed() || r.enumerated_lengths != want) {
      o.fail("n = " + std::to_string(n) + ": lengths {" + join(r.enumerated_lengths) + "}");
      continue;
    }
    if (n >= 1) {
      auto p = length_profile(cert.product.element);
      std::uint64_t num = n + 2, den = 2, g = std::gcd(num, den);
      if (!(p.elasticity == Ratio{num / g, den / g})) o.fail("n = " + std::to_string(n) + ": elasticity");
    }
  }
  if (o.pass) o.detail = "n = 0..4: two factorizations, lengths {2, n+2}, elasticity (n+2)/2";
  return o;
}

Outcome ac3() {
  Outcome o;
  for (auto [m, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {1, 2}, {2, 3}, {1, 5}}) {
    auto r = verify_certificate(construct_example8(m, n));
    std::vector<std::size_t> want{static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n + 1)};
    if (!r.passed() || r.enumerated_lengths != want)
      o.fail("(" + std::to_string(m) + "," + std::to_string(n) + "): lengths {" + join(r.enumerated_lengths) + "}");
  }
  auto e = cli_run({"elasticity", "--ratio", "7/3"});
  if (e.code != 0) {
    o.fail("elasticity --ratio 7/3 exited " + std::to_string(e.code));
  } else {
    auto cert = std::get<Example8Certificate>(certificate_from_json(Json::parse(e.out)));
    auto p = length_profile(cert.product.element);
    if (!(p.elasticity == Ratio{7, 3})) o.fail("elasticity is " + std::to_string(p.elasticity.num) + "/" + std::to_string(p.elasticity.den));
  }
  if (o.pass) o.detail = "four (m,n) pairs and elasticity exactly 7/3";
  return o;
}

Outcome ac4() {
  Outcome o;
  auto cert = std::get<Theorem9Certificate>(construct_lengths(std::vector<std::uint64_t>{2, 3}));
  auto r = verify_certificate(cert);
  const std::size_t deg = cert.product.element.degree();
  if (cert.N != 4 || cert.product.p != 5 || cert.s != 1 || deg != 9)
    o.fail("N = " + std::to_string(cert.N) + ", p = " + std::to_string(cert.product.p) + ", s = " +
           std::to_string(cert.s) + ", deg H = " + std::to_string(deg));
  if (!r.passed() || r.enumerated_lengths != std::vector<std::size_t>{2, 3}) o.fail("enumeration disagrees");
  if (o.pass) o.detail = "N = 4, p = 5, s = 1, deg H = 9, lengths {2,3}";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 3; ++n) {
    auto r = verify_certificate(construct_theorem10(n));
    if (!r.passed()) {
      std::string bad;
      for (const auto& i : r.items)
        if (!i.passed) bad += " " + i.name;
      o.fail("n = " + std::to_string(n) + ":" + bad);
    }
    auto lit = verify_certificate(construct_theorem10(n, Theorem10Congruences::Literal));
    bool flagged = false;
    for (const auto& i : lit.items)
      if (i.name == "theorem10.G1_irreducible" && !i.passed) flagged = true;
    if (!flagged || lit.passed()) o.fail("n = " + std::to_string(n) + ": odd congruences not rejected");
  }
  if (o.pass) o.detail = "n = 1..3 verified; odd congruences rejected at the first claimed factor";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0006);
  std::vector<IntPoly> sample;
  for (int t = 0; t < 500; ++t) sample.push_back(oracle::random_primitive(rng, 10, 1000000));
  std::size_t nontrivial = 0;
  for (const auto& f : sample) {
    auto d = fixed_divisor(f);
    if (fixed_divisor_oracle(f) != d || oracle::binomial_gcd(f) != d.value) o.fail("disagreement at " + format_poly(f));
    if (d.value != 1) ++nontrivial;
    for (auto [p, e] : d.factors)
      if (e > factorial_valuation(f.deg(), p)) o.fail("v_p bound violated at " + format_poly(f));
  }
  for (int t = 0; t < 200; ++t) {
    const IntPoly& f = sample[rng() % sample.size()];
    const IntPoly& g = sample[rng() % sample.size()];
    if (fixed_divisor(f * g).value % (fixed_divisor(f).value * fixed_divisor(g).value) != 0)
      o.fail("d(f)d(g) does not divide d(fg)");
  }
  if (o.pass) o.detail = "500 polynomials (" + std::to_string(nontrivial) + " with d > 1), 200 pairs";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0007);
  std::size_t total = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<IntPoly> fs;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) fs.push_back(IntPoly::x_minus(BigInt(static_cast<long>(rng() % 21) - 10)));
    auto divs = oracle::divisors(oracle::fixed_divisor_values(fs));
    BigInt b = divs[rng() % divs.size()];
    auto e = make_element(1, BigInt(1), b, fs);
    auto naive = oracle::naive_factorizations(e);
    auto fast = enumerate_factorizations(e);
    std::set<oracle::Key> got;
    for (const auto& f : fast) got.insert(oracle::key_of(e, f));
    for (std::size_t i = 0; i < fast.size(); ++i)
      for (std::size_t j = i + 1; j < fast.size(); ++j)
        if (essentially_equal(e, fast[i], fast[j])) o.fail("duplicate factorization");
    if (got != naive || got.size() != fast.size())
      o.fail("element " + std::to_string(t) + ": " + std::to_string(fast.size()) + " vs naive " +
             std::to_string(naive.size()));
    total += fast.size();
  }
  std::vector<IntPoly> hand{parse_poly("x"), parse_poly("x - 1"), parse_poly("x - 2")};
  auto fs = enumerate_factorizations(make_element(1, BigInt(1), BigInt(2), hand));
  if (fs.size() != 3 || !std::all_of(fs.begin(), fs.end(), [](const Factorization& f) { return f.length() == 2; }))
    o.fail("x(x-1)(x-2)/2 does not have three factorizations of length 2");
  if (o.pass) o.detail = "100 elements, " + std::to_string(total) + " factorizations match; x(x-1)(x-2)/2 gives 3 of length 2";
  return o;
}

Outcome ac8() {
  Outcome o;
  auto ps = primes_up_to(97);
  for (auto p : ps)
    if (!check_residue_system(safe_residue_system(p).elements, p).passed()) o.fail("p = " + std::to_string(p));
  if (o.pass) o.detail = std::to_string(ps.size()) + " primes";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(0x5eed0009);
  std::size_t checked = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t size = 1 + rng() % 8;
    std::size_t budget = 16;
    std::vector<IntPoly> fam;
    for (std::size_t i = 0; i < size && budget > 0; ++i) {
      if (i > 0 && rng() % 4 == 0) {
        const IntPoly prev = fam[rng() % fam.size()];
        if (prev.deg() <= budget) {
          fam.push_back(prev);
          budget -= prev.deg();
          continue;
        }
      }
      std::size_t deg = 1 + rng() % std::min<std::size_t>(budget, 4);
      std::vector<BigInt> roots;
      for (std::size_t j = 0; j < deg; ++j) roots.push_back(BigInt(static_cast<long>(rng() % 11) - 5));
      fam.push_back(from_roots(roots));
      budget -= deg;
    }
    auto cert = lift_family(fam);
    LiftVerifyOptions opts;
    opts.subset_budget = std::size_t{1} << 16;
    auto rep = verify_lift(cert, opts);
    checked += rep.selections_checked;
    if (!rep.passed() || !rep.exhaustive_mixed) o.fail("family " + std::to_string(t) + " not verified exhaustively");
    for (const auto& F : cert.lifted)
      if (!is_eisenstein(F, cert.q)) o.fail("lifted polynomial not Eisenstein");
    std::set<std::string> distinct;
    for (const auto& F : cert.lifted) distinct.insert(format_poly(F));
    if (distinct.size() != cert.lifted.size()) o.fail("lifted polynomials collide");
  }
  if (o.pass) o.detail = "40 families, " + std::to_string(checked) + " mixed selections";
  return o;
}

Outcome ac10() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{{"construct", "--lengths", "3,4,6", "--no-verify"},
                                                       {"construct", "--lengths", "5", "--no-verify"},
                                                       {"example7", "--n", "3", "--no-verify"},
                                                       {"example8", "--m", "2", "--n", "3", "--no-verify"},
                                                       {"elasticity", "--ratio", "7/3", "--no-verify"},
                                                       {"theorem10", "--n", "2", "--no-verify"},
                                                       {"residues", "--prime", "31", "--no-verify"}};
  for (const auto& cmd : commands) {
    auto a = cli_run(cmd), b = cli_run(cmd);
    if (a.code != 0 || a.out != b.out) o.fail(cmd[0] + " output not reproducible");
  }
  auto cert = std::get<Theorem9Certificate>(construct_lengths(std::vector<std::uint64_t>{2, 2, 2, 5, 5}));
  std::vector<IvpElement> elements{cert.product.element, construct_example8(2, 3).product.element};
  std::vector<IntPoly> six;
  for (int r = 0; r < 6; ++r) six.push_back(IntPoly::x_minus(BigInt(r)));
  elements.push_back(make_element(1, BigInt(1), BigInt(12), six));
  for (const auto& e : elements) {
    std::string ref;
    for (unsigned threads : {1u, 2u, 8u}) {
      EnumerationOptions opts;
      opts.threads = threads;
      Json j = Json::array();
      for (const auto& f : enumerate_factorizations(e, opts)) j.push_back(to_json(f));
      if (ref.empty()) ref = j.dump();
      else if (j.dump() != ref) o.fail("enumeration depends on the thread count");
    }
  }
  if (o.pass) o.detail = "7 commands byte-identical; enumeration equal for 1, 2, 8 threads";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 prescribed lengths end-to-end", ac1}, {"AC2 example7 lengths {2, n+2}", ac2},
      {"AC3 example8 and elasticity 7/3", ac3},  {"AC4 instance (1,2) parameters", ac4},
      {"AC5 irreducible H with xH of length n+1", ac5}, {"AC6 fixed divisor triple agreement", ac6},
      {"AC7 enumerator vs naive oracle", ac7},    {"AC8 safe residue systems p <= 97", ac8},
      {"AC9 lift exhaustive verification", ac9},  {"AC10 determinism", ac10}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %-44s %.2fs  %s\n", r.pass ? "PASS" : "FAIL", name, seconds_since(t0), r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
