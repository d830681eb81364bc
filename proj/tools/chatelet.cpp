// chatelet: construct, certify and count integers n with p(n) a sum of two
// squares, for monic irreducible cubics p.
//
//   chatelet check --poly 1,1,2
//   chatelet construct --poly 1,1,2 --limit 1000000000000 --emit sols.jsonl
//   chatelet count --poly 0,0,17 --limit 1000000 --shards 4
//   chatelet fit --poly 1,1,2 --grid 1e6,1e8,1e10,1e12
//   chatelet verify-identity
//   chatelet oracle 746

#include "chatelet/chatelet.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chatelet;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitReducible = 2;
constexpr int kExitParity = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

/// Accepts plain integers and the shorthand 1e12 (exact powers of ten).
Int parse_limit(const std::string& s) {
  auto e = s.find_first_of("eE");
  try {
    if (e == std::string::npos) return parse_int(s);
    Int mant = parse_int(s.substr(0, e));
    unsigned long exp = std::stoul(s.substr(e + 1));
    return mant * pow(Int(10), exp);
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "'");
  }
}

std::vector<Int> parse_poly(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("--poly expects a2,a1,a0");
  std::vector<Int> out;
  for (const auto& p : parts) {
    try {
      out.push_back(parse_int(p));
    } catch (const std::exception&) {
      throw UsageError("bad coefficient '" + p + "'");
    }
  }
  return out;
}

Rational parse_c(const std::string& s) {
  try {
    Rational c = parse_rational(s);
    if (sgn(c) <= 0 || c > 4) throw UsageError("--c must lie in (0, 4]");
    return c;
  } catch (const std::invalid_argument&) {
    throw UsageError("bad rational '" + s + "'");
  }
}

CubicPoly load_poly(const std::string& s, ParityMode mode) {
  auto c = parse_poly(s);
  return validate_poly(c[0], c[1], c[2], mode);
}

void write_output(const std::string& path, const std::string& contents) {
  if (path.empty()) return;
  write_atomically(path, contents);
}

int cmd_check(const std::string& poly) {
  auto c = parse_poly(poly);
  CubicPoly p;
  try {
    p = validate_poly(c[0], c[1], c[2], ParityMode::kRelaxed);
  } catch (const ReducibleError& e) {
    std::cout << "irreducible: no (integer root " << e.root() << ")\n";
    return kExitReducible;
  }
  std::cout << "polynomial: " << p << "\n"
            << "irreducible: yes\n"
            << "a2^2 - a1 = " << p.b() << (p.square_term_even() ? " (even, ok)" : " (odd, FAIL)")
            << "\n"
            << "a1*a2 - a0 = " << p.a() << (p.mixed_term_odd() ? " (odd, ok)" : " (even, FAIL)")
            << "\n"
            << "theta in [" << p.theta_lo.get_d() << ", " << p.theta_hi.get_d()
            << "] (width <= 2^-32)\n";
  if (!p.has_family_parity()) {
    std::cout << "family: not applicable (parity)\n";
    return kExitParity;
  }
  std::cout << "family: applicable\n";
  return kExitOk;
}

int cmd_construct(const std::string& poly, const std::string& limit, const std::string& c_str,
                  unsigned shards, const std::string& emit, bool run_oracle) {
  const CubicPoly p = load_poly(poly, ParityMode::kStrict);
  const Int x = parse_limit(limit);
  if (x < 1) throw UsageError("--limit must be >= 1");
  const Rational c = parse_c(c_str);

  const auto all = construct_family(p, x, c, shards);
  const auto window = in_window(all, -x, x);

  std::string jsonl;
  std::uint64_t oracle_confirmed = 0, oracle_budget = 0, oracle_rejected = 0;
  for (const auto& s : window) {
    GaussianInteger uv = certify_transfer(p, s);
    if (run_oracle) {
      try {
        if (is_sum_two_squares(p(s.n)).member) {
          ++oracle_confirmed;
        } else {
          ++oracle_rejected;
          std::cerr << "oracle rejects p(" << s.n << ")\n";
        }
      } catch (const EffortExceeded&) {
        ++oracle_budget;
      }
    }
    jsonl += solution_json(s, uv);
  }
  if (oracle_rejected) return kExitVerify;
  write_output(emit, jsonl);

  const Rational d = height_budget(p);
  const auto positive = in_window(all, Int(1), x);
  std::cout << csv_header() << csv_row(density_row(p, x, c, all, std::nullopt));
  std::cerr << "emitted=" << all.size() << " |n|<=X: " << window.size()
            << " (distinct " << MultiplicityStats::of(window).distinct() << ")"
            << " 1<=n<=X: " << positive.size() << " (distinct "
            << MultiplicityStats::of(positive).distinct() << ")"
            << " height_box(d=" << d.get_d() << "): " << count_in_height_box(window, x, d)
            << "\n";
  if (run_oracle) {
    std::cerr << "oracle: confirmed=" << oracle_confirmed << " budget_exceeded=" << oracle_budget
              << "\n";
  }
  return kExitOk;
}

int cmd_count(const std::string& poly, const std::string& limit, unsigned shards,
              const std::string& emit) {
  const CubicPoly p = load_poly(poly, ParityMode::kRelaxed);
  const Int x = parse_limit(limit);
  if (x < 1) throw UsageError("--limit must be >= 1");
  std::uint64_t count = 0;
  try {
    count = count_b(p, x, shards);
  } catch (const CountEffortExceeded& e) {
    std::cerr << "factorization budget exhausted at n = " << e.n() << "\n";
    return kExitVerify;
  }
  DensityRow row;
  row.poly = p.descriptor();
  row.x = x;
  row.c = Rational(1);
  row.count_b = count;
  std::string csv = csv_header() + csv_row(row);
  std::cout << count << "\n" << csv;
  write_output(emit, csv);
  return kExitOk;
}

int cmd_fit(const std::string& poly, const std::string& grid, const std::string& c_str,
            const std::string& cutoff_str, unsigned shards, const std::string& emit) {
  const CubicPoly p = load_poly(poly, ParityMode::kStrict);
  const Rational c = parse_c(c_str);
  const Int cutoff = parse_limit(cutoff_str);
  std::vector<Int> xs;
  for (const auto& g : split(grid, ',')) xs.push_back(parse_limit(g));
  if (xs.size() < 3) throw UsageError("--grid needs at least 3 points");
  for (const auto& x : xs)
    if (x < 1) throw UsageError("grid values must be >= 1");

  std::vector<DensityRow> rows;
  std::vector<std::pair<double, double>> points;
  for (const auto& x : xs) {
    std::optional<std::uint64_t> cb;
    if (x <= cutoff) cb = count_b(p, x, shards);
    auto all = construct_family(p, x, c, shards);
    for (const auto& s : in_window(all, Int(1), x)) certify_transfer(p, s);
    rows.push_back(density_row(p, x, c, all, cb));
    if (cb && rows.back().constructive_distinct > *cb) {
      std::cerr << "lower bound violated at X = " << x << "\n";
      return kExitVerify;
    }
    points.emplace_back(x.get_d(), static_cast<double>(rows.back().constructive_distinct));
  }
  LineFit fit;
  try {
    fit = fit_log_log(points);
  } catch (const std::invalid_argument& e) {
    std::cerr << "fit failed: " << e.what() << "\n";
    return kExitVerify;
  }
  std::string csv = csv_header();
  for (auto& r : rows) {
    r.slope = fit.slope;
    csv += csv_row(r);
  }
  std::cout << csv;
  std::cerr << "slope=" << format_double(fit.slope) << " rms_residual="
            << format_double(fit.residual) << "\n";
  write_output(emit, csv);
  return kExitOk;
}

int cmd_verify_identity() {
  auto r = verify_identity(1000);
  std::cout << "lhs = " << r.lhs << "\nrhs = " << r.rhs << "\n";
  if (!r.symbolic_ok) {
    std::cout << "symbolic: FAIL at degree " << *r.bad_degree << "\n";
    return kExitVerify;
  }
  std::cout << "symbolic: ok\n";
  if (!r.pointwise_ok) {
    std::cout << "pointwise: FAIL at x = " << *r.bad_x << "\n";
    return kExitVerify;
  }
  std::cout << "pointwise: ok (" << r.points << " points in [-1000, 1000])\n";
  return kExitOk;
}

int cmd_oracle(const std::string& value) {
  Int n;
  try {
    n = parse_int(value);
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + value + "'");
  }
  try {
    auto cert = is_sum_two_squares(n);
    if (cert.member) {
      std::cout << "yes (" << cert.witness->re << "," << cert.witness->im << ")\n";
    } else if (cert.negative()) {
      std::cout << "no (negative)\n";
    } else {
      std::cout << "no (" << *cert.obstruction << "^" << cert.obstruction_exponent << ")\n";
    }
  } catch (const EffortExceeded& e) {
    std::cout << "unknown (" << e.what() << ")\n";
    return kExitVerify;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sums of two squares among the values of monic cubics"};
  app.require_subcommand(1);

  std::string poly, limit, c_str = "1", grid, emit, cutoff = "1000000", value;
  unsigned shards = 1;
  bool no_oracle = false;

  auto* check = app.add_subcommand("check", "validate a cubic");
  check->add_option("--poly", poly, "a2,a1,a0")->required();

  auto* construct = app.add_subcommand("construct", "enumerate and certify the family");
  construct->add_option("--poly", poly, "a2,a1,a0")->required();
  construct->add_option("--limit", limit, "X")->required();
  construct->add_option("--c", c_str, "rational window constant in (0, 4]");
  construct->add_option("--shards", shards, "alpha slices");
  construct->add_option("--emit", emit, "JSON-lines output path");
  construct->add_flag("--no-oracle", no_oracle, "skip the factorization cross-check");

  auto* count = app.add_subcommand("count", "brute-force count of n in [1, X]");
  count->add_option("--poly", poly, "a2,a1,a0")->required();
  count->add_option("--limit", limit, "X")->required();
  count->add_option("--shards", shards, "n-range shards");
  count->add_option("--emit", emit, "CSV output path");

  auto* fit = app.add_subcommand("fit", "growth exponent over a grid of X");
  fit->add_option("--poly", poly, "a2,a1,a0")->required();
  fit->add_option("--grid", grid, "X1,X2,...")->required();
  fit->add_option("--c", c_str, "rational window constant in (0, 4]");
  fit->add_option("--cutoff", cutoff, "largest X for the brute-force count");
  fit->add_option("--shards", shards, "worker shards");
  fit->add_option("--emit", emit, "CSV output path");

  auto* identity = app.add_subcommand("verify-identity", "check (x^2+8)^3+17 = ...");

  auto* oracle = app.add_subcommand("oracle", "two-squares certificate for n");
  oracle->add_option("n", value, "integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(poly);
    if (*construct) return cmd_construct(poly, limit, c_str, shards, emit, !no_oracle);
    if (*count) return cmd_count(poly, limit, shards, emit);
    if (*fit) return cmd_fit(poly, grid, c_str, cutoff, shards, emit);
    if (*identity) return cmd_verify_identity();
    if (*oracle) return cmd_oracle(value);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ReducibleError& e) {
    std::cerr << e.what() << "\n";
    return kExitReducible;
  } catch (const ParityError& e) {
    std::cerr << e.what() << "\n";
    return kExitParity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
