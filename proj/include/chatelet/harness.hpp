#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/constructor.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/transfer.hpp"
#include "chatelet/two_squares.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace chatelet {

// ---------------------------------------------------------------------------
// Sharded construction

inline bool provenance_less(const Solution& a, const Solution& b) {
  return std::tie(a.alpha, a.beta, a.v1) < std::tie(b.alpha, b.beta, b.v1);
}

/// Runs the family enumeration split into alpha slices (slice k takes the
/// alphas with alpha/2 - 1 = k mod shards) and merges the slices back into
/// (alpha, beta, v1) order. X below 64 yields no solutions.
inline std::vector<Solution> construct_family(const CubicPoly& p, const Int& x, const Rational& c,
                                              unsigned shards = 1) {
  if (x < 64) return {};
  shards = std::max(1u, shards);
  std::vector<std::vector<Solution>> slices(shards);
  std::vector<std::exception_ptr> errors(shards);
  auto run = [&](unsigned k) {
    try {
      enumerate_family(
          p, x, c, [&](Solution s) { slices[k].push_back(std::move(s)); },
          [&](const Int& alpha) {
            return mpz_fdiv_ui(Int(alpha / 2 - 1).get_mpz_t(), shards) == k;
          });
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned k = 0; k < shards; ++k) workers.emplace_back(run, k);
    for (auto& w : workers) w.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Solution> all;
  for (auto& slice : slices)
    for (auto& s : slice) all.push_back(std::move(s));
  std::sort(all.begin(), all.end(), provenance_less);
  return all;
}

/// Solutions with first <= n <= last, order preserved.
inline std::vector<Solution> in_window(const std::vector<Solution>& all, const Int& first,
                                       const Int& last) {
  std::vector<Solution> out;
  for (const auto& s : all)
    if (s.n >= first && s.n <= last) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

/// How many family members share each value of n.
struct MultiplicityStats {
  std::map<Int, std::uint64_t> per_n;
  std::map<std::uint64_t, std::uint64_t> histogram;  // multiplicity -> #n
  std::uint64_t total = 0;
  std::uint64_t max = 0;

  std::uint64_t distinct() const { return per_n.size(); }

  static MultiplicityStats of(const std::vector<Solution>& sols) {
    MultiplicityStats m;
    for (const auto& s : sols) ++m.per_n[s.n];
    m.total = sols.size();
    for (const auto& [n, k] : m.per_n) {
      ++m.histogram[k];
      m.max = std::max(m.max, k);
    }
    return m;
  }
};

/// One CSV row of a density report.
struct DensityRow {
  std::string poly;
  Int x;
  Rational c;
  std::optional<std::uint64_t> count_b;
  std::uint64_t constructive_total = 0;
  std::uint64_t constructive_distinct = 0;
  std::uint64_t max_multiplicity = 0;
  double max_height_ratio = 0.0;
  std::optional<double> slope;
};

/// max M_theta(omega_i) / X^(1/2) over the given solutions.
inline double max_height_ratio(const std::vector<Solution>& sols, const Int& x) {
  double best = 0.0;
  const double root = std::sqrt(x.get_d());
  for (const auto& s : sols) {
    Int h = std::max(s.omega1.height(), s.omega2.height());
    best = std::max(best, h.get_d() / root);
  }
  return best;
}

/// Number of solutions inside the box M_theta(omega_i) <= d X^(1/2).
inline std::uint64_t count_in_height_box(const std::vector<Solution>& sols, const Int& x,
                                         const Rational& d) {
  const Rational limit = d * d * Rational(x);
  std::uint64_t k = 0;
  for (const auto& s : sols) {
    Int h = std::max(s.omega1.height(), s.omega2.height());
    if (Rational(h * h) <= limit) ++k;
  }
  return k;
}

/// Row for X built from the solutions with n in [1, X].
inline DensityRow density_row(const CubicPoly& p, const Int& x, const Rational& c,
                              const std::vector<Solution>& all,
                              std::optional<std::uint64_t> count_b_value) {
  auto window = in_window(all, Int(1), x);
  auto stats = MultiplicityStats::of(window);
  DensityRow row;
  row.poly = p.descriptor();
  row.x = x;
  row.c = c;
  row.count_b = count_b_value;
  row.constructive_total = stats.total;
  row.constructive_distinct = stats.distinct();
  row.max_multiplicity = stats.max;
  row.max_height_ratio = max_height_ratio(window, x);
  return row;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual
};

/// Least-squares line through (log x, log y).
inline LineFit fit_log_log(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("need at least two points to fit");
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0) throw std::invalid_argument("log-log fit needs positive values");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double k = static_cast<double>(points.size());
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (std::log(x) - mx) * (std::log(x) - mx);
    sxy += (std::log(x) - mx) * (std::log(y) - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (const auto& [x, y] : points) {
    double r = std::log(y) - (f.intercept + f.slope * std::log(x));
    ss += r * r;
  }
  f.residual = std::sqrt(ss / k);
  return f;
}

// ---------------------------------------------------------------------------
// Output formats

inline std::string rational_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_den() == 1 ? to_string(r.get_num()) : r.get_str(10);
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

inline std::string csv_header() {
  return "poly,X,c,count_B,constructive_total,constructive_distinct,max_multiplicity,"
         "max_height_ratio,slope\n";
}

inline std::string csv_row(const DensityRow& r) {
  std::ostringstream os;
  os << '"' << r.poly << "\"," << to_string(r.x) << ',' << rational_string(r.c) << ',';
  if (r.count_b) os << *r.count_b;
  os << ',' << r.constructive_total << ',' << r.constructive_distinct << ','
     << r.max_multiplicity << ',' << format_double(r.max_height_ratio) << ',';
  if (r.slope) os << format_double(*r.slope);
  os << '\n';
  return os.str();
}

/// One JSON-lines record; every number is a decimal string.
inline std::string solution_json(const Solution& s, const GaussianInteger& uv) {
  nlohmann::ordered_json j;
  j["n"] = to_string(s.n);
  j["alpha"] = to_string(s.alpha);
  j["beta"] = to_string(s.beta);
  j["v1"] = to_string(s.v1);
  j["omega1"] = {to_string(s.omega1.c0), to_string(s.omega1.c1), to_string(s.omega1.c2)};
  j["omega2"] = {to_string(s.omega2.c0), to_string(s.omega2.c1), to_string(s.omega2.c2)};
  j["u"] = to_string(uv.re);
  j["v"] = to_string(uv.im);
  return j.dump() + "\n";
}

/// Writes `contents` to `path` through a temporary file and a rename, so a
/// failed run never leaves a partial file behind.
inline void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// The (x^2+8)^3 + 17 identity

struct IdentityCheck {
  bool symbolic_ok = false;
  bool pointwise_ok = false;
  std::optional<long> bad_x;
  std::optional<int> bad_degree;
  IntPoly lhs, rhs;
  long points = 0;
};

/// (x^2 + 8)^3 + 17 = (x^3 + 10x)^2 + (2x^2 + 23)^2, checked as polynomials
/// and at every integer x in [-range, range].
inline IdentityCheck verify_identity(long range = 1000) {
  IdentityCheck r;
  const IntPoly inner{Int(8), Int(0), Int(1)};
  const IntPoly u{Int(0), Int(10), Int(0), Int(1)};
  const IntPoly v{Int(23), Int(0), Int(2)};
  r.lhs = inner * inner * inner + IntPoly{Int(17)};
  r.rhs = u * u + v * v;
  r.symbolic_ok = r.lhs == r.rhs;
  if (!r.symbolic_ok) {
    int top = std::max(r.lhs.degree(), r.rhs.degree());
    for (int k = 0; k <= top; ++k) {
      if (r.lhs[static_cast<std::size_t>(k)] != r.rhs[static_cast<std::size_t>(k)]) {
        r.bad_degree = k;
        break;
      }
    }
  }
  r.pointwise_ok = true;
  for (long x = -range; x <= range; ++x) {
    Int z(x);
    Int s = z * z + 8;
    Int a = z * z * z + 10 * z;
    Int b = 2 * z * z + 23;
    ++r.points;
    if (s * s * s + 17 != a * a + b * b) {
      r.pointwise_ok = false;
      r.bad_x = x;
      break;
    }
  }
  return r;
}

}  // namespace chatelet
