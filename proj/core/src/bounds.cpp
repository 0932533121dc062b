#include "kmm/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kmm/bigint.hpp"
#include "kmm/bloch.hpp"
#include "kmm/errors.hpp"

namespace kmm {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int_field(const std::string& field, std::size_t line, std::string_view name) {
  const std::string t = trim(field);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError("field '" + std::string(name) + "' is not an integer: '" + t + "'", line);
  }
  if (used != t.size()) {
    throw ParseError("field '" + std::string(name) + "' is not an integer: '" + t + "'", line);
  }
  return value;
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Exists: return "exists";
    case Region::Impossible: return "impossible";
    case Region::Unknown: return "unknown";
  }
  return "unknown";
}

BoundVerdict finite_bounds(int n, int k) {
  if (n < 1) throw ValidationError("finite_bounds: n must be positive");
  if (k < 1 || k > n) throw ValidationError("finite_bounds: k must be in [1, n]");
  const BigInt hilbert = pow2(n);
  BoundVerdict v;
  v.n = n;
  v.k = k;
  v.hamming_ok = subspace_dim(n, k / 2) + 1 <= hilbert;
  v.gv_ok = hilbert <= subspace_dim(n, k) + 1;
  v.region = k > n / 2 ? Region::Impossible : Region::Unknown;
  return v;
}

double rate_function(double x) {
  if (!(x >= 0.0) || !(x < 1.0)) {
    throw DomainError("rate_function: x must lie in [0, 1)");
  }
  if (x == 0.0) return 1.0;
  const double nat = -x * std::log(3.0) + x * std::log(x) + (1.0 - x) * std::log1p(-x);
  return 1.0 + nat / std::numbers::ln2;
}

double root_x0(double tol) {
  if (!(tol >= 1e-12)) throw ValidationError("root_x0: tol must be >= 1e-12");
  double lo = 0.1, hi = 0.3;  // f(lo) > 0 > f(hi)
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f = rate_function(mid);
    if (std::abs(f) < tol) break;
    (f > 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-17) break;
  }
  return mid;
}

Region asymptotic_region(double ratio) {
  if (!(ratio > 0.0)) throw ValidationError("asymptotic_region: ratio must be positive");
  if (ratio > 0.5) throw ValidationError("asymptotic_region: ratio above 1/2 violates the Schmidt bound");
  static const double x0 = root_x0(1e-12);
  if (ratio < x0) return Region::Exists;
  if (ratio > 2.0 * x0) return Region::Impossible;
  return Region::Unknown;
}

std::vector<CodeTableEntry> ingest_code_table(std::istream& csv) {
  std::vector<CodeTableEntry> out;
  std::string raw;
  std::size_t line = 0;
  bool first_content = true;
  while (std::getline(csv, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;

    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!text.empty() && text.back() == ',') fields.emplace_back();

    if (first_content) {
      first_content = false;
      if (!fields.empty() && trim(fields[0]) == "n") continue;  // header
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 columns (n,k_lower,k_upper), got " +
                       std::to_string(fields.size()), line);
    }
    CodeTableEntry e{parse_int_field(fields[0], line, "n"),
                     parse_int_field(fields[1], line, "k_lower"),
                     parse_int_field(fields[2], line, "k_upper")};
    if (e.n < 1) throw ParseError("n must be positive", line);
    if (e.k_lower < 0 || e.k_lower > e.k_upper || e.k_upper > e.n / 2) {
      throw ParseError("need 0 <= k_lower <= k_upper <= floor(n/2)", line);
    }
    out.push_back(e);
  }
  return out;
}

std::vector<ChartSeries> bounds_chart(int n_max, const std::vector<CodeTableEntry>& table) {
  if (n_max < 1) throw ValidationError("bounds chart: n_max must be positive");
  const double x0 = root_x0(1e-12);
  ChartSeries gv_line{"gv_asymptote", {}}, hamming_line{"hamming_asymptote", {}};
  ChartSeries hamming_finite{"hamming_finite_max_k", {}}, gv_finite{"gv_finite_min_k", {}};
  for (int n = 1; n <= n_max; ++n) {
    gv_line.points.emplace_back(n, x0 * n);
    hamming_line.points.emplace_back(n, 2.0 * x0 * n);
    // D_k for k = 0..n, term_l = C(n,l) 3^l built incrementally.
    std::vector<BigInt> d(static_cast<std::size_t>(n) + 1);
    BigInt term = 1;
    for (int l = 1; l <= n; ++l) {
      term = term * (3 * (n - l + 1)) / l;
      d[static_cast<std::size_t>(l)] = d[static_cast<std::size_t>(l - 1)] + term;
    }
    const BigInt hilbert = pow2(n);
    // Largest k <= floor(n/2) passing the Hamming side; smallest k passing GV.
    int h_max = 0;
    for (int k = 1; k <= n / 2; ++k) {
      if (d[static_cast<std::size_t>(k / 2)] + 1 <= hilbert) h_max = k;
    }
    hamming_finite.points.emplace_back(n, h_max);
    for (int k = 1; k <= n; ++k) {
      if (hilbert <= d[static_cast<std::size_t>(k)] + 1) {
        gv_finite.points.emplace_back(n, k);
        break;
      }
    }
  }
  std::vector<ChartSeries> out{gv_line, hamming_line, hamming_finite, gv_finite};
  if (!table.empty()) {
    ChartSeries lower{"constructive_lower", {}}, upper{"constructive_upper", {}};
    for (const auto& e : table) {
      lower.points.emplace_back(e.n, e.k_lower);
      upper.points.emplace_back(e.n, e.k_upper);
    }
    out.push_back(std::move(lower));
    out.push_back(std::move(upper));
  }
  return out;
}

}  // namespace kmm
