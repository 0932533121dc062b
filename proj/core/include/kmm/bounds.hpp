#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmm {

enum class Region { Exists, Impossible, Unknown };
std::string_view to_string(Region r);

// Finite-n quantum Hamming / Gilbert-Varshamov check for k-MM states, in
// exact integer arithmetic:
//   hamming_ok : D_{floor(k/2)} + 1 <= 2^n
//   gv_ok      : 2^n <= D_k + 1
// The region is Impossible when k > floor(n/2) and Unknown otherwise; finite
// n never yields Exists.
struct BoundVerdict {
  int n = 0;
  int k = 0;
  bool hamming_ok = false;
  bool gv_ok = false;
  Region region = Region::Unknown;
};

BoundVerdict finite_bounds(int n, int k);

// f(x) = 1 - x log2 3 + x log2 x + (1-x) log2(1-x), with f(0) = 1.
double rate_function(double x);
// Bisection on (0.1, 0.3) until |f(x)| < tol; tol >= 1e-12.
double root_x0(double tol = 1e-10);
// Exists below x0, Impossible above 2 x0, Unknown between. ratio in (0, 1/2].
Region asymptotic_region(double ratio);

struct CodeTableEntry {
  int n = 0;
  int k_lower = 0;
  int k_upper = 0;
};

// CSV with columns n,k_lower,k_upper. An optional header row, blank lines and
// '#' comments are skipped. Throws ParseError carrying the line number.
std::vector<CodeTableEntry> ingest_code_table(std::istream& csv);

struct ChartSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;  // (n, k)
};

// Asymptotic lines k = x0 n and k = 2 x0 n, the finite Hamming and GV curves
// for 1 <= n <= n_max, and the table's lower/upper series when given.
std::vector<ChartSeries> bounds_chart(int n_max, const std::vector<CodeTableEntry>& table = {});

}  // namespace kmm
