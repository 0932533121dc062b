#pragma once

#include <algorithm>
#include <cmath>

namespace kmm::detail {

// Binomial coefficient in double; exact for the sizes used here (n <= 31).
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

}  // namespace kmm::detail
