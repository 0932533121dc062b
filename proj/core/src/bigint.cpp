#include "kmm/bigint.hpp"

#include "kmm/errors.hpp"

namespace kmm {

BigInt binomial(int n, int k) {
  if (n < 0) throw ValidationError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt pow2(int e) {
  if (e < 0) throw ValidationError("pow2: exponent must be non-negative");
  return BigInt(1) << e;
}

}  // namespace kmm
