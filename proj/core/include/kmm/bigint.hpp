#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kmm {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
BigInt pow2(int e);

}  // namespace kmm
