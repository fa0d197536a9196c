#pragma once

#include "zcheb/rational.hpp"

namespace zcheb {

/// Binomial coefficient; zero outside 0 <= k <= n (including negative n).
Integer binomial(long n, long k);

Integer factorial(long n);

/// k!! = k(k-2)(k-4)...; (-1)!! = 0!! = 1. Throws std::domain_error for k < -1.
Integer double_factorial(long k);

}  // namespace zcheb
