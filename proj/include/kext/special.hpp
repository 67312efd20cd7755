#pragma once

#include <cstdint>

// Special functions used by the entropy formulas: log-gamma, harmonic
// numbers, Euler's constant and the log-moment integral
//   A(k) = \int_0^inf u^{k-1} e^{-u} log(u) du = (k-1)! (H_{k-1} - gamma).

namespace kext {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// Partial sum H_k = sum_{i=1}^{k} 1/i, with H_0 = 0. Direct compensated
// summation up to k = 1e7, asymptotic expansion beyond.
double harmonic(std::int64_t k);

// A(k) for integer k >= 1; A(1) = -gamma. Closed form only.
double a_integral(int k);

// ln Beta(n-k+1, k) = ln[(k-1)!(n-k)!/n!] for 1 <= k <= n.
double log_beta(std::int64_t n, std::int64_t k);

}  // namespace kext
