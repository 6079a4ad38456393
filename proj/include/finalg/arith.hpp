#pragma once

// Small exact number-theory helpers shared across the library.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace finalg {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, primes increasing.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long power_mod(long long a, long long e, long long m) {
  a %= m;
  if (a < 0) a += m;
  long long r = 1 % m;
  while (e > 0) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of a mod m; requires gcd(a, m) == 1.
inline int multiplicative_order(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  long long x = a % m;
  for (int k = 1; k <= m; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
  throw std::invalid_argument("multiplicative_order: a not invertible mod m");
}

/// Largest power of p dividing n, returned as the power itself (p^k).
inline long long p_part(long long n, long long p) {
  long long r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

inline bool is_power_of(long long n, long long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace finalg
