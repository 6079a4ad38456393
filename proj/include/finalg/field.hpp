#pragma once

// Exact arithmetic in GF(q^d) via exp/log tables.
//
// Elements are integer indices: the element with polynomial coefficients
// c_0 + c_1 x + ... + c_{d-1} x^{d-1} has index sum c_i q^i, so 0 is the
// zero element and 1 is the multiplicative identity in every field, and
// prime-subfield elements keep the same index under scalar extension.
//
// All deterministic choices are by smallest index: the modulus is the
// first monic irreducible polynomial of degree d (ordered by the index of
// its lower-coefficient vector), the generator is the first element of
// full multiplicative order, and root_of_unity(p) is the first element of
// multiplicative order exactly p.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "finalg/arith.hpp"

namespace finalg {

inline constexpr long long kFieldSizeCap = 1 << 20;

struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct no_root_of_unity : field_error {
  long long p;
  explicit no_root_of_unity(long long p_)
      : field_error("field has no primitive root of unity of order " +
                    std::to_string(p_)),
        p(p_) {}
};

namespace detail {

// Polynomials over GF(q) as ascending coefficient vectors.
inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b,
                                 long long q) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    long long lead_inv = power_mod(b[db], q - 2, q);
    long long f = a[i] * lead_inv % q;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = static_cast<int>(((a[i - db + j] - f * b[j]) % q + q) % q);
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

inline bool poly_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

inline bool poly_irreducible(const std::vector<int>& f, long long q) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= q;
    for (long long lo = 0; lo < count; ++lo) {
      std::vector<int> g(e + 1, 0);
      long long x = lo;
      for (int i = 0; i < e; ++i) { g[i] = static_cast<int>(x % q); x /= q; }
      g[e] = 1;
      if (poly_is_zero(poly_rem(f, g, q))) return false;
    }
  }
  return true;
}

}  // namespace detail

struct CoefficientField {
  long long q = 2;           // characteristic
  int d = 1;                 // extension degree
  long long size = 2;        // q^d
  std::vector<int> modulus;  // ascending coefficients, monic, degree d
  int generator = 1;
  std::vector<int> exp_table;  // exp_table[k] = generator^k, k < size-1
  std::vector<int> log_table;  // inverse of exp_table on nonzero elements

  int add(int a, int b) const {
    if (d == 1) return static_cast<int>((a + b) % q);
    int out = 0;
    long long w = 1;
    for (int i = 0; i < d; ++i) {
      out += static_cast<int>((a % q + b % q) % q * w);
      a = static_cast<int>(a / q);
      b = static_cast<int>(b / q);
      w *= q;
    }
    return out;
  }
  int neg(int a) const {
    if (d == 1) return static_cast<int>((q - a) % q);
    int out = 0;
    long long w = 1;
    for (int i = 0; i < d; ++i) {
      out += static_cast<int>((q - a % q) % q * w);
      a = static_cast<int>(a / q);
      w *= q;
    }
    return out;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[(log_table[a] + log_table[b]) % (size - 1)];
  }
  int inv(int a) const {
    if (a == 0) throw field_error("division by zero");
    return exp_table[(size - 1 - log_table[a]) % (size - 1)];
  }
  int pow(int a, long long e) const {
    if (a == 0) {
      if (e <= 0) throw field_error("0 has no nonpositive powers");
      return 0;
    }
    long long n = size - 1;
    long long k = (log_table[a] % n * (e % n) % n + n) % n;
    return exp_table[k];
  }
  long long order(int a) const {
    if (a == 0) throw field_error("0 has no multiplicative order");
    return (size - 1) / std::gcd(size - 1, static_cast<long long>(log_table[a]));
  }
  std::vector<int> coeffs(int a) const {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) { c[i] = static_cast<int>(a % q); a = static_cast<int>(a / q); }
    return c;
  }

  bool operator==(const CoefficientField& o) const {
    return q == o.q && d == o.d && modulus == o.modulus;
  }
};

inline CoefficientField make_field(long long q, int d) {
  if (!is_prime(q)) throw field_error("characteristic must be prime");
  if (d < 1) throw field_error("degree must be positive");
  long long size = 1;
  for (int i = 0; i < d; ++i) {
    size *= q;
    if (size > kFieldSizeCap)
      throw field_error("field size exceeds cap " + std::to_string(kFieldSizeCap));
  }
  CoefficientField F;
  F.q = q;
  F.d = d;
  F.size = size;

  if (d == 1) {
    F.modulus = {0, 1};
  } else {
    for (long long lo = 0;; ++lo) {
      if (lo == size) throw field_error("no irreducible modulus found");
      std::vector<int> f(d + 1, 0);
      long long x = lo;
      for (int i = 0; i < d; ++i) { f[i] = static_cast<int>(x % q); x /= q; }
      f[d] = 1;
      if (detail::poly_irreducible(f, q)) { F.modulus = f; break; }
    }
  }

  // Direct product used only while building the tables.
  auto mul_direct = [&](int a, int b) {
    std::vector<int> pa = F.coeffs(a), pb = F.coeffs(b), prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        prod[i + j] = static_cast<int>((prod[i + j] +
                                        static_cast<long long>(pa[i]) * pb[j]) % q);
    std::vector<int> r = detail::poly_rem(std::move(prod), F.modulus, q);
    long long out = 0, w = 1;
    for (size_t i = 0; i < r.size(); ++i) { out += r[i] * w; w *= q; }
    return static_cast<int>(out);
  };

  if (size == 2) {
    F.generator = 1;
    F.exp_table = {1};
    F.log_table = {0, 0};
    return F;
  }
  for (int g = 2; g < size; ++g) {
    std::vector<int> exp{1};
    int x = 1;
    bool full = true;
    for (long long k = 1; k < size - 1; ++k) {
      x = mul_direct(x, g);
      if (x == 1) { full = false; break; }
      exp.push_back(x);
    }
    if (!full || mul_direct(x, g) != 1) continue;
    F.generator = g;
    F.exp_table = std::move(exp);
    F.log_table.assign(size, 0);
    for (long long k = 0; k < size - 1; ++k) F.log_table[F.exp_table[k]] = static_cast<int>(k);
    return F;
  }
  throw field_error("no multiplicative generator found");
}

/// Smallest element of multiplicative order exactly p.
inline int root_of_unity(const CoefficientField& F, long long p) {
  if (p < 1 || (F.size - 1) % p != 0) throw no_root_of_unity(p);
  for (int x = 1; x < F.size; ++x)
    if (F.order(x) == p) return x;
  throw no_root_of_unity(p);
}

}  // namespace finalg
