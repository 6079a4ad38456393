#pragma once

// Catalog constructors.  Every construction is validated post hoc through
// validate_group, and element indexing is lexicographic in the natural
// coordinates of the construction, so tables are reproducible byte for byte.

#include <cctype>
#include <string>
#include <vector>

#include "finalg/group.hpp"

namespace finalg {

struct action_not_automorphic : group_error {
  int actor, x, y;
  action_not_automorphic(int h, int x_, int y_)
      : group_error("action of " + std::to_string(h) + " breaks product at (" +
                    std::to_string(x_) + "," + std::to_string(y_) + ")"),
        actor(h), x(x_), y(y_) {}
};

inline FiniteGroup cyclic_group(int n) {
  if (n < 1) throw invalid_spec("cyclic: order must be positive");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return validate_group(rows, "C" + std::to_string(n));
}

/// (Z/p)^k with index = base-p digits, most significant digit first.
inline FiniteGroup elementary_abelian_group(int p, int k) {
  if (!is_prime(p)) throw invalid_spec("elementary_abelian: p must be prime");
  if (k < 1) throw invalid_spec("elementary_abelian: k must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > kGroupOrderCap) throw too_large(n, kGroupOrderCap);
  }
  const int nn = static_cast<int>(n);
  std::vector<std::vector<int>> rows(nn, std::vector<int>(nn));
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      int x = a, y = b, s = 0, w = 1;
      for (int i = 0; i < k; ++i) {
        s += ((x % p) + (y % p)) % p * w;
        x /= p;
        y /= p;
        w *= p;
      }
      rows[a][b] = s;
    }
  return validate_group(rows, "C" + std::to_string(p) + "^" + std::to_string(k));
}

/// Dihedral group of order 2n: indices 0..n-1 are the rotations r^i,
/// indices n..2n-1 are the reflections r^i s.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1) throw invalid_spec("dihedral: n must be >= 1");
  const int m = 2 * n;
  auto idx = [&](int i, int e) { return ((i % n) + n) % n + n * e; };
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int i = a % n, e = a / n, j = b % n, f = b / n;
      // r^i s^e * r^j s^f = r^(i + j*(-1)^e) s^(e+f)
      rows[a][b] = idx(e ? i - j : i + j, e ^ f);
    }
  return validate_group(rows, "D" + std::to_string(n));
}

/// Quaternion group of order 8: elements a^i b^j (i mod 4, j mod 2) with
/// b^2 = a^2 and b^-1 a b = a^-1; index = i + 4j.
inline FiniteGroup quaternion_group(int order = 8) {
  if (order != 8) throw invalid_spec("quaternion: only order 8 is provided");
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j & 1); };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
      int ii = j ? i - k : i + k;
      if (j && l) ii += 2;  // b^2 = a^2
      rows[a][b] = idx(ii, j ^ l);
    }
  return validate_group(rows, "Q8");
}

/// Extraspecial group of order q^3 and exponent q (odd prime q), realized as
/// unitriangular 3x3 matrices over GF(q): triples (a,b,c) with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'); index = a q^2 + b q + c.
inline FiniteGroup extraspecial_exponent_q(int q) {
  if (!is_prime(q) || q == 2)
    throw invalid_spec("extraspecial_exponent_q: q must be an odd prime");
  long long n = static_cast<long long>(q) * q * q;
  if (n > kGroupOrderCap) throw too_large(n, kGroupOrderCap);
  const int nn = static_cast<int>(n);
  std::vector<std::vector<int>> rows(nn, std::vector<int>(nn));
  for (int u = 0; u < nn; ++u)
    for (int v = 0; v < nn; ++v) {
      int a = u / (q * q), b = u / q % q, c = u % q;
      int a2 = v / (q * q), b2 = v / q % q, c2 = v % q;
      int ra = (a + a2) % q, rb = (b + b2) % q, rc = (c + c2 + a * b2) % q;
      rows[u][v] = ra * q * q + rb * q + rc;
    }
  return validate_group(rows, "Heis" + std::to_string(q));
}

/// Direct product with index (g,h) -> g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  long long n = static_cast<long long>(A.n) * B.n;
  if (n > kGroupOrderCap) throw too_large(n, kGroupOrderCap);
  const int nn = static_cast<int>(n);
  std::vector<std::vector<int>> rows(nn, std::vector<int>(nn));
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y) {
      int g1 = x / B.n, h1 = x % B.n, g2 = y / B.n, h2 = y % B.n;
      rows[x][y] = A.op(g1, g2) * B.n + B.op(h1, h2);
    }
  std::string nm = (A.name.empty() ? "?" : A.name) + " x " +
                   (B.name.empty() ? "?" : B.name);
  return validate_group(rows, nm);
}

namespace detail {

inline void check_action_maps(const FiniteGroup& F, const FiniteGroup& H,
                              const std::vector<std::vector<int>>& act) {
  if (static_cast<int>(act.size()) != H.n)
    throw invalid_spec("semidirect: one permutation per actor element required");
  for (int h = 0; h < H.n; ++h) {
    const auto& perm = act[h];
    if (static_cast<int>(perm.size()) != F.n)
      throw invalid_spec("semidirect: permutation length mismatch");
    std::vector<char> hit(F.n, 0);
    for (int v : perm) {
      if (v < 0 || v >= F.n || hit[v])
        throw invalid_spec("semidirect: image is not a permutation");
      hit[v] = 1;
    }
    for (int x = 0; x < F.n; ++x)
      for (int y = 0; y < F.n; ++y)
        if (perm[F.op(x, y)] != F.op(perm[x], perm[y]))
          throw action_not_automorphic(h, x, y);
  }
  // Left-action homomorphism: act[ab] = act[a] after act[b].
  for (int a = 0; a < H.n; ++a)
    for (int b = 0; b < H.n; ++b) {
      int ab = H.op(a, b);
      for (int x = 0; x < F.n; ++x)
        if (act[ab][x] != act[a][act[b][x]])
          throw invalid_spec("semidirect: action is not a homomorphism at (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
    }
}

}  // namespace detail

/// Semidirect product F x| H.  act[h] must be an automorphism permutation of
/// F for every h, and h -> act[h] a homomorphism; index (f,h) -> f*|H| + h.
inline FiniteGroup semidirect_product(const FiniteGroup& F, const FiniteGroup& H,
                                      const std::vector<std::vector<int>>& act,
                                      std::string name = "") {
  detail::check_action_maps(F, H, act);
  long long n = static_cast<long long>(F.n) * H.n;
  if (n > kGroupOrderCap) throw too_large(n, kGroupOrderCap);
  const int nn = static_cast<int>(n);
  std::vector<std::vector<int>> rows(nn, std::vector<int>(nn));
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y) {
      int f1 = x / H.n, h1 = x % H.n, f2 = y / H.n, h2 = y % H.n;
      rows[x][y] = F.op(f1, act[h1][f2]) * H.n + H.op(h1, h2);
    }
  if (name.empty())
    name = (F.name.empty() ? "?" : F.name) + " : " + (H.name.empty() ? "?" : H.name);
  return validate_group(rows, std::move(name));
}

/// Expands one generator permutation into a full action of a cyclic group H
/// (generated by element 1): act[j] = perm^j.
inline std::vector<std::vector<int>> cyclic_action(const FiniteGroup& H,
                                                   const FiniteGroup& F,
                                                   const std::vector<int>& gen_perm) {
  if (H.n >= 2 && element_order(H, 1) != H.n)
    throw invalid_spec("cyclic_action: actor is not cyclic with generator 1");
  std::vector<std::vector<int>> act(H.n);
  std::vector<int> id(F.n);
  for (int i = 0; i < F.n; ++i) id[i] = i;
  act[0] = id;
  for (int j = 1; j < H.n; ++j) {
    act[j].resize(F.n);
    for (int i = 0; i < F.n; ++i) act[j][i] = gen_perm[act[j - 1][i]];
  }
  std::vector<int> last(F.n);
  for (int i = 0; i < F.n; ++i) last[i] = gen_perm[act[H.n - 1][i]];
  if (last != id)
    throw invalid_spec("cyclic_action: generator image order does not divide |H|");
  return act;
}

// ---------------------------------------------------------------------------
// Helpers producing generator permutations for common actions

/// v -> v*M over GF(p) on an elementary abelian group (row convention,
/// digits of the element index are the coordinates, most significant first).
inline std::vector<int> matrix_perm(const FiniteGroup& F, int p,
                                    const std::vector<std::vector<int>>& M) {
  const int k = static_cast<int>(M.size());
  long long chk = 1;
  for (int i = 0; i < k; ++i) chk *= p;
  if (chk != F.n) throw invalid_spec("matrix_perm: dimension mismatch");
  std::vector<int> perm(F.n);
  for (int e = 0; e < F.n; ++e) {
    std::vector<int> v(k);
    int x = e;
    for (int i = k - 1; i >= 0; --i) { v[i] = x % p; x /= p; }
    int out = 0;
    for (int j = 0; j < k; ++j) {
      long long s = 0;
      for (int i = 0; i < k; ++i) s += static_cast<long long>(v[i]) * M[i][j];
      out = out * p + static_cast<int>(((s % p) + p) % p);
    }
    perm[e] = out;
  }
  return perm;
}

inline std::vector<int> inversion_perm(const FiniteGroup& F) {
  return F.inv;
}

inline std::vector<int> scalar_perm(const FiniteGroup& F, long long t) {
  std::vector<int> perm(F.n);
  for (int x = 0; x < F.n; ++x) perm[x] = F.pow(x, t);
  return perm;
}

// ---------------------------------------------------------------------------
// Spec strings
//
//   group  := cyclic(n) | elem(p,k) | elementary_abelian(p,k) | dihedral(n)
//           | quaternion(8) | extraspecial(q)
//           | product(group, group) | semidirect(group, group, action)
//   action := scalar(k) | inversion | matrix([[..],..]) | perm([..])
//
// semidirect actions other than an explicit full table act through the
// generator (element 1) of a cyclic H.

namespace detail {

struct SpecParser {
  const std::string& s;
  size_t i = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw invalid_spec("spec: expected '" + std::string(1, c) + "' at offset " +
                         std::to_string(i));
  }
  std::string ident() {
    ws();
    size_t b = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (b == i) throw invalid_spec("spec: expected a name at offset " + std::to_string(b));
    return s.substr(b, i - b);
  }
  long long number() {
    ws();
    bool neg = eat('-');
    ws();
    size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw invalid_spec("spec: expected a number at offset " + std::to_string(b));
    long long v = std::stoll(s.substr(b, i - b));
    return neg ? -v : v;
  }
  std::vector<long long> number_list() {
    expect('[');
    std::vector<long long> out;
    if (!eat(']')) {
      do out.push_back(number());
      while (eat(','));
      expect(']');
    }
    return out;
  }
  std::vector<std::vector<long long>> matrix() {
    expect('[');
    std::vector<std::vector<long long>> rows;
    do rows.push_back(number_list());
    while (eat(','));
    expect(']');
    return rows;
  }

  FiniteGroup group() {
    std::string kw = ident();
    if (kw == "cyclic") {
      expect('(');
      long long n = number();
      expect(')');
      return cyclic_group(static_cast<int>(n));
    }
    if (kw == "elem" || kw == "elementary_abelian") {
      expect('(');
      long long p = number();
      expect(',');
      long long k = number();
      expect(')');
      return elementary_abelian_group(static_cast<int>(p), static_cast<int>(k));
    }
    if (kw == "dihedral") {
      expect('(');
      long long n = number();
      expect(')');
      return dihedral_group(static_cast<int>(n));
    }
    if (kw == "quaternion") {
      expect('(');
      long long n = number();
      expect(')');
      return quaternion_group(static_cast<int>(n));
    }
    if (kw == "extraspecial") {
      expect('(');
      long long q = number();
      expect(')');
      return extraspecial_exponent_q(static_cast<int>(q));
    }
    if (kw == "product") {
      expect('(');
      FiniteGroup a = group();
      expect(',');
      FiniteGroup b = group();
      expect(')');
      return direct_product(a, b);
    }
    if (kw == "semidirect") {
      expect('(');
      FiniteGroup f = group();
      expect(',');
      FiniteGroup h = group();
      expect(',');
      std::vector<int> gen = action_perm(f);
      expect(')');
      return semidirect_product(f, h, cyclic_action(h, f, gen));
    }
    throw invalid_spec("spec: unknown constructor '" + kw + "'");
  }

  std::vector<int> action_perm(const FiniteGroup& F) {
    std::string kw = ident();
    if (kw == "scalar") {
      expect('(');
      long long t = number();
      expect(')');
      return scalar_perm(F, t);
    }
    if (kw == "inversion") return inversion_perm(F);
    if (kw == "matrix") {
      expect('(');
      auto rows = matrix();
      expect(')');
      auto fac = factorize(F.n);
      if (fac.size() != 1)
        throw invalid_spec("spec: matrix action needs an elementary abelian target");
      int p = static_cast<int>(fac[0].first);
      std::vector<std::vector<int>> m(rows.size());
      for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
          throw invalid_spec("spec: matrix must be square");
        for (long long v : rows[r]) m[r].push_back(static_cast<int>(((v % p) + p) % p));
      }
      return matrix_perm(F, p, m);
    }
    if (kw == "perm") {
      expect('(');
      auto vals = number_list();
      expect(')');
      std::vector<int> perm;
      for (long long v : vals) perm.push_back(static_cast<int>(v));
      if (static_cast<int>(perm.size()) != F.n)
        throw invalid_spec("spec: perm length mismatch");
      return perm;
    }
    throw invalid_spec("spec: unknown action '" + kw + "'");
  }
};

}  // namespace detail

/// Builds a group from a spec string; the group keeps the normalized spec as
/// its name so serialized tables stay self-describing.
inline FiniteGroup construct_group(const std::string& spec) {
  detail::SpecParser p(spec);
  FiniteGroup g = p.group();
  p.ws();
  if (p.i != spec.size()) throw invalid_spec("spec: trailing characters");
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  g.name = compact;
  return g;
}

}  // namespace finalg
