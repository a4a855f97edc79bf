#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqc {

using Int = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

// Least non-negative residue.
inline Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(int p) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
}

// Inverse of a mod p, in [1, p-1].
inline Int inv_mod(Int a, Int p) {
  Int r = mod(a, p);
  if (r == 0) throw Error("no inverse of 0 mod p");
  Int g = p, x = 0, x1 = 1, b = r;
  while (b != 0) {
    Int q = g / b;
    Int t = g - q * b; g = b; b = t;
    t = x - q * x1; x = x1; x1 = t;
  }
  return mod(x, p);
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of nontrivial irreducible real summand types: Lambda for p = 2, M_1..M_h for p odd.
inline int half(int p) { return p == 2 ? 1 : (p - 1) / 2; }

// Canonical index of M_k in [1, h]; 0 means M_0 = 2 (trivial).
inline int canon_index(int p, Int k) {
  Int r = mod(k, p);
  if (r == 0) return 0;
  if (p == 2) return 1;
  return static_cast<int>(r <= p / 2 ? r : p - r);
}

// s(i): +1 if the residue of i lies in [1, p/2], -1 otherwise.
inline int sign_s(int p, Int i) {
  Int r = mod(i, p);
  if (r == 0) throw Error("s(i) undefined for i = 0 mod p");
  return 2 * r <= p ? 1 : -1;
}

// Element of RO(G): n0 copies of the trivial rep plus m[k-1] copies of M_k
// (p odd), or n0 + m[0] * Lambda (p = 2).
struct GradingROG {
  int p = 2;
  Int n0 = 0;
  std::vector<Int> m;

  GradingROG() : m(1, 0) {}
  explicit GradingROG(int p_, Int n0_ = 0) : p(p_), n0(n0_), m(half(p_), 0) {}
  GradingROG(int p_, Int n0_, std::vector<Int> m_) : p(p_), n0(n0_), m(std::move(m_)) {
    if (static_cast<int>(m.size()) != half(p)) throw Error("grading has wrong length");
  }

  static GradingROG trivial(int p, Int n) { return GradingROG(p, n); }

  // M_k as a real representation (M_0 = 2; for p = 2, M_1 = 2 Lambda).
  static GradingROG M(int p, Int k) {
    GradingROG g(p);
    int c = canon_index(p, k);
    if (c == 0) g.n0 = 2;
    else if (p == 2) g.m[0] = 2;
    else g.m[c - 1] = 1;
    return g;
  }

  static GradingROG Lambda() {
    GradingROG g(2);
    g.m[0] = 1;
    return g;
  }

  Int dim() const {
    Int s = 0;
    for (Int x : m) s += x;
    return p == 2 ? n0 + s : n0 + 2 * s;
  }
  Int fixed() const { return n0; }

  // Number of M_1-equivalent complex dimensions: sum of m (p odd), m[0] / 2 for p = 2 is not integral
  // in general, so callers use dim() there.
  Int msum() const { return std::accumulate(m.begin(), m.end(), Int{0}); }

  bool is_zero() const {
    return n0 == 0 && std::all_of(m.begin(), m.end(), [](Int x) { return x == 0; });
  }
  bool in_RO0() const { return dim() == 0 && fixed() == 0; }
  bool in_Iev() const { return dim() == 0 && mod(fixed(), 2) == 0; }
  // RO_+(G): nonnegative combination of the M_k - 2 (equivalently of the xi_k).
  bool in_ROplus() const {
    if (dim() != 0) return false;
    if (p == 2) return m[0] >= 0 && m[0] % 2 == 0;
    return std::all_of(m.begin(), m.end(), [](Int x) { return x >= 0; });
  }

  GradingROG operator+(const GradingROG& o) const {
    check(o);
    GradingROG r = *this;
    r.n0 += o.n0;
    for (size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
  }
  GradingROG operator-(const GradingROG& o) const { return *this + (-o); }
  GradingROG operator-() const {
    GradingROG r = *this;
    r.n0 = -n0;
    for (auto& x : r.m) x = -x;
    return r;
  }
  GradingROG operator*(Int k) const {
    GradingROG r = *this;
    r.n0 *= k;
    for (auto& x : r.m) x *= k;
    return r;
  }
  GradingROG& operator+=(const GradingROG& o) { return *this = *this + o; }
  GradingROG& operator-=(const GradingROG& o) { return *this = *this - o; }

  auto operator<=>(const GradingROG&) const = default;
  bool operator==(const GradingROG&) const = default;

  void check(const GradingROG& o) const {
    if (p != o.p) throw Error("mixing gradings for different primes");
  }

  // Part in RO_0(G): sum_{k>=2} m_k (M_k - M_1). Zero for p = 2.
  GradingROG ro0_part() const {
    GradingROG r(p);
    if (p == 2) return r;
    for (size_t i = 1; i < m.size(); ++i) {
      r.m[i] = m[i];
      r.m[0] -= m[i];
    }
    return r;
  }

  std::string str() const;
};

inline std::string GradingROG::str() const {
  std::string s;
  auto term = [&](Int c, const std::string& sym) {
    if (c == 0) return;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    if (sym.empty()) s += std::to_string(a);
    else if (a == 1) s += sym;
    else s += std::to_string(a) + "*" + sym;
  };
  term(n0, "");
  if (p == 2) term(m[0], "L");
  else
    for (size_t i = 0; i < m.size(); ++i) term(m[i], "M" + std::to_string(i + 1));
  return s.empty() ? "0" : s;
}

// nu(alpha) for alpha in RO_0(G): product of k^{n_k}, canonical residue in [1, p-1].
inline Int nu(const GradingROG& a) {
  if (!a.in_RO0()) throw Error("nu is defined only on RO_0(G)");
  const int p = a.p;
  if (p == 2) return 1;
  Int r = 1;
  for (size_t i = 0; i < a.m.size(); ++i) {
    Int k = static_cast<Int>(i + 1);
    Int e = a.m[i];
    Int base = e >= 0 ? k : inv_mod(k, p);
    for (Int j = 0; j < (e >= 0 ? e : -e); ++j) r = mod(r * base, p);
  }
  return r;
}

// Canonical representative of nu(alpha)^{-1}.
inline Int nu_inv(const GradingROG& a) { return inv_mod(nu(a), a.p); }

// Element of RO(Pi_G B): p-tuple of RO(G) elements of equal dimension.
struct GradingROPi {
  int p = 2;
  std::vector<GradingROG> c;

  GradingROPi() = default;
  explicit GradingROPi(int p_) : p(p_), c(p_, GradingROG(p_)) {}
  GradingROPi(int p_, std::vector<GradingROG> c_) : p(p_), c(std::move(c_)) { validate(); }

  static GradingROPi constant(const GradingROG& a) {
    GradingROPi r(a.p);
    for (auto& x : r.c) x = a;
    return r;
  }

  void validate() const {
    if (static_cast<int>(c.size()) != p) throw Error("RO(Pi) element needs p components");
    for (auto& x : c)
      if (x.p != p) throw Error("mixing gradings for different primes");
    for (auto& x : c)
      if (x.dim() != c[0].dim()) throw Error("RO(Pi) components must have equal dimension");
    if (p == 2 && mod(c[0].fixed() - c[1].fixed(), 2) != 0)
      throw Error("RO(Pi) components must have fixed dimensions of equal parity when p = 2");
  }

  Int dim() const { return c[0].dim(); }
  std::vector<Int> fixed_dims() const {
    std::vector<Int> r;
    for (auto& x : c) r.push_back(x.fixed());
    return r;
  }
  const GradingROG& operator[](int k) const { return c[static_cast<size_t>(mod(k, p))]; }
  GradingROG& operator[](int k) { return c[static_cast<size_t>(mod(k, p))]; }

  GradingROPi operator+(const GradingROPi& o) const {
    if (p != o.p) throw Error("mixing gradings for different primes");
    GradingROPi r = *this;
    for (int k = 0; k < p; ++k) r.c[k] += o.c[k];
    return r;
  }
  GradingROPi operator-() const {
    GradingROPi r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  GradingROPi operator-(const GradingROPi& o) const { return *this + (-o); }
  GradingROPi operator*(Int k) const {
    GradingROPi r = *this;
    for (auto& x : r.c) x = x * k;
    return r;
  }
  GradingROPi operator+(const GradingROG& a) const { return *this + constant(a); }
  GradingROPi operator-(const GradingROG& a) const { return *this - constant(a); }
  GradingROPi& operator+=(const GradingROPi& o) { return *this = *this + o; }

  auto operator<=>(const GradingROPi&) const = default;
  bool operator==(const GradingROPi&) const = default;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](auto& x) { return x.is_zero(); });
  }
  bool is_constant() const {
    return std::all_of(c.begin(), c.end(), [&](auto& x) { return x == c[0]; });
  }
  bool in_RO0() const {
    return std::all_of(c.begin(), c.end(), [](auto& x) { return x.in_RO0(); });
  }
  bool in_ROplus() const {
    return std::all_of(c.begin(), c.end(), [](auto& x) { return x.in_ROplus(); });
  }
  bool in_Iev() const {
    return std::all_of(c.begin(), c.end(), [](auto& x) { return x.in_Iev(); });
  }

  std::string str() const {
    std::string s = "(";
    for (int k = 0; k < p; ++k) s += (k ? ", " : "") + c[k].str();
    return s + ")";
  }
};

// Omega_{i,j}: M_j - 2 in position i.
inline GradingROPi Omega(int p, Int i, Int j) {
  GradingROPi r(p);
  r[static_cast<int>(mod(i, p))] = GradingROG::M(p, j) - GradingROG::trivial(p, 2);
  return r;
}

// chi^i shifts components: (chi^i alpha)_k = alpha_{k-i}.
inline GradingROPi chi(const GradingROPi& a, Int i) {
  GradingROPi r(a.p);
  for (int k = 0; k < a.p; ++k) r[k] = a[static_cast<int>(mod(k - i, a.p))];
  return r;
}

// omega^*: (M_0, M_1, ..., M_{p-1}).
inline GradingROPi omega_star(int p) {
  GradingROPi r(p);
  for (int k = 0; k < p; ++k) r[k] = GradingROG::M(p, k);
  return r;
}

inline GradingROPi chi_omega(int p, Int i) { return chi(omega_star(p), i); }

// p = 2 basis element Omega = (1 - Lambda, Lambda - 1).
inline GradingROPi Omega2() {
  GradingROPi r(2);
  r[0] = GradingROG::trivial(2, 1) - GradingROG::Lambda();
  r[1] = GradingROG::Lambda() - GradingROG::trivial(2, 1);
  return r;
}

// Coordinates over {1, Omega_{i,j}} (p odd; index 0 is the trivial coefficient, then
// i-major, j = 1..h) or over {1, Lambda, Omega} (p = 2).
inline std::vector<Int> basis_decompose(const GradingROPi& a) {
  a.validate();
  const int p = a.p;
  if (p == 2) {
    Int a0 = a[0].n0, a1 = a[1].n0, b0 = a[0].m[0], b1 = a[1].m[0];
    return {(a0 + a1) / 2, (b0 + b1) / 2, (a0 - a1) / 2};
  }
  std::vector<Int> r{a.dim()};
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < half(p); ++j) r.push_back(a[i].m[j]);
  return r;
}

inline GradingROPi basis_reconstruct(int p, const std::vector<Int>& v) {
  if (p == 2) {
    if (v.size() != 3) throw Error("p = 2 coordinates have length 3");
    return GradingROPi::constant(GradingROG::trivial(2, v[0]) + GradingROG::Lambda() * v[1]) +
           Omega2() * v[2];
  }
  const int h = half(p);
  if (static_cast<int>(v.size()) != 1 + p * h) throw Error("wrong coordinate length");
  GradingROPi r = GradingROPi::constant(GradingROG::trivial(p, v[0]));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < h; ++j) r += Omega(p, i, j + 1) * v[1 + i * h + j];
  return r;
}

// Order of indices by fixed dimension, highest first, ties by smaller index.
inline std::vector<int> fixed_dim_order(const std::vector<Int>& fd) {
  std::vector<int> k(fd.size());
  std::iota(k.begin(), k.end(), 0);
  std::stable_sort(k.begin(), k.end(), [&](int a, int b) { return fd[a] > fd[b]; });
  return k;
}

inline std::vector<int> fixed_dim_order(const GradingROPi& a) {
  return fixed_dim_order(a.fixed_dims());
}

}  // namespace eqc
