#pragma once

#include <string>

#include "eqc/grading.hpp"

namespace eqc {

/** \brief a + b g in A(Z/p), with g^2 = p g. */
struct Burnside {
  int p = 2;
  Int a = 0, b = 0;

  Burnside() = default;
  Burnside(int p_, Int a_, Int b_ = 0) : p(p_), a(a_), b(b_) {}

  static Burnside one(int p) { return {p, 1, 0}; }
  static Burnside g(int p) { return {p, 0, 1}; }
  static Burnside kappa(int p) { return {p, p, -1}; }

  Burnside operator+(const Burnside& o) const { same(o); return {p, a + o.a, b + o.b}; }
  Burnside operator-(const Burnside& o) const { same(o); return {p, a - o.a, b - o.b}; }
  Burnside operator-() const { return {p, -a, -b}; }
  Burnside operator*(const Burnside& o) const {
    same(o);
    Int ad = checked_mul(a, o.b), bc = checked_mul(b, o.a), bd = checked_mul(b, o.b);
    return {p, checked_mul(a, o.a), checked_add(checked_add(ad, bc), checked_mul(p, bd))};
  }
  Burnside operator*(Int k) const { return {p, a * k, b * k}; }
  bool operator==(const Burnside&) const = default;

  // Augmentation (cardinality): ring map to Z.
  Int eps() const { return a + p * b; }
  // Fixed-point count: the other ring map to Z.
  Int fixed_degree() const { return a; }
  bool is_unit() const {
    Int e = eps(), f = fixed_degree();
    return (e == 1 || e == -1) && (f == 1 || f == -1);
  }

  void same(const Burnside& o) const {
    if (p != o.p) throw Error("mixing Burnside rings for different primes");
  }

  std::string str() const {
    if (a == 0 && b == 0) return "0";
    std::string s;
    if (a != 0) s = std::to_string(a);
    if (b != 0) {
      if (!s.empty()) s += b > 0 ? " + " : " - ";
      else if (b < 0) s += "-";
      Int ab = b < 0 ? -b : b;
      s += (ab == 1 ? "" : std::to_string(ab)) + "g";
    }
    return s;
  }
};

// Graded-commutativity unit. For RO(G) gradings alpha = m0 + m1 Lambda, beta = n0 + n1 Lambda
// (p = 2) this is (-1)^{m0 n0} (1-g)^{m1 n1}; for p odd only the trivial parts matter.
inline Burnside gamma(const GradingROG& x, const GradingROG& y) {
  x.check(y);
  const int p = x.p;
  Burnside r = Burnside::one(p);
  if (mod(x.n0 * y.n0, 2) != 0) r = -r;
  if (p == 2 && mod(x.m[0] * y.m[0], 2) != 0) r = r * Burnside(2, 1, -1);
  return r;
}

// On RO(Pi) gradings: fixed part and free part of a single component (they agree in parity
// and dimension across components).
inline Burnside gamma(const GradingROPi& x, const GradingROPi& y) {
  const int p = x.p;
  Int xf = x[0].fixed(), yf = y[0].fixed();
  Int xm = x.dim() - xf, ym = y.dim() - yf;
  Burnside r = Burnside::one(p);
  if (mod(xf * yf, 2) != 0) r = -r;
  if (p == 2 && mod(xm * ym, 2) != 0) r = r * Burnside(2, 1, -1);
  return r;
}

}  // namespace eqc
