#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqc/grading.hpp"
#include "eqc/point.hpp"

namespace eqc {

/** \brief Homogeneous class in the cohomology of the fixed set of B_GU(1) (or its smash with
 * EG_+ or the cofiber): a p-tuple of polynomials in sigma_k with point coefficients.
 *
 * In grading T, the term sigma_k^s zeta_k^delta x of component k has x in grading T_k - 2s and
 * delta = T - T_k, so storing s -> x is enough. */
struct FixedRingClass {
  int p = 2;
  Ring ring = Ring::S0;
  Coeff coeff = Coeff::A;
  GradingROPi grading;
  std::vector<std::map<Int, PointClass>> comp;

  static FixedRingClass zero(const GradingROPi& T, Ring ring = Ring::S0, Coeff coeff = Coeff::A) {
    FixedRingClass x;
    x.p = T.p;
    x.ring = ring;
    x.coeff = coeff;
    x.grading = T;
    x.comp.assign(T.p, {});
    return x;
  }

  // zeta_k-grading carried by every term of component k
  GradingROPi zeta_grading(int k) const { return grading - grading[k]; }

  GradingROG coeff_grading(int k, Int s) const { return grading[k] - GradingROG::trivial(p, 2 * s); }

  // Add x * sigma_k^s to component k.
  void add(int k, Int s, const PointClass& x) {
    if (s < 0) throw Error("negative sigma exponent");
    if (!(x.alpha == coeff_grading(k, s)))
      throw Error("coefficient grading " + x.alpha.str() + " does not fit sigma^" + std::to_string(s) +
                  " in " + grading.str());
    auto it = comp[k].find(s);
    if (it == comp[k].end()) comp[k].emplace(s, x);
    else it->second = it->second + x;
    prune();
  }

  void prune() {
    for (auto& m : comp)
      for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
  }

  bool is_zero() const {
    for (auto& m : comp)
      if (!m.empty()) return false;
    return true;
  }

  FixedRingClass operator+(const FixedRingClass& o) const {
    if (!(grading == o.grading) || ring != o.ring || coeff != o.coeff)
      throw Error("adding fixed-ring classes from different groups");
    FixedRingClass r = *this;
    for (int k = 0; k < p; ++k)
      for (auto& [s, x] : o.comp[k]) r.add(k, s, x);
    return r;
  }
  FixedRingClass operator-() const {
    FixedRingClass r = *this;
    for (auto& m : r.comp)
      for (auto& [s, x] : m) x = -x;
    r.prune();
    return r;
  }
  FixedRingClass operator-(const FixedRingClass& o) const { return *this + (-o); }
  FixedRingClass operator*(Int k) const {
    FixedRingClass r = *this;
    for (auto& m : r.comp)
      for (auto& [s, x] : m) x = x * k;
    r.prune();
    return r;
  }

  bool operator==(const FixedRingClass& o) const {
    if (!(grading == o.grading) || ring != o.ring || coeff != o.coeff) return false;
    for (int k = 0; k < p; ++k) {
      if (comp[k].size() != o.comp[k].size()) return false;
      for (auto& [s, x] : comp[k]) {
        auto it = o.comp[k].find(s);
        if (it == o.comp[k].end() || !(it->second == x)) return false;
      }
    }
    return true;
  }

  std::string str(Style st = {}) const {
    std::string out;
    for (int k = 0; k < p; ++k) {
      std::string c;
      for (auto& [s, x] : comp[k]) {
        std::string t = x.str(st);
        if (t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos) t = "(" + t + ")";
        if (s > 0) t += (t == "1" ? "" : " ") + std::string("sigma") + (s == 1 ? "" : "^" + std::to_string(s));
        if (t.rfind("1 sigma", 0) == 0) t = t.substr(2);
        c += (c.empty() ? "" : " + ") + t;
      }
      GradingROPi z = zeta_grading(k);
      if (c.empty()) c = "0";
      else if (!z.is_zero()) c = "(" + c + ") zeta" + z.str();
      out += (k ? ", " : "") + c;
    }
    return "[" + out + "]";
  }
};

namespace detail {

inline void check_variant(const FixedRingClass& x, const FixedRingClass& y) {
  if (x.p != y.p) throw Error("mixing primes in a fixed-ring product");
  if (x.coeff != y.coeff) throw Error("fixed-ring product with different coefficients");
}

}  // namespace detail

// Componentwise polynomial product. TEG classes are a module over the S0 variant only.
inline FixedRingClass fixed_mul(const FixedRingClass& x, const FixedRingClass& y) {
  detail::check_variant(x, y);
  Ring out = x.ring;
  if (x.ring != y.ring) {
    if (x.ring == Ring::TEG && y.ring == Ring::S0) out = Ring::TEG;
    else if (x.ring == Ring::S0 && y.ring == Ring::TEG) out = Ring::TEG;
    else throw Error("fixed-ring product of incompatible variants");
  } else if (x.ring == Ring::TEG) {
    throw Error("the TEG variant is a module, not a ring");
  }
  FixedRingClass r = FixedRingClass::zero(x.grading + y.grading, out, x.coeff);
  for (int k = 0; k < x.p; ++k)
    for (auto& [s, a] : x.comp[k])
      for (auto& [t, b] : y.comp[k]) r.add(k, s + t, mul(a, b));
  return r;
}

// Point class x embedded diagonally: x * 1.
inline FixedRingClass fixed_scalar(const PointClass& x) {
  if (x.level != Level::GG) throw Error("fixed-ring coefficients live at level G/G");
  FixedRingClass r = FixedRingClass::zero(GradingROPi::constant(x.alpha), x.ring, x.coeff);
  for (int k = 0; k < x.p; ++k) r.add(k, 0, x);
  return r;
}

inline FixedRingClass fixed_one(int p, Ring ring = Ring::S0) {
  if (ring == Ring::EG) return fixed_scalar(named::eg_gen(GradingROG(p)));
  return fixed_scalar(named::one(p));
}

inline FixedRingClass fixed_pow(const FixedRingClass& x, Int n) {
  if (n < 0) throw Error("negative power");
  FixedRingClass r = x.coeff == Coeff::A ? fixed_one(x.p, x.ring)
                                          : fixed_scalar(coeff_generator(x.coeff, GradingROG(x.p)));
  for (Int i = 0; i < n; ++i) r = fixed_mul(r, x);
  return r;
}

// Apply a coefficient map (phi, the quotient to RZ, ...) term by term.
template <class F>
inline FixedRingClass map_coeffs(const FixedRingClass& x, Ring ring, Coeff coeff, F&& f) {
  FixedRingClass r = FixedRingClass::zero(x.grading, ring, coeff);
  for (int k = 0; k < x.p; ++k)
    for (auto& [s, a] : x.comp[k]) r.add(k, s, f(a));
  return r;
}

inline FixedRingClass to_eg(const FixedRingClass& x) {
  return map_coeffs(x, Ring::EG, Coeff::A, [](const PointClass& a) { return phi(a); });
}

inline FixedRingClass to_rz(const FixedRingClass& x) {
  return map_coeffs(x, Ring::S0, Coeff::RZ, [](const PointClass& a) { return quotient_map(a); });
}

// ---------- named elements ----------

namespace fixed {

inline FixedRingClass sigma(int p, int k) {
  FixedRingClass r = FixedRingClass::zero(GradingROPi::constant(GradingROG::trivial(p, 2)));
  r.add(mod(k, p), 1, named::one(p));
  return r;
}

// zeta_k^delta, delta_k = 0 (a unit supported on component k)
inline FixedRingClass zeta(int k, const GradingROPi& d) {
  const int p = d.p;
  k = static_cast<int>(mod(k, p));
  if (!d[k].is_zero()) throw Error("zeta_k^delta needs delta_k = 0");
  if (!d.in_Iev()) throw Error("zeta_k^delta needs delta in I^ev");
  FixedRingClass r = FixedRingClass::zero(d);
  r.add(k, 0, named::one(p));
  return r;
}

// xi^a for a in RO_+(G): product of the xi_j
inline PointClass xi_power(const GradingROG& a) {
  const int p = a.p;
  if (!a.in_ROplus()) throw Error("xi^alpha needs alpha in RO_+(G)");
  PointClass r = named::one(p);
  if (p == 2) return named::power(named::xi(2), a.m[0] / 2);
  for (size_t j = 0; j < a.m.size(); ++j) r = mul(r, named::power(named::xi_k(p, static_cast<Int>(j + 1)), a.m[j]));
  return r;
}

}  // namespace fixed

// ---------- eta on the generators ----------

// chi^i c: component k is (e_{k-i} + xi_{k-i} sigma_k) zeta, with e_0 = 0, xi_0 = 1.
inline FixedRingClass eta_chic(int p, Int i) {
  FixedRingClass r = FixedRingClass::zero(chi_omega(p, i));
  for (int k = 0; k < p; ++k) {
    Int d = k - i;
    if (canon_index(p, d) == 0) {
      r.add(k, 1, named::one(p));
    } else {
      r.add(k, 0, named::euler(p, d));
      r.add(k, 1, named::xi_k(p, d));
    }
  }
  return r;
}

// xibar^alpha, alpha in RO_+(Pi) (S0) or in I^ev(Pi) (EG variant).
inline FixedRingClass eta_xibar(const GradingROPi& a, Ring ring = Ring::S0) {
  const int p = a.p;
  FixedRingClass r = FixedRingClass::zero(a, ring);
  if (ring == Ring::EG) {
    if (!a.in_Iev()) throw Error("xibar^alpha in the EG variant needs alpha in I^ev");
    for (int k = 0; k < p; ++k) r.add(k, 0, named::eg_gen(a[k]));
    return r;
  }
  if (!a.in_ROplus()) throw Error("xibar^alpha needs alpha in RO_+(Pi)");
  for (int k = 0; k < p; ++k) r.add(k, 0, fixed::xi_power(a[k]));
  return r;
}

inline FixedRingClass eta_xi(int p, Int i, Int j = 1, Ring ring = Ring::S0) {
  return eta_xibar(Omega(p, i, j), ring);
}

inline void check_lambar(const GradingROPi& b, const std::vector<Int>& a) {
  const int p = b.p;
  if (!b.in_RO0()) throw Error("lambar^{beta,b} needs beta in RO_0(Pi)");
  if (static_cast<int>(a.size()) != p) throw Error("lambar^{beta,b} needs p entries in b");
  for (int k = 0; k < p; ++k)
    if (mod(a[k] - nu_inv(b[k]), p) != 0)
      throw Error("lambar: b_" + std::to_string(k) + " = " + std::to_string(a[k]) + " is not in nu(beta_k)^{-1}");
}

inline FixedRingClass eta_lambar(const GradingROPi& b, const std::vector<Int>& a) {
  check_lambar(b, a);
  FixedRingClass r = FixedRingClass::zero(b);
  for (int k = 0; k < b.p; ++k) r.add(k, 0, named::lam(b[k], a[k]));
  return r;
}

// The class supported on component k with value sigma_k^s e^{T_k - 2s} kappa there,
// s = T_k^G / 2. For T in RO_0 + RO(G) with T^G = 0 this is e^alpha kappabar_k^beta.
inline FixedRingClass eta_kappa_line(const GradingROPi& T, int k) {
  const int p = T.p;
  k = static_cast<int>(mod(k, p));
  Int f = T[k].fixed();
  if (f < 0 || mod(f, 2) != 0) throw Error("no kappa line on component " + std::to_string(k) + " in " + T.str());
  FixedRingClass r = FixedRingClass::zero(T);
  r.add(k, f / 2, named::ekappa(T[k] - GradingROG::trivial(p, f)));
  return r;
}

// Sufficient conditions for eta to be injective in grading a.
inline bool eta_injective_at(const GradingROPi& a) {
  if (a.dim() <= 0) return true;
  for (Int f : a.fixed_dims())
    if (mod(f, 2) != 0) return false;
  return true;
}

// Both sides of the chi-twist identity for chi^i c in the EG variant.
struct ChiTwist {
  FixedRingClass lhs, rhs;
};

inline ChiTwist chi_twist(int p, Int i) {
  FixedRingClass lhs = to_eg(eta_chic(p, i));
  GradingROPi w = omega_star(p), wi = chi_omega(p, i);
  FixedRingClass c = to_eg(eta_chic(p, 0));
  FixedRingClass t1 = fixed_mul(c, eta_xibar(wi - w, Ring::EG));
  GradingROPi g2 = wi - GradingROG::M(p, 1);
  FixedRingClass e1 = fixed_scalar(phi(named::euler(p, 1)));
  FixedRingClass t2 = fixed_mul(e1, eta_xibar(g2, Ring::EG)) * i;
  return {lhs, t1 - t2};
}

}  // namespace eqc
