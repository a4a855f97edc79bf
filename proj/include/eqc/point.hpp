#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqc/burnside.hpp"
#include "eqc/grading.hpp"
#include "eqc/mackey.hpp"

namespace eqc {

enum class Ring { S0, EG, TEG };
enum class Coeff { A, RZ, concZ };
enum class Level { GG, Ge };

inline std::string ring_name(Ring r) {
  switch (r) {
    case Ring::S0: return "S0";
    case Ring::EG: return "EG";
    case Ring::TEG: return "TEG";
  }
  return "?";
}

inline std::string coeff_name(Coeff c) {
  switch (c) {
    case Coeff::A: return "A";
    case Coeff::RZ: return "RZ";
    case Coeff::concZ: return "concZ";
  }
  return "?";
}

// Canonical generator families. Exponents m, n are stored as the integers printed in the name,
// so EKap(m) is e^{-m} kappa and Delta(m, n) is e^{-m} delta xi^{-n}.
enum class Kind {
  LamXi,   // lambda^{a',a0} e^m xi^j (p = 2: e^m xi^j), m, j >= 0
  Kap,     // kappa^{a'}
  MuE,     // mu^{a',a} e^m, m >= 1
  EKap,    // mu^{a',a} e^{-m} kappa, m >= 1
  Tau,     // tau(iota^alpha)
  Delta,   // mu^{a',a} e^{-m} delta xi^{-n}
  Iota,    // iota^alpha, level G/e
  EXi,     // e^m xi^{a'} xi^j in EG, m >= 0, j any
  TKap,    // e^{a'} e^m kappa in TEG
  TDelta,  // e^{a'} e^m delta xi^{-n} in TEG
  RLam,    // lambda^{a'} e^m xi^j with RZ coefficients
  CKap     // e^alpha kappa with <Z> coefficients
};

struct Style {
  bool schematic = false;  // print the RO_0 part as alpha, residues as a, a^-1
};

/** \brief One canonical generator of a cell; r and l are its images under rho (coefficient of
 * iota^alpha) and under inverting the Euler classes (coefficient of the unique monomial). */
struct Gen {
  Kind kind = Kind::LamXi;
  int p = 2;
  GradingROG a0part;
  Int m = 0, n = 0;
  Int order = 0;
  Int r = 0, l = 0;
  Int a0 = 1;  // least positive representative of nu(a')^{-1}

  bool is_delta() const { return kind == Kind::Delta || kind == Kind::TDelta; }
  std::string name(Style st = {}) const;
};

namespace detail {

inline std::string pw(const std::string& s, Int k) {
  if (k == 0) return "";
  if (k == 1) return s;
  return s + "^" + std::to_string(k);
}

inline std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (auto& x : parts)
    if (!x.empty()) s += (s.empty() ? "" : " ") + x;
  return s.empty() ? "1" : s;
}

inline std::string compact(const GradingROG& a) {
  std::string s;
  for (char c : a.str())
    if (c != ' ') s += c;
  return s;
}

inline std::string a_sym(const GradingROG& a, Style st) {
  return st.schematic ? "alpha" : "{" + compact(a) + "}";
}

// Prefix symbol `sym^alpha` for the RO_0 part, empty when it is trivial in concrete style.
inline std::string a_pref(const std::string& sym, const GradingROG& a, Style st) {
  if (!st.schematic && a.is_zero()) return "";
  return sym + "^" + a_sym(a, st);
}

inline std::string mu_sym(const GradingROG& a, Style st) {
  if (!st.schematic && a.is_zero()) return "";
  return "mu^{" + (st.schematic ? std::string("alpha") : compact(a)) + "," +
         (st.schematic ? std::string("a") : std::to_string(nu(a))) + "}";
}

inline std::string lam_sym(const GradingROG& a, Int a0, Style st) {
  if (!st.schematic && a.is_zero()) return "";
  return "lambda^{" + (st.schematic ? std::string("alpha") : compact(a)) + "," +
         (st.schematic ? std::string("a^-1") : std::to_string(a0)) + "}";
}

}  // namespace detail

inline std::string Gen::name(Style st) const {
  using detail::join;
  using detail::pw;
  const bool two = p == 2;
  const std::string e = two ? "e" : "e1", xi = two ? "xi" : "xi1";
  const auto& A = a0part;
  switch (kind) {
    case Kind::LamXi:
      return join({two ? "" : detail::lam_sym(A, a0, st), pw(e, m), pw(xi, n)});
    case Kind::Kap:
      return two ? "kappa" : (st.schematic || !A.is_zero() ? "kappa^" + detail::a_sym(A, st) : "kappa");
    case Kind::MuE:
      return join({two ? "" : detail::mu_sym(A, st), pw(e, m)});
    case Kind::EKap:
      return join({two ? "" : detail::mu_sym(A, st), pw(e, -m), "kappa"});
    case Kind::Tau: {
      Gen g = *this;
      g.kind = Kind::Iota;
      return "tau(" + g.name(st) + ")";
    }
    case Kind::Delta:
      return join({two ? "" : detail::mu_sym(A, st), pw(e, -m), "delta", pw(xi, -n)});
    case Kind::Iota:
      // m holds the iota_1 (or iota) exponent
      return join({two ? "" : detail::a_pref("iota", A, st), pw(two ? "iota" : "iota1", m)});
    case Kind::EXi:
      return join({pw(e, m), two ? "" : detail::a_pref("xi", A, st), pw(xi, n)});
    case Kind::TKap:
    case Kind::CKap:
      return join({two ? "" : detail::a_pref("e", A, st), pw(e, m), "kappa"});
    case Kind::TDelta:
      return join({two ? "" : detail::a_pref("e", A, st), pw(e, m), "delta", pw(xi, -n)});
    case Kind::RLam:
      return join({two ? "" : detail::a_pref("lambda", A, st), pw(e, m), pw(xi, n)});
  }
  return "?";
}

/** \brief Additive data in one grading: the Mackey functor on the canonical basis. */
struct Cell {
  int p = 2;
  Ring ring = Ring::S0;
  Coeff coeff = Coeff::A;
  GradingROG alpha;
  std::string type;  // catalog name: "A[2]", "A_G/G", "RZ", "RZ-", "LZ", "LZ-", "<Z>", "<Z/p>", "0"
  std::vector<Gen> gg, ge;
  MackeyFunctor functor;
  bool loc_torsion = false;  // localized images live in Z/p here

  bool is_zero() const { return gg.empty() && ge.empty(); }
  bool delta_cell() const { return !gg.empty() && gg[0].is_delta(); }

  std::string type_label(Style st = {}) const {
    if (st.schematic && type.rfind("A[", 0) == 0) return "A[nu(alpha)]";
    if (st.schematic && p != 2 && type == "<Z/" + std::to_string(p) + ">") return "<Z/p>";
    return type;
  }

  // What the figures print: the generators of the Mackey functor, G/e ones in parentheses.
  std::string figure_label(Style st = {}) const {
    if (is_zero()) return ".";
    if (type == "LZ" || type == "LZ-" || type == "RZ-") return "(" + ge[0].name(st) + ")";
    if (type.rfind("A[", 0) == 0 && (st.schematic || !alpha.ro0_part().is_zero())) {
      Gen mu = gg[0];
      mu.kind = Kind::MuE;
      mu.m = 0;
      return "{" + mu.name(st) + ", " + ge[0].name(st) + "}";
    }
    return gg[0].name(st);
  }
};

namespace detail {

inline Int edim(int p) { return p == 2 ? 1 : 2; }

// Grading of a generator given its kind-specific data.
struct Split {
  Int d = 0, f = 0;
  GradingROG a0;
  Int a0inv = 1;  // nu(a0)^{-1}
  Int nu = 1;
};

inline Split split(const GradingROG& a) {
  Split s;
  s.d = a.dim();
  s.f = a.fixed();
  s.a0 = a.ro0_part();
  if (a.p != 2) {
    s.nu = eqc::nu(s.a0);
    s.a0inv = inv_mod(s.nu, a.p);
  }
  return s;
}

inline Gen make(Kind k, int p, const Split& s, Int m, Int n, Int order, Int r, Int l) {
  Gen g;
  g.kind = k;
  g.p = p;
  g.a0part = s.a0;
  g.m = m;
  g.n = n;
  g.order = order;
  g.r = r;
  g.l = l;
  g.a0 = s.a0inv;
  return g;
}

inline std::string zp(int p) { return "<Z/" + std::to_string(p) + ">"; }

// Assemble the Mackey functor from generators. tau_col: coordinates of tau(iota^alpha).
inline void finish(Cell& c, const std::vector<Int>& tau_col, Int tsign) {
  const int ng = static_cast<int>(c.gg.size()), ne = static_cast<int>(c.ge.size());
  std::vector<Int> orders;
  for (auto& g : c.gg) orders.push_back(g.order);
  Mat rho(ne, ng), tau(ng, ne), t(ne, ne);
  if (ne == 1) {
    for (int i = 0; i < ng; ++i) rho(0, i) = c.gg[i].is_delta() ? 0 : c.gg[i].r;
    for (int i = 0; i < ng; ++i) tau(i, 0) = tau_col[i];
    t(0, 0) = tsign;
  }
  c.functor = MackeyFunctor(c.p, FgAbGroup(orders), FgAbGroup::free(ne), rho, tau, t, c.type);
}

}  // namespace detail

// The G/e generator iota^alpha exists iff |alpha| = 0; its exponent of iota_1 (iota for p = 2).
inline Gen iota_gen(const GradingROG& a) {
  auto s = detail::split(a);
  Int k = a.p == 2 ? a.m[0] : -s.f / 2;
  return detail::make(Kind::Iota, a.p, s, k, 0, 0, 1, 0);
}

inline Int iota_sign(const GradingROG& a) {
  return a.p == 2 && mod(a.m[0], 2) != 0 ? -1 : 1;
}

inline Cell s0_cell(const GradingROG& a, Coeff coeff = Coeff::A) {
  using detail::make;
  const int p = a.p;
  require_prime(p);
  const auto s = detail::split(a);
  const Int d = s.d, f = s.f, ed = detail::edim(p);
  Cell c;
  c.p = p;
  c.ring = Ring::S0;
  c.coeff = coeff;
  c.alpha = a;
  c.type = "0";
  c.loc_torsion = f < 0;
  std::vector<Int> tau_col;
  const Int q = p;

  if (coeff == Coeff::concZ) {
    if (f == 0) {
      c.type = "<Z>";
      c.gg.push_back(make(Kind::CKap, p, s, d / ed, 0, 0, 0, p));
    }
    detail::finish(c, tau_col, 1);
    return c;
  }

  const bool rz = coeff == Coeff::RZ;
  if (d == 0) {
    c.ge.push_back(iota_gen(a));
    if (f == 0 && !rz) {
      c.type = p == 2 ? "A_G/G" : "A[" + std::to_string(s.nu) + "]";
      c.gg.push_back(make(Kind::LamXi, p, s, 0, 0, 0, 1, s.a0inv));
      c.gg.push_back(make(Kind::Kap, p, s, 0, 0, 0, 0, p));
      tau_col = {q, -s.a0inv};
    } else if (f <= 0 && mod(f, 2) == 0) {
      c.type = "RZ";
      c.gg.push_back(make(rz ? Kind::RLam : Kind::LamXi, p, s, 0, -f / 2, 0, 1, s.a0inv));
      tau_col = {q};
    } else if (f > 0 && mod(f, 2) == 0) {
      c.type = "LZ";
      c.gg.push_back(make(Kind::Tau, p, s, 0, 0, 0, q, 0));
      c.gg.back().m = iota_gen(a).m;
      tau_col = {1};
    } else if (f <= 1) {
      c.type = "RZ-";
    } else {
      c.type = "LZ-";
      c.gg.push_back(make(Kind::Delta, p, s, 1, (f - 1) / 2, 2, 0, 0));
      tau_col = {1};
    }
    detail::finish(c, tau_col, iota_sign(a));
    return c;
  }

  if (f == 0 && !rz) {
    c.type = "<Z>";
    if (d > 0) c.gg.push_back(make(Kind::MuE, p, s, d / ed, 0, 0, 0, 1));
    else c.gg.push_back(make(Kind::EKap, p, s, -d / ed, 0, 0, 0, p));
  } else if (d > 0 && f <= 0 && mod(f, 2) == 0) {
    c.type = detail::zp(p);
    c.gg.push_back(make(rz ? Kind::RLam : Kind::LamXi, p, s, d / ed, -f / 2, p, 0, s.a0inv));
  } else if (d < 0 && f >= 3 && mod(f, 2) == 1) {
    c.type = detail::zp(p);
    c.gg.push_back(make(Kind::Delta, p, s, (1 - d) / ed, (f - 1) / 2, p, 0, 0));
  }
  detail::finish(c, tau_col, 1);
  return c;
}

inline Cell eg_cell(const GradingROG& a) {
  using detail::make;
  const int p = a.p;
  require_prime(p);
  const auto s = detail::split(a);
  const Int d = s.d, f = s.f, ed = detail::edim(p);
  Cell c;
  c.p = p;
  c.ring = Ring::EG;
  c.alpha = a;
  c.type = "0";
  std::vector<Int> tau_col;
  if (d == 0) {
    c.ge.push_back(iota_gen(a));
    if (mod(f, 2) == 0) {
      c.type = "RZ";
      c.gg.push_back(make(Kind::EXi, p, s, 0, -f / 2, 0, 1, 0));
      tau_col = {p};
    } else {
      c.type = "RZ-";
    }
    detail::finish(c, tau_col, iota_sign(a));
    return c;
  }
  if (d > 0 && mod(f, 2) == 0) {
    c.type = detail::zp(p);
    c.gg.push_back(make(Kind::EXi, p, s, d / ed, -f / 2, p, 0, 0));
  }
  detail::finish(c, tau_col, 1);
  return c;
}

inline Cell teg_cell(const GradingROG& a) {
  using detail::make;
  const int p = a.p;
  require_prime(p);
  const auto s = detail::split(a);
  const Int d = s.d, f = s.f, ed = detail::edim(p);
  Cell c;
  c.p = p;
  c.ring = Ring::TEG;
  c.alpha = a;
  c.type = "0";
  if (f == 0) {
    c.type = "<Z>";
    c.gg.push_back(make(Kind::TKap, p, s, d / ed, 0, 0, 0, 0));
  } else if (f >= 3 && mod(f, 2) == 1) {
    c.type = detail::zp(p);
    c.gg.push_back(make(Kind::TDelta, p, s, (d - 1) / ed, (f - 1) / 2, p, 0, 0));
  }
  detail::finish(c, {}, 1);
  return c;
}

inline Cell group_at(Ring ring, const GradingROG& a, Coeff coeff = Coeff::A) {
  if (coeff != Coeff::A && ring != Ring::S0)
    throw Error("coefficient variants are provided for the point only");
  switch (ring) {
    case Ring::S0: return s0_cell(a, coeff);
    case Ring::EG: return eg_cell(a);
    case Ring::TEG: return teg_cell(a);
  }
  throw Error("unknown ring");
}

/** \brief Element of one graded piece at one level, on the canonical basis. */
struct PointClass {
  int p = 2;
  Ring ring = Ring::S0;
  Coeff coeff = Coeff::A;
  GradingROG alpha;
  Level level = Level::GG;
  std::vector<Int> c;

  Cell cell() const { return group_at(ring, alpha, coeff); }
  const std::vector<Gen>& basis(const Cell& cl) const { return level == Level::GG ? cl.gg : cl.ge; }

  void check(const PointClass& o) const {
    if (p != o.p || ring != o.ring || coeff != o.coeff || !(alpha == o.alpha) || level != o.level)
      throw Error("adding classes from different groups");
  }

  PointClass& normalize() {
    Cell cl = cell();
    const auto& b = basis(cl);
    if (c.size() != b.size()) throw Error("coordinate vector does not match the basis");
    for (size_t i = 0; i < c.size(); ++i)
      if (b[i].order != 0) c[i] = mod(c[i], b[i].order);
    return *this;
  }

  PointClass operator+(const PointClass& o) const {
    check(o);
    PointClass r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = checked_add(c[i], o.c[i]);
    return r.normalize();
  }
  PointClass operator-() const {
    PointClass r = *this;
    for (auto& x : r.c) x = -x;
    return r.normalize();
  }
  PointClass operator-(const PointClass& o) const { return *this + (-o); }
  PointClass operator*(Int k) const {
    PointClass r = *this;
    for (auto& x : r.c) x = checked_mul(x, k);
    return r.normalize();
  }
  bool operator==(const PointClass& o) const {
    return p == o.p && ring == o.ring && coeff == o.coeff && alpha == o.alpha && level == o.level &&
           c == o.c;
  }
  bool is_zero() const {
    for (Int x : c)
      if (x != 0) return false;
    return true;
  }

  std::string str(Style st = {}) const {
    Cell cl = cell();
    const auto& b = basis(cl);
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Int k = c[i];
      std::string nm = b[i].name(st);
      if (s.empty()) s += k < 0 ? "-" : "";
      else s += k < 0 ? " - " : " + ";
      Int ak = k < 0 ? -k : k;
      if (ak != 1) s += std::to_string(ak) + (nm == "1" ? "" : "*" + nm);
      else s += nm;
    }
    return s.empty() ? "0" : s;
  }
};

inline PointClass zero_class(Ring ring, const GradingROG& a, Level lv, Coeff coeff = Coeff::A) {
  PointClass x{a.p, ring, coeff, a, lv, {}};
  Cell cl = x.cell();
  x.c.assign(x.basis(cl).size(), 0);
  return x;
}

inline PointClass basis_class(Ring ring, const GradingROG& a, Level lv, size_t i,
                              Coeff coeff = Coeff::A) {
  PointClass x = zero_class(ring, a, lv, coeff);
  if (i >= x.c.size()) throw Error("no such basis element in " + a.str());
  x.c[i] = 1;
  return x.normalize();
}

namespace detail {

struct Detect {
  Int r = 0, l = 0;
};

// rho and localization images of a non-delta G/G class.
inline Detect detect(const PointClass& x, const Cell& cl) {
  Detect d;
  for (size_t i = 0; i < x.c.size(); ++i) {
    const Gen& g = cl.gg[i];
    if (g.is_delta() && x.c[i] != 0) throw Error("detect: delta class has no localized image");
    d.r = checked_add(d.r, checked_mul(x.c[i], g.r));
    d.l = checked_add(d.l, checked_mul(x.c[i], g.l));
  }
  if (cl.loc_torsion) d.l = mod(d.l, x.p);
  return d;
}

// Find the class in `a` with the given images; fails loudly if none exists.
inline PointClass solve(Ring ring, Coeff coeff, const GradingROG& a, Int r, Int l) {
  PointClass x = zero_class(ring, a, Level::GG, coeff);
  Cell cl = x.cell();
  const int p = a.p;
  const bool tors = cl.loc_torsion || coeff == Coeff::RZ;
  auto fail = [&] {
    throw Error("no class in grading " + a.str() + " with rho-image " + std::to_string(r) +
                " and localized image " + std::to_string(l));
  };
  if (cl.delta_cell() || cl.gg.empty()) {
    if (r != 0 || (tors ? mod(l, p) : l) != 0) fail();
    return x;
  }
  int ir = -1, il = -1;
  for (size_t i = 0; i < cl.gg.size(); ++i) (cl.gg[i].r != 0 ? ir : il) = static_cast<int>(i);
  Int cr = 0;
  if (ir >= 0) {
    if (r % cl.gg[ir].r != 0) fail();
    cr = r / cl.gg[ir].r;
    x.c[ir] = cr;
    l = l - checked_mul(cr, cl.gg[ir].l);
  } else if (r != 0) {
    fail();
  }
  if (tors) l = mod(l, p);
  if (il >= 0) {
    Int gl = cl.gg[il].l;
    if (tors) {
      x.c[il] = mod(checked_mul(l, inv_mod(gl, p)), p);
    } else {
      if (l % gl != 0) fail();
      x.c[il] = l / gl;
    }
  } else if (l != 0) {
    fail();
  }
  return x.normalize();
}

}  // namespace detail

// ---------- structure maps ----------

inline PointClass rho(const PointClass& x) {
  if (x.level != Level::GG) throw Error("rho applies to G/G classes");
  Cell cl = x.cell();
  PointClass y = zero_class(x.ring, x.alpha, Level::Ge, x.coeff);
  if (y.c.empty()) return y;
  y.c = apply_mat(cl.functor.rho, x.c);
  return y.normalize();
}

inline PointClass tau(const PointClass& x) {
  if (x.level != Level::Ge) throw Error("tau applies to G/e classes");
  Cell cl = x.cell();
  PointClass y = zero_class(x.ring, x.alpha, Level::GG, x.coeff);
  if (y.c.empty()) return y;
  y.c = apply_mat(cl.functor.tau, x.c);
  return y.normalize();
}

inline PointClass tgen(const PointClass& x) {
  if (x.level != Level::Ge) throw Error("the Weyl action is on G/e classes");
  Cell cl = x.cell();
  PointClass y = x;
  if (!y.c.empty()) y.c = apply_mat(cl.functor.t, x.c);
  return y.normalize();
}

// Burnside ring action: g acts as tau rho on G/G and by |G| on G/e.
inline PointClass act(const Burnside& b, const PointClass& x) {
  if (x.level == Level::Ge) return x * b.eps();
  return x * b.a + tau(rho(x)) * b.b;
}

// ---------- products ----------

namespace detail {

inline PointClass delta_times(const PointClass& x, const Cell& xc, const PointClass& D,
                              const Cell& dc, Ring out_ring);

}

inline PointClass mul(const PointClass& x, const PointClass& y) {
  if (x.p != y.p) throw Error("mixing primes in a product");
  const GradingROG a = x.alpha + y.alpha;
  const int p = x.p;
  if (x.coeff != y.coeff && !(x.ring == Ring::TEG || y.ring == Ring::TEG))
    throw Error("product of classes with different coefficients");

  // module action of the point on TEG
  if (x.ring == Ring::TEG || y.ring == Ring::TEG) {
    if (x.ring == Ring::TEG && y.ring == Ring::TEG)
      throw Error("TEG is exposed only as a module over the point");
    const PointClass& s = x.ring == Ring::TEG ? y : x;
    const PointClass& T = x.ring == Ring::TEG ? x : y;
    if (s.ring != Ring::S0 || s.coeff != Coeff::A) throw Error("TEG is a module over S0 only");
    if (s.level == Level::Ge) return zero_class(Ring::TEG, a, Level::Ge);
    Cell sc = s.cell(), tc = T.cell();
    PointClass out = zero_class(Ring::TEG, a, Level::GG);
    for (size_t i = 0; i < s.c.size(); ++i) {
      if (s.c[i] == 0 || sc.gg[i].is_delta()) continue;
      PointClass si = basis_class(Ring::S0, s.alpha, Level::GG, i) * s.c[i];
      out = out + detail::delta_times(si, sc, T, tc, Ring::TEG);
    }
    return out;
  }

  if (x.ring != y.ring) throw Error("undefined mixed-ring product");
  const Ring ring = x.ring;
  const Coeff coeff = x.coeff;

  if (x.level == Level::Ge || y.level == Level::Ge) {
    PointClass u = x.level == Level::Ge ? x : rho(x);
    PointClass v = y.level == Level::Ge ? y : rho(y);
    PointClass out = zero_class(ring, a, Level::Ge, coeff);
    if (u.c.empty() || v.c.empty()) return out;
    if (out.c.empty()) throw Error("G/e product lands outside |alpha| = 0");
    out.c[0] = checked_mul(u.c[0], v.c[0]);
    return out.normalize();
  }

  Cell xc = x.cell(), yc = y.cell();
  if (ring == Ring::EG) {
    PointClass out = zero_class(Ring::EG, a, Level::GG);
    if (x.c.empty() || y.c.empty()) return out;
    Int k = checked_mul(x.c[0], y.c[0]);
    if (out.c.empty()) {
      if (k != 0) throw Error("EG product has no target generator in " + a.str());
      return out;
    }
    out.c[0] = k;
    return out.normalize();
  }

  // S0: split into delta and non-delta parts
  const bool xd = xc.delta_cell(), yd = yc.delta_cell();
  if (xd && yd) return zero_class(Ring::S0, a, Level::GG, coeff);
  if (xd || yd) {
    const PointClass& s = xd ? y : x;
    const Cell& sc = xd ? yc : xc;
    const PointClass& D = xd ? x : y;
    const Cell& dc = xd ? xc : yc;
    return detail::delta_times(s, sc, D, dc, Ring::S0);
  }
  if (x.c.empty() || y.c.empty()) return zero_class(Ring::S0, a, Level::GG, coeff);
  auto dx = detail::detect(x, xc), dy = detail::detect(y, yc);
  Int l = checked_mul(dx.l, dy.l);
  if (coeff == Coeff::concZ) {
    // ideal of e^alpha kappa: products of two such classes, localized value l / p per factor
    PointClass out = zero_class(Ring::S0, a, Level::GG, coeff);
    if (out.c.empty()) throw Error("concZ product outside alpha^G = 0");
    out.c[0] = l / p;
    return out;
  }
  return detail::solve(Ring::S0, coeff, a, checked_mul(dx.r, dy.r), l);
}

namespace detail {

// s * D where s is a non-delta point class and D a delta class (in S0 or TEG): both are
// computed in TEG after inverting the Euler classes, then carried back by psi when needed.
inline PointClass delta_times(const PointClass& s, const Cell& sc, const PointClass& D,
                              const Cell& dc, Ring out_ring) {
  const GradingROG a = s.alpha + D.alpha;
  const int p = s.p;
  PointClass out = zero_class(out_ring, a, Level::GG, D.coeff);
  if (D.c.empty() || s.c.empty()) return out;
  Int l = detect(s, sc).l;
  Int j = s.alpha.fixed() < 0 ? -s.alpha.fixed() / 2 : 0;
  if (s.alpha.fixed() > 0 || mod(s.alpha.fixed(), 2) != 0) l = 0;
  Int k = checked_mul(l, D.c[0]);
  if (k == 0 || out.c.empty()) return out;
  const Gen& g = dc.gg[0];
  Cell oc = out.cell();
  const Gen& h = oc.gg[0];
  if (g.kind == Kind::TKap) {
    if (j > 0) return out;
    if (h.kind != Kind::TKap) throw Error("module action: kappa class lands off alpha^G = 0");
  } else {
    // the delta xi^{-n} exponent drops by j; at n = 0 it is gone
    if (j >= g.n) return out;
    if (!h.is_delta() || h.n != g.n - j) throw Error("module action: delta class mismatch in " + a.str());
  }
  out.c[0] = k;
  (void)p;
  return out.normalize();
}

}  // namespace detail

// ---------- long exact sequence ----------

// Grading with RO_0 part a0, total dimension d and fixed dimension f (d = f mod 2 for p odd).
inline GradingROG grading_from(const GradingROG& a0, Int d, Int f) {
  const int p = a0.p;
  if (p == 2) return GradingROG(2, f, {d - f});
  if (mod(d - f, 2) != 0) throw Error("for p odd, |alpha| and alpha^G have equal parity");
  return a0.ro0_part() + GradingROG::M(p, 1) * ((d - f) / 2) + GradingROG::trivial(p, f);
}

// psi : TEG -> S0 at level G/G.
inline PointClass psi(const PointClass& T) {
  if (T.ring != Ring::TEG) throw Error("psi is defined on TEG classes");
  if (T.level == Level::Ge) return zero_class(Ring::S0, T.alpha, Level::Ge);
  PointClass out = zero_class(Ring::S0, T.alpha, Level::GG);
  if (T.c.empty()) return out;
  Cell tc = T.cell();
  if (tc.gg[0].kind == Kind::TKap) return detail::solve(Ring::S0, Coeff::A, T.alpha, 0, T.alpha.p * T.c[0]);
  Cell sc = out.cell();
  if (sc.delta_cell()) {
    out.c[0] = T.c[0];
    return out.normalize();
  }
  return out;
}

// phi : S0 -> EG.
inline PointClass phi(const PointClass& x) {
  if (x.ring != Ring::S0 || x.coeff != Coeff::A) throw Error("phi is defined on S0 classes");
  PointClass out = zero_class(Ring::EG, x.alpha, x.level);
  if (x.level == Level::Ge) {
    if (!x.c.empty()) out.c = x.c;
    return out.normalize();
  }
  if (out.c.empty() || x.c.empty()) return out;
  Cell xc = x.cell();
  if (xc.delta_cell()) return out;
  auto d = detail::detect(x, xc);
  const int p = x.p;
  if (x.alpha.dim() == 0) out.c[0] = d.r;
  else out.c[0] = checked_mul(d.l, detail::split(x.alpha).nu);
  (void)p;
  return out.normalize();
}

// delta : EG(alpha - 1) -> TEG(alpha).
inline PointClass delta(const PointClass& y) {
  if (y.ring != Ring::EG) throw Error("delta is defined on EG classes");
  const GradingROG a = y.alpha + GradingROG::trivial(y.p, 1);
  PointClass out = zero_class(Ring::TEG, a, y.level);
  if (y.level == Level::Ge || y.c.empty()) return out;
  Cell yc = y.cell();
  const Gen& g = yc.gg[0];
  if (g.n > -1) return out;
  if (out.c.empty()) throw Error("delta: no target in " + a.str());
  out.c[0] = checked_mul(g.a0, y.c[0]);
  return out.normalize();
}

// The point acting on EG through phi.
inline PointClass act_eg(const PointClass& s, const PointClass& y) { return mul(phi(s), y); }

/** \brief Matrices of delta, psi, phi around one grading. */
struct LesTriple {
  GradingROG alpha;
  Cell eg_prev, teg, s0, eg, teg_next;
  MackeyMap delta_in, psi, phi, delta_out;
};

namespace detail {

template <class F>
inline Mat level_matrix(Ring src, const GradingROG& sa, Level lv, int rows, F&& f) {
  PointClass z = zero_class(src, sa, lv);
  Mat M(rows, static_cast<int>(z.c.size()));
  for (size_t j = 0; j < z.c.size(); ++j) {
    PointClass img = f(basis_class(src, sa, lv, j));
    for (int i = 0; i < rows; ++i) M(i, static_cast<int>(j)) = img.c[i];
  }
  return M;
}

template <class F>
inline MackeyMap map_of(Ring src, const GradingROG& sa, const Cell& tgt, F&& f) {
  return {level_matrix(src, sa, Level::GG, static_cast<int>(tgt.gg.size()), f),
          level_matrix(src, sa, Level::Ge, static_cast<int>(tgt.ge.size()), f)};
}

}  // namespace detail

inline LesTriple les_maps(const GradingROG& a) {
  const int p = a.p;
  const GradingROG one = GradingROG::trivial(p, 1);
  LesTriple L;
  L.alpha = a;
  L.eg_prev = eg_cell(a - one);
  L.teg = teg_cell(a);
  L.s0 = s0_cell(a);
  L.eg = eg_cell(a);
  L.teg_next = teg_cell(a + one);
  L.delta_in = detail::map_of(Ring::EG, a - one, L.teg, [](const PointClass& x) { return delta(x); });
  L.psi = detail::map_of(Ring::TEG, a, L.s0, [](const PointClass& x) { return psi(x); });
  L.phi = detail::map_of(Ring::S0, a, L.eg, [](const PointClass& x) { return phi(x); });
  L.delta_out = detail::map_of(Ring::EG, a, L.teg_next, [](const PointClass& x) { return delta(x); });
  return L;
}

inline Report les_report(const GradingROG& a) {
  LesTriple L = les_maps(a);
  Report r;
  auto chk = [&](const char* where, const MackeyMap& f, const MackeyMap& g, const Cell& B,
                 const Cell& C) {
    if (!exact_at(f.fGG, g.fGG, B.functor.GG, C.functor.GG))
      r.fail(std::string("not exact at ") + where + "(G/G) in " + a.str());
    if (!exact_at(f.fGe, g.fGe, B.functor.Ge, C.functor.Ge))
      r.fail(std::string("not exact at ") + where + "(G/e) in " + a.str());
  };
  chk("TEG", L.delta_in, L.psi, L.teg, L.s0);
  chk("S0", L.psi, L.phi, L.s0, L.eg);
  chk("EG", L.phi, L.delta_out, L.eg, L.teg_next);
  if (!is_morphism(L.psi, L.teg.functor, L.s0.functor)) r.fail("psi is not a Mackey map in " + a.str());
  if (!is_morphism(L.phi, L.s0.functor, L.eg.functor)) r.fail("phi is not a Mackey map in " + a.str());
  if (!is_morphism(L.delta_out, L.eg.functor, L.teg_next.functor))
    r.fail("delta is not a Mackey map in " + a.str());
  return r;
}

inline bool les_exact(const GradingROG& a) { return les_report(a).ok; }

// ---------- named elements ----------

namespace named {

inline GradingROG M1(int p) { return p == 2 ? GradingROG::Lambda() : GradingROG::M(p, 1); }
// grading of e (p = 2) or e_1
inline GradingROG e_grading(int p) { return M1(p); }
inline GradingROG xi_grading(int p) {
  return p == 2 ? GradingROG::Lambda() * 2 - GradingROG::trivial(2, 2)
                : GradingROG::M(p, 1) - GradingROG::trivial(p, 2);
}

inline PointClass one(int p) { return basis_class(Ring::S0, GradingROG(p), Level::GG, 0); }
inline PointClass kappa(int p) { return basis_class(Ring::S0, GradingROG(p), Level::GG, 1); }

inline PointClass iota(const GradingROG& a) {
  if (a.dim() != 0) throw Error("iota^alpha needs |alpha| = 0");
  if (a.p != 2 && mod(a.fixed(), 2) != 0) throw Error("iota^alpha needs alpha in I^ev");
  return basis_class(Ring::S0, a, Level::Ge, 0);
}

// iota_k^{+-1} (p odd), iota^{+-1} (p = 2)
inline PointClass iota_k(int p, Int k, Int sign = 1) {
  GradingROG a = (p == 2 ? GradingROG::Lambda() - GradingROG::trivial(2, 1)
                         : GradingROG::M(p, k) - GradingROG::trivial(p, 2)) *
                 sign;
  return iota(a);
}

inline PointClass e(int p) { return basis_class(Ring::S0, e_grading(p), Level::GG, 0); }
inline PointClass xi(int p) { return basis_class(Ring::S0, xi_grading(p), Level::GG, 0); }

inline PointClass xi_k(int p, Int k) {
  if (p == 2 || canon_index(p, k) == 1) return xi(p);
  if (canon_index(p, k) == 0) return one(p);
  return basis_class(Ring::S0, GradingROG::M(p, k) - GradingROG::trivial(p, 2), Level::GG, 0);
}

inline PointClass power(const PointClass& x, Int k) {
  if (k < 0) throw Error("negative power");
  PointClass r = x.level == Level::GG ? one(x.p) : iota(GradingROG(x.p));
  if (x.ring == Ring::EG) r = basis_class(Ring::EG, GradingROG(x.p), x.level, 0);
  for (Int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

// e_k = s(k) e_{canonical k}, e_0 = 0.
inline PointClass euler(int p, Int k) {
  int c = canon_index(p, k);
  if (c == 0) return zero_class(Ring::S0, GradingROG::M(p, 0), Level::GG);
  if (p == 2) return power(e(2), 2);
  return basis_class(Ring::S0, GradingROG::M(p, k), Level::GG, 0) * sign_s(p, k);
}

// mu^{alpha,a} for alpha in RO_0, a in nu(alpha).
inline PointClass mu(const GradingROG& a, Int av) {
  const int p = a.p;
  if (!a.in_RO0()) throw Error("mu^{alpha,a} needs alpha in RO_0(G)");
  if (mod(av - nu(a), p) != 0) throw Error("mu^{alpha,a} needs a in nu(alpha)");
  Int a0 = nu_inv(a);
  Int c = 1 - checked_mul(av, a0);
  return basis_class(Ring::S0, a, Level::GG, 0) * av + basis_class(Ring::S0, a, Level::GG, 1) * (c / p);
}

// lambda^{alpha,b} for b in nu(alpha)^{-1}.
inline PointClass lam(const GradingROG& a, Int b) {
  const int p = a.p;
  if (!a.in_RO0()) throw Error("lambda^{alpha,b} needs alpha in RO_0(G)");
  Int a0 = nu_inv(a);
  if (mod(b - a0, p) != 0) throw Error("lambda^{alpha,b} needs b in nu(alpha)^{-1}");
  return basis_class(Ring::S0, a, Level::GG, 0) + basis_class(Ring::S0, a, Level::GG, 1) * ((b - a0) / p);
}

inline PointClass kappa_beta(const GradingROG& a) {
  if (!a.in_RO0()) throw Error("kappa^beta needs beta in RO_0(G)");
  return basis_class(Ring::S0, a, Level::GG, 1);
}

inline PointClass tau_iota(const GradingROG& a) { return tau(iota(a)); }

// e^{-m} kappa
inline PointClass invkappa(int p, Int m) {
  if (m < 0) throw Error("invkappa needs m >= 0");
  if (m == 0) return kappa(p);
  return basis_class(Ring::S0, e_grading(p) * (-m), Level::GG, 0);
}

// e^alpha kappa for alpha^G = 0
inline PointClass ekappa(const GradingROG& a) {
  if (a.fixed() != 0) throw Error("e^alpha kappa needs alpha^G = 0");
  return detail::solve(Ring::S0, Coeff::A, a, 0, a.p);
}

inline GradingROG dxi_grading(int p, Int m, Int n) {
  return GradingROG::trivial(p, 1) - e_grading(p) * m - xi_grading(p) * n;
}

// e^{-m} delta xi^{-n}
inline PointClass dxi(int p, Int m, Int n) {
  if (m < 1 || n < 1) throw Error("e^{-m} delta xi^{-n} needs m, n >= 1");
  GradingROG a = dxi_grading(p, m, n);
  PointClass x = zero_class(Ring::S0, a, Level::GG);
  if (x.c.empty()) throw Error("e^{-m} delta xi^{-n} is not defined here");
  return basis_class(Ring::S0, a, Level::GG, 0);
}

// mu_{j,k,d} in the point, or d xi_j^{-1} xi_k in EG.
inline PointClass mu_map(int p, Int j, Int k, Int d, Ring ring = Ring::S0) {
  if (p == 2) throw Error("mu_{j,k,d} is defined for p odd");
  int cj = canon_index(p, j), ck = canon_index(p, k);
  if (cj == 0 || ck == 0 || cj != j || ck != k) throw Error("mu_{j,k,d} needs 1 <= j, k <= (p-1)/2");
  if (mod(d - checked_mul(k, inv_mod(j, p)), p) != 0) throw Error("mu_{j,k,d} needs d = k/j mod p");
  PointClass m = mu(GradingROG::M(p, k) - GradingROG::M(p, j), d);
  if (ring == Ring::EG) return phi(m);
  return m;
}

// EG generator e^m xi^{alpha'} xi^j in a grading
inline PointClass eg_gen(const GradingROG& a) { return basis_class(Ring::EG, a, Level::GG, 0); }

}  // namespace named

// ---------- coefficient variants ----------

// A -> RZ, killing the ideal generated by the e^alpha kappa.
inline PointClass quotient_map(const PointClass& x) {
  if (x.ring != Ring::S0 || x.coeff != Coeff::A) throw Error("quotient_map takes S0 classes");
  PointClass out = zero_class(Ring::S0, x.alpha, x.level, Coeff::RZ);
  if (x.level == Level::Ge || out.c.empty()) {
    if (!out.c.empty()) out.c = x.c;
    return out.normalize();
  }
  Cell xc = x.cell();
  if (x.c.empty()) return out;
  if (xc.delta_cell()) {
    out.c = x.c;
    return out.normalize();
  }
  auto d = detail::detect(x, xc);
  return detail::solve(Ring::S0, Coeff::RZ, x.alpha, d.r, d.l);
}

// <Z> -> A: the ideal inclusion e^alpha kappa -> e^alpha kappa.
inline PointClass concZ_inclusion(const PointClass& x) {
  if (x.coeff != Coeff::concZ) throw Error("expected a <Z>-coefficient class");
  if (x.c.empty()) return zero_class(Ring::S0, x.alpha, x.level);
  return named::ekappa(x.alpha) * x.c[0];
}

// lambda^alpha with RZ coefficients
inline PointClass rz_lambda(const GradingROG& a) {
  if (!a.in_RO0()) throw Error("lambda^alpha needs alpha in RO_0(G)");
  return basis_class(Ring::S0, a, Level::GG, 0, Coeff::RZ);
}

inline PointClass coeff_generator(Coeff coeff, const GradingROG& a, size_t i = 0) {
  return basis_class(Ring::S0, a, Level::GG, i, coeff);
}

}  // namespace eqc
