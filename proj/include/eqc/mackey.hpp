#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqc/burnside.hpp"
#include "eqc/intmat.hpp"

namespace eqc {

/** \brief Finitely generated abelian group presented on coordinates: orders[i] == 0 is a Z
 * summand, orders[i] >= 2 a Z/orders[i] summand. */
struct FgAbGroup {
  std::vector<Int> orders;

  FgAbGroup() = default;
  explicit FgAbGroup(std::vector<Int> o) : orders(std::move(o)) {
    for (Int x : orders)
      if (x < 0 || x == 1) throw Error("bad cyclic order");
  }
  static FgAbGroup free(int n) { return FgAbGroup(std::vector<Int>(n, 0)); }
  static FgAbGroup cyclic(Int n) { return FgAbGroup({n}); }

  int size() const { return static_cast<int>(orders.size()); }

  // Relation lattice as columns.
  Mat relations() const {
    int k = 0;
    for (Int x : orders) k += x != 0;
    Mat R(size(), k);
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (orders[i] != 0) R(i, c++) = orders[i];
    return R;
  }

  // Invariant form: free rank and divisor chain.
  int rank() const {
    int r = 0;
    for (Int x : orders) r += x == 0;
    return r;
  }
  std::vector<Int> torsion() const {
    Mat R = relations();
    std::vector<Int> t;
    for (Int d : smith(R).diagonal())
      if (d > 1) t.push_back(d);
    return t;
  }
  bool is_zero() const { return rank() == 0 && torsion().empty(); }

  std::vector<Int> reduce(std::vector<Int> v) const {
    for (int i = 0; i < size(); ++i)
      if (orders[i] != 0) v[i] = mod(v[i], orders[i]);
    return v;
  }
  bool is_zero_elt(const std::vector<Int>& v) const {
    for (int i = 0; i < size(); ++i)
      if (orders[i] == 0 ? v[i] != 0 : mod(v[i], orders[i]) != 0) return false;
    return true;
  }

  bool operator==(const FgAbGroup&) const = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    auto add = [&](const std::string& x) { s += (s.empty() ? "" : "+") + x; };
    for (int i = 0; i < rank(); ++i) add("Z");
    for (Int t : torsion()) add("Z/" + std::to_string(t));
    return s;
  }
};

// F and G agree as maps into `target` (columns differ by relations).
inline bool maps_agree(const Mat& F, const Mat& G, const FgAbGroup& target) {
  if (F.rows != G.rows || F.cols != G.cols) return false;
  Mat D = F - G;
  for (int j = 0; j < D.cols; ++j)
    if (!target.is_zero_elt(D.col(j))) return false;
  return true;
}

// F : src -> tgt sends relations to zero.
inline bool well_defined(const Mat& F, const FgAbGroup& src, const FgAbGroup& tgt) {
  return maps_agree(F * src.relations(), Mat(F.rows, src.relations().cols), tgt);
}

// Preimage lattice {x : F x in R_tgt} (columns in Z^{src.size()}).
inline Mat kernel_lattice(const Mat& F, const FgAbGroup& tgt) {
  Mat K = kernel(hstack(F, tgt.relations()));
  Mat out(F.cols, K.cols);
  for (int i = 0; i < F.cols; ++i)
    for (int j = 0; j < K.cols; ++j) out(i, j) = K(i, j);
  return out;
}

// Image of F, plus relations of tgt.
inline Mat image_lattice(const Mat& F, const FgAbGroup& tgt) {
  return hstack(F, tgt.relations());
}

// Exactness of A --f--> B --g--> C at B.
inline bool exact_at(const Mat& f, const Mat& g, const FgAbGroup& B, const FgAbGroup& C) {
  return same_lattice(kernel_lattice(g, C), image_lattice(f, B));
}

inline bool injective(const Mat& f, const FgAbGroup& A, const FgAbGroup& B) {
  return same_lattice(kernel_lattice(f, B), A.relations().cols ? A.relations() : empty_cols(A.size()));
}

inline bool surjective(const Mat& f, const FgAbGroup& B) {
  return same_lattice(image_lattice(f, B), Mat::identity(B.size()));
}

inline bool bijective(const Mat& f, const FgAbGroup& A, const FgAbGroup& B) {
  return injective(f, A, B) && surjective(f, B);
}

/** \brief Mackey functor for Z/p. rho : GG -> Ge, tau : Ge -> GG, t : Ge -> Ge. */
struct MackeyFunctor {
  int p = 2;
  FgAbGroup GG, Ge;
  Mat rho, tau, t;
  std::string label;

  MackeyFunctor() = default;
  MackeyFunctor(int p_, FgAbGroup gg, FgAbGroup ge, Mat r, Mat ta, Mat tt, std::string l = "")
      : p(p_), GG(std::move(gg)), Ge(std::move(ge)), rho(std::move(r)), tau(std::move(ta)),
        t(std::move(tt)), label(std::move(l)) {
    if (rho.rows != Ge.size() || rho.cols != GG.size()) throw Error("rho has wrong shape");
    if (tau.rows != GG.size() || tau.cols != Ge.size()) throw Error("tau has wrong shape");
    if (t.rows != Ge.size() || t.cols != Ge.size()) throw Error("t has wrong shape");
  }

  static MackeyFunctor zero(int p) {
    return MackeyFunctor(p, FgAbGroup(), FgAbGroup(), Mat(0, 0), Mat(0, 0), Mat(0, 0), "0");
  }

  bool is_zero() const { return GG.is_zero() && Ge.is_zero(); }

  Mat norm() const {
    Mat N(Ge.size(), Ge.size()), tk = Mat::identity(Ge.size());
    for (int k = 0; k < p; ++k) {
      N = N + tk;
      tk = t * tk;
    }
    return N;
  }
};

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string s) {
    ok = false;
    failures.push_back(std::move(s));
  }
};

inline Report verify_axioms(const MackeyFunctor& M) {
  Report r;
  const int ng = M.GG.size(), ne = M.Ge.size();
  if (!well_defined(M.rho, M.GG, M.Ge)) r.fail("rho not well defined");
  if (!well_defined(M.tau, M.Ge, M.GG)) r.fail("tau not well defined");
  if (!well_defined(M.t, M.Ge, M.Ge)) r.fail("t not well defined");
  Mat tp = Mat::identity(ne);
  for (int k = 0; k < M.p; ++k) tp = M.t * tp;
  if (!maps_agree(tp, Mat::identity(ne), M.Ge)) r.fail("t^p != 1");
  if (!maps_agree(M.t * M.rho, M.rho, M.Ge)) r.fail("t rho != rho");
  if (!maps_agree(M.tau * M.t, M.tau, M.GG)) r.fail("tau t != tau");
  if (!maps_agree(M.rho * M.tau, M.norm(), M.Ge)) r.fail("rho tau != N");
  // g = tau rho on GG; check g rho = p rho and tau g = p tau
  Mat g = M.tau * M.rho;
  if (!maps_agree(M.rho * g, M.rho * M.p, M.Ge)) r.fail("rho g != p rho");
  if (!maps_agree(g * M.tau, M.tau * M.p, M.GG)) r.fail("g tau != p tau");
  (void)ng;
  return r;
}

/** \brief Pair of level maps. */
struct MackeyMap {
  Mat fGG, fGe;
};

inline bool is_morphism(const MackeyMap& f, const MackeyFunctor& A, const MackeyFunctor& B) {
  return well_defined(f.fGG, A.GG, B.GG) && well_defined(f.fGe, A.Ge, B.Ge) &&
         maps_agree(B.rho * f.fGG, f.fGe * A.rho, B.Ge) &&
         maps_agree(B.tau * f.fGe, f.fGG * A.tau, B.GG) &&
         maps_agree(B.t * f.fGe, f.fGe * A.t, B.Ge);
}

namespace catalog {

inline MackeyFunctor A_GG(int p) {
  // basis {1, g}; rho = eps, tau(1) = g
  return {p, FgAbGroup::free(2), FgAbGroup::free(1), Mat{{1, p}}, Mat{{0}, {1}}, Mat{{1}}, "A_G/G"};
}

inline MackeyFunctor A_Ge(int p) {
  Mat rho(p, 1), tau(1, p), t(p, p);
  for (int k = 0; k < p; ++k) {
    rho(k, 0) = 1;
    tau(0, k) = 1;
    t((k + 1) % p, k) = 1;
  }
  return {p, FgAbGroup::free(1), FgAbGroup::free(p), rho, tau, t, "A_G/e"};
}

// Original display: rho = (d p), tau = (0 1)^T.
inline MackeyFunctor A(int p, Int d) {
  return {p, FgAbGroup::free(2), FgAbGroup::free(1), Mat{{d, p}}, Mat{{0}, {1}}, Mat{{1}},
          "A[" + std::to_string(mod(d, p)) + "]"};
}

// Basis {lambda, kappa mu}: rho = (1 0), tau = (p, -d^{-1})^T. Needs d invertible mod p.
inline MackeyFunctor A_lambda(int p, Int d) {
  Int di = inv_mod(d, p);
  return {p, FgAbGroup::free(2), FgAbGroup::free(1), Mat{{1, 0}}, Mat{{p}, {-di}}, Mat{{1}},
          "A[" + std::to_string(mod(d, p)) + "]"};
}

inline MackeyFunctor concZ(int p) {
  return {p, FgAbGroup::free(1), FgAbGroup(), Mat(0, 1), Mat(1, 0), Mat(0, 0), "<Z>"};
}

inline MackeyFunctor concZp(int p) {
  return {p, FgAbGroup::cyclic(p), FgAbGroup(), Mat(0, 1), Mat(1, 0), Mat(0, 0), "<Z/p>"};
}

inline MackeyFunctor LZ(int p) {
  return {p, FgAbGroup::free(1), FgAbGroup::free(1), Mat{{p}}, Mat{{1}}, Mat{{1}}, "LZ"};
}

inline MackeyFunctor RZ(int p) {
  return {p, FgAbGroup::free(1), FgAbGroup::free(1), Mat{{1}}, Mat{{p}}, Mat{{1}}, "RZ"};
}

inline MackeyFunctor LZminus(int p) {
  if (p != 2) throw Error("LZ- exists only for p = 2");
  return {2, FgAbGroup::cyclic(2), FgAbGroup::free(1), Mat{{0}}, Mat{{1}}, Mat{{-1}}, "LZ-"};
}

inline MackeyFunctor RZminus(int p) {
  if (p != 2) throw Error("RZ- exists only for p = 2");
  return {2, FgAbGroup(), FgAbGroup::free(1), Mat(1, 0), Mat(0, 1), Mat{{-1}}, "RZ-"};
}

inline MackeyFunctor by_name(const std::string& name, int p, Int d = 1) {
  if (name == "A_GG") return A_GG(p);
  if (name == "A_Ge") return A_Ge(p);
  if (name == "A") return A(p, d);
  if (name == "concZ") return concZ(p);
  if (name == "concZp") return concZp(p);
  if (name == "LZ") return LZ(p);
  if (name == "RZ") return RZ(p);
  if (name == "LZminus") return LZminus(p);
  if (name == "RZminus") return RZminus(p);
  throw Error("unknown Mackey functor '" + name + "'");
}

}  // namespace catalog

inline MackeyFunctor direct_sum(const MackeyFunctor& X, const MackeyFunctor& Y) {
  auto blk = [](const Mat& a, const Mat& b) {
    Mat r(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.cols; ++j) r(a.rows + i, a.cols + j) = b(i, j);
    return r;
  };
  auto cat = [](const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> o = a.orders;
    o.insert(o.end(), b.orders.begin(), b.orders.end());
    return FgAbGroup(o);
  };
  return {X.p, cat(X.GG, Y.GG), cat(X.Ge, Y.Ge), blk(X.rho, Y.rho), blk(X.tau, Y.tau),
          blk(X.t, Y.t), X.label + "+" + Y.label};
}

// Enumerate integer matrices of a shape with entries in [lo, hi]; entries on rows with finite
// order are restricted to [0, order) to avoid duplicates.
inline void for_each_matrix(int rows, int cols, Int bound, const FgAbGroup& tgt,
                            const std::function<bool(const Mat&)>& visit) {
  Mat m(rows, cols);
  const int n = rows * cols;
  std::vector<Int> lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    Int ord = tgt.orders[k / cols];
    lo[k] = ord ? 0 : -bound;
    hi[k] = ord ? ord - 1 : bound;
  }
  for (int k = 0; k < n; ++k) m.a[k] = lo[k];
  for (;;) {
    if (!visit(m)) return;
    int k = 0;
    while (k < n && m.a[k] == hi[k]) m.a[k] = lo[k], ++k;
    if (k == n) return;
    ++m.a[k];
  }
}

// Brute-force isomorphism search with entries bounded by max(p, 2).
inline bool is_isomorphic(const MackeyFunctor& X, const MackeyFunctor& Y) {
  if (X.p != Y.p) return false;
  if (X.GG.rank() != Y.GG.rank() || X.GG.torsion() != Y.GG.torsion()) return false;
  if (X.Ge.rank() != Y.Ge.rank() || X.Ge.torsion() != Y.Ge.torsion()) return false;
  if (X.GG.size() > 4 || X.Ge.size() > 4 || Y.GG.size() > 4 || Y.Ge.size() > 4)
    throw Error("is_isomorphic: functor exceeds the brute-force size bound");
  const Int bound = std::max(X.p, 2);
  bool found = false;
  for_each_matrix(Y.Ge.size(), X.Ge.size(), 1, Y.Ge, [&](const Mat& fe) {
    if (!maps_agree(Y.t * fe, fe * X.t, Y.Ge)) return true;
    if (!bijective(fe, X.Ge, Y.Ge)) return true;
    for_each_matrix(Y.GG.size(), X.GG.size(), bound, Y.GG, [&](const Mat& fg) {
      if (!maps_agree(Y.rho * fg, fe * X.rho, Y.Ge)) return true;
      if (!maps_agree(Y.tau * fe, fg * X.tau, Y.GG)) return true;
      if (!well_defined(fg, X.GG, Y.GG) || !bijective(fg, X.GG, Y.GG)) return true;
      found = true;
      return false;
    });
    return !found;
  });
  return found;
}

/** \brief Bilinear map S x T -> U on coordinates: value(i, j) is a vector in U. */
struct Bilinear {
  int n1 = 0, n2 = 0;
  std::vector<std::vector<Int>> table;  // index i * n2 + j

  Bilinear() = default;
  Bilinear(int a, int b, int dim) : n1(a), n2(b), table(static_cast<size_t>(a) * b, std::vector<Int>(dim, 0)) {}

  std::vector<Int>& at(int i, int j) { return table[static_cast<size_t>(i) * n2 + j]; }
  const std::vector<Int>& at(int i, int j) const { return table[static_cast<size_t>(i) * n2 + j]; }

  std::vector<Int> apply(const std::vector<Int>& x, const std::vector<Int>& y, int dim) const {
    std::vector<Int> r(dim, 0);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        Int c = checked_mul(x[i], y[j]);
        if (c == 0) continue;
        const auto& v = at(i, j);
        for (int k = 0; k < dim; ++k) r[k] = checked_add(r[k], checked_mul(c, v[k]));
      }
    return r;
  }
};

inline std::vector<Int> apply_mat(const Mat& F, const std::vector<Int>& x) {
  Mat r = F * Mat::column(x);
  return r.col(0);
}

inline std::vector<Int> unit_vec(int n, int i) {
  std::vector<Int> v(n, 0);
  v[i] = 1;
  return v;
}

inline Report verify_pairing(const MackeyFunctor& S, const MackeyFunctor& T, const MackeyFunctor& U,
                             const Bilinear& phiGG, const Bilinear& phiGe) {
  Report r;
  auto eq = [](const std::vector<Int>& a, const std::vector<Int>& b, const FgAbGroup& g) {
    std::vector<Int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return g.is_zero_elt(d);
  };
  const int ue = U.Ge.size(), ug = U.GG.size();
  for (int i = 0; i < S.Ge.size(); ++i)
    for (int j = 0; j < T.Ge.size(); ++j) {
      auto x = unit_vec(S.Ge.size(), i), y = unit_vec(T.Ge.size(), j);
      auto lhs = apply_mat(U.t, phiGe.apply(x, y, ue));
      auto rhs = phiGe.apply(apply_mat(S.t, x), apply_mat(T.t, y), ue);
      if (!eq(lhs, rhs, U.Ge))
        r.fail("t(xy) != t(x)t(y) at Ge pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i = 0; i < S.GG.size(); ++i)
    for (int j = 0; j < T.GG.size(); ++j) {
      auto x = unit_vec(S.GG.size(), i), y = unit_vec(T.GG.size(), j);
      auto lhs = apply_mat(U.rho, phiGG.apply(x, y, ug));
      auto rhs = phiGe.apply(apply_mat(S.rho, x), apply_mat(T.rho, y), ue);
      if (!eq(lhs, rhs, U.Ge))
        r.fail("rho(xy) != rho(x)rho(y) at GG pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i = 0; i < S.Ge.size(); ++i)
    for (int j = 0; j < T.GG.size(); ++j) {
      auto x = unit_vec(S.Ge.size(), i), y = unit_vec(T.GG.size(), j);
      auto lhs = apply_mat(U.tau, phiGe.apply(x, apply_mat(T.rho, y), ue));
      auto rhs = phiGG.apply(apply_mat(S.tau, x), y, ug);
      if (!eq(lhs, rhs, U.GG))
        r.fail("tau(x rho(y)) != tau(x) y at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i = 0; i < S.GG.size(); ++i)
    for (int j = 0; j < T.Ge.size(); ++j) {
      auto x = unit_vec(S.GG.size(), i), y = unit_vec(T.Ge.size(), j);
      auto lhs = apply_mat(U.tau, phiGe.apply(apply_mat(S.rho, x), y, ue));
      auto rhs = phiGG.apply(x, apply_mat(T.tau, y), ug);
      if (!eq(lhs, rhs, U.GG))
        r.fail("tau(rho(x) y) != x tau(y) at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return r;
}

// Ring pairing on A_{G/G}: (a + bg)(c + dg) in basis {1, g}; Ge level is Z.
inline std::pair<Bilinear, Bilinear> burnside_pairing(int p) {
  Bilinear gg(2, 2, 2), ge(1, 1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Burnside x(p, i == 0, i == 1), y(p, j == 0, j == 1);
      Burnside z = x * y;
      gg.at(i, j) = {z.a, z.b};
    }
  ge.at(0, 0) = {1};
  return {gg, ge};
}

/** \brief Short exact sequence 0 -> K -> M -> Q -> 0. */
struct Extension {
  MackeyFunctor middle;
  MackeyMap inc, proj;
  Int invariant = 0;       // class parameter in normalized coordinates
  std::string identified;  // catalog identification of the class
  bool split = false;
};

inline bool is_short_exact(const MackeyFunctor& K, const MackeyFunctor& M, const MackeyFunctor& Q,
                           const MackeyMap& i, const MackeyMap& pi) {
  if (!is_morphism(i, K, M) || !is_morphism(pi, M, Q)) return false;
  for (int lvl = 0; lvl < 2; ++lvl) {
    const FgAbGroup& k = lvl ? K.Ge : K.GG;
    const FgAbGroup& m = lvl ? M.Ge : M.GG;
    const FgAbGroup& q = lvl ? Q.Ge : Q.GG;
    const Mat& fi = lvl ? i.fGe : i.fGG;
    const Mat& fp = lvl ? pi.fGe : pi.fGG;
    if (!injective(fi, k, m) || !surjective(fp, q) || !exact_at(fi, fp, m, q)) return false;
  }
  return true;
}

namespace detail {

// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
inline std::array<Int, 3> egcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = eqc::floor_div(a, b);
    Int t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) a = -a, x0 = -x0, y0 = -y0;
  return {a, x0, y0};
}

// Rewrite an extension of RZ by <Z> in the basis {s, v}, v = i(1), pi(s) = 1, and with
// pi = identity at level Ge. Returns the second coordinate of tau(1).
inline Int rz_normal_invariant(const Extension& e) {
  const Mat& i = e.inc.fGG;
  const Mat& pg = e.proj.fGG;
  auto [g, x, y] = egcd(pg(0, 0), pg(0, 1));
  if (g != 1) throw Error("projection not surjective");
  Mat P{{x, i(0, 0)}, {y, i(1, 0)}};
  Int det = P(0, 0) * P(1, 1) - P(0, 1) * P(1, 0);
  if (det != 1 && det != -1) throw Error("inclusion and section do not form a basis");
  Mat Pinv{{P(1, 1) * det, -P(0, 1) * det}, {-P(1, 0) * det, P(0, 0) * det}};
  Int sgn = e.proj.fGe(0, 0);
  Mat tau = Pinv * e.middle.tau * sgn;
  return tau(1, 0);
}

}  // namespace detail

// Pullback of an extension of RZ along multiplication by m on RZ, in normalized coordinates.
inline Int rz_pullback_invariant(Int x, Int m) { return checked_mul(x, m); }

inline std::vector<Extension> ext1_classify(const MackeyFunctor& Q, const MackeyFunctor& K) {
  const int p = Q.p;
  std::vector<Extension> reps;
  if (Q.label == "RZ" && K.label == "<Z>") {
    // enumerate middles Z^2 / Z with t = 1 and maps with small entries
    std::vector<Int> seen;
    for (Int r0 = -1; r0 <= 1; ++r0)
      for (Int r1 = -1; r1 <= 1; ++r1)
        for (Int t0 = -p; t0 <= p; ++t0)
          for (Int t1 = -p; t1 <= p; ++t1) {
            MackeyFunctor M(p, FgAbGroup::free(2), FgAbGroup::free(1), Mat{{r0, r1}},
                            Mat{{t0}, {t1}}, Mat{{1}}, "M");
            if (!verify_axioms(M).ok) continue;
            for (Int i0 = -1; i0 <= 1; ++i0)
              for (Int i1 = -1; i1 <= 1; ++i1)
                for (Int q0 = -1; q0 <= 1; ++q0)
                  for (Int q1 = -1; q1 <= 1; ++q1)
                    for (Int qe : {Int{-1}, Int{1}}) {
                      MackeyMap inc{Mat{{i0}, {i1}}, Mat(1, 0)};
                      MackeyMap pr{Mat{{q0, q1}}, Mat{{qe}}};
                      if (!is_short_exact(K, M, Q, inc, pr)) continue;
                      Extension e{M, inc, pr, 0, "", false};
                      Int x = detail::rz_normal_invariant(e);
                      if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
                      seen.push_back(x);
                      // end-fixing automorphisms are [[1,0],[q,1]] in normalized
                      // coordinates and shift x by p q
                      bool dup = false;
                      for (auto& r : reps)
                        if ((x - r.invariant) % p == 0) dup = true;
                      if (dup) continue;
                      e.invariant = x;
                      e.split = mod(x, p) == 0;
                      if (e.split) e.identified = "RZ+<Z> (split)";
                      else e.identified = "A[" + std::to_string(mod(-inv_mod(x, p), p)) + "]";
                      reps.push_back(e);
                    }
          }
    std::sort(reps.begin(), reps.end(), [p](auto& a, auto& b) { return mod(a.invariant, p) < mod(b.invariant, p); });
    return reps;
  }
  if (Q.label == "<Z/p>" && K.label == "<Z>") {
    for (const FgAbGroup& E : {FgAbGroup::free(1), FgAbGroup({0, Int{p}})}) {
      MackeyFunctor M(p, E, FgAbGroup(), Mat(0, E.size()), Mat(E.size(), 0), Mat(0, 0), "M");
      for_each_matrix(E.size(), 1, p, E, [&](const Mat& fi) {
        for_each_matrix(1, E.size(), p, Q.GG, [&](const Mat& fp) {
          MackeyMap inc{fi, Mat(0, 0)}, pr{fp, Mat(0, 0)};
          if (!is_short_exact(K, M, Q, inc, pr)) return true;
          for (auto& r : reps) {
            if (r.middle.GG.size() != E.size()) continue;
            bool eqv = false;
            for_each_matrix(E.size(), E.size(), p, E, [&](const Mat& phi) {
              if (!well_defined(phi, E, E) || !bijective(phi, E, E)) return true;
              if (!maps_agree(phi * fi, r.inc.fGG, E)) return true;
              if (!maps_agree(r.proj.fGG * phi, fp, Q.GG)) return true;
              eqv = true;
              return false;
            });
            if (eqv) return true;
          }
          Extension e{M, inc, pr, 0, "", E.size() == 2};
          if (e.split) {
            e.identified = "<Z/p>+<Z> (split)";
          } else {
            // 0 -> Z -(+-p)-> Z -(d)-> Z/p; normalize sign so the inclusion is p
            Int d = mod(fp(0, 0) * (fi(0, 0) > 0 ? 1 : -1), p);
            e.invariant = d;
            e.identified = "<Z> -p-> <Z> -" + std::to_string(d) + "-> <Z/p>";
          }
          reps.push_back(e);
          return true;
        });
        return true;
      });
    }
    return reps;
  }
  throw Error("ext1_classify supports (RZ, <Z>) and (<Z/p>, <Z>) only");
}

// The extension <Z> -> A[d] -> RZ (1 |-> kappa mu, lambda |-> 1), d invertible mod p.
inline Extension a_d_extension(int p, Int d) {
  return {catalog::A_lambda(p, d), {Mat{{0}, {1}}, Mat(1, 0)}, {Mat{{1, 0}}, Mat{{1}}}, 0, "", false};
}

// Split extension <Z> -> RZ + <Z> -> RZ.
inline Extension rz_split_extension(int p) {
  MackeyFunctor M = direct_sum(catalog::RZ(p), catalog::concZ(p));
  return {M, {Mat{{0}, {1}}, Mat(1, 0)}, {Mat{{1, 0}}, Mat{{1}}}, 0, "", true};
}

// Extension equivalence for extensions of RZ by <Z>, by normalized invariant.
inline bool rz_equivalent(const Extension& a, const Extension& b, int p) {
  Int x = detail::rz_normal_invariant(a), y = detail::rz_normal_invariant(b);
  return (x - y) % p == 0;
}

inline Int rz_invariant(const Extension& e) { return detail::rz_normal_invariant(e); }

}  // namespace eqc
