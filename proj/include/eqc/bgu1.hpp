#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqc/fixed_ring.hpp"
#include "eqc/mackey.hpp"

namespace eqc {

/** \brief Monomial prod (chi^i c)^{m_i} (chi^i c xi_{i,1})^{q_i} xi_{i,1}^{n_i} lambar^{beta,b}.
 *
 * Admissible monomials have q in {0,1} (the epsilons of the basis) and canonical b. */
struct Word {
  std::vector<Int> m, q, n;
  GradingROPi beta;
  std::vector<Int> b;

  static Word unit(int p) {
    Word w;
    w.m.assign(p, 0);
    w.q = w.n = w.m;
    w.beta = GradingROPi(p);
    w.b.assign(p, 1);
    return w;
  }

  int p() const { return static_cast<int>(m.size()); }

  std::vector<Int> key() const {
    std::vector<Int> k;
    for (auto* v : {&m, &q, &n, &b}) k.insert(k.end(), v->begin(), v->end());
    for (auto& g : beta.c) {
      k.push_back(g.n0);
      k.insert(k.end(), g.m.begin(), g.m.end());
    }
    return k;
  }
  bool operator<(const Word& o) const { return key() < o.key(); }
  bool operator==(const Word& o) const { return key() == o.key(); }

  Int degree() const {
    Int d = 0;
    for (int i = 0; i < p(); ++i) d += m[i] + q[i] + n[i];
    return d;
  }
  // integer dimension
  Int dim() const {
    Int d = 0;
    for (int i = 0; i < p(); ++i) d += 2 * (m[i] + q[i]);
    return d;
  }
  std::vector<Int> fixed_dims() const {
    std::vector<Int> f(p());
    for (int i = 0; i < p(); ++i) f[i] = 2 * (m[i] - n[i]);
    return f;
  }

  // grading without the lambar factor
  GradingROPi base_grading() const {
    const int pp = p();
    GradingROPi g(pp);
    for (int i = 0; i < pp; ++i) {
      GradingROPi w = chi_omega(pp, i), x = Omega(pp, i, 1);
      g = g + w * (m[i] + q[i]) + x * (q[i] + n[i]);
    }
    return g;
  }
  GradingROPi grading() const { return base_grading() + beta; }

  Word operator*(const Word& o) const {
    Word r = *this;
    for (int i = 0; i < p(); ++i) {
      r.m[i] += o.m[i];
      r.q[i] += o.q[i];
      r.n[i] += o.n[i];
      r.b[i] = checked_mul(b[i], o.b[i]);
    }
    r.beta = beta + o.beta;
    return r;
  }

  bool lambda_trivial() const {
    if (!beta.is_zero()) return false;
    for (Int x : b)
      if (x != 1) return false;
    return true;
  }

  // Written in the input grammar of the command line tool.
  std::string str(bool with_b = true) const {
    std::string s;
    auto put = [&](const std::string& t, Int e) {
      if (e == 0) return;
      s += (s.empty() ? "" : "*") + t + (e == 1 ? "" : "^" + std::to_string(e));
    };
    for (int i = 0; i < p(); ++i) put("chic(" + std::to_string(i) + ")", m[i]);
    for (int i = 0; i < p(); ++i) put("(chic(" + std::to_string(i) + ")*xi(" + std::to_string(i) + ",1))", q[i]);
    for (int i = 0; i < p(); ++i) put("xi(" + std::to_string(i) + ",1)", n[i]);
    if (!lambda_trivial()) {
      std::string t = "lambar(" + beta.str();
      if (with_b) {
        t += ";";
        for (int i = 0; i < p(); ++i) t += (i ? "," : " ") + std::to_string(b[i]);
      }
      put(t + ")", 1);
    }
    return s.empty() ? "1" : s;
  }
};

// 0 if admissible, else the number of the first condition that fails.
inline int admissible_violation(const Word& w) {
  const int p = w.p();
  for (int i = 0; i < p; ++i)
    if (w.m[i] < 0 || w.n[i] < 0 || w.q[i] < 0 || w.q[i] > 1) return 1;
  for (int i = 0; i < p; ++i)
    if ((w.m[i] > 0 || w.q[i] > 0) && w.n[i] != 0) return 2;
  int free_k = -1;
  for (int i = 0; i < p; ++i)
    if (w.q[i] == 0 && w.n[i] == 0) free_k = i;
  if (free_k < 0) return 3;
  auto order = fixed_dim_order(w.fixed_dims());
  size_t I = 0;
  while (I < order.size() && w.q[order[I]] == 1) ++I;
  for (size_t j = I; j < order.size(); ++j)
    if (w.q[order[j]] != 0) return 4;
  for (int i = 0; i < p; ++i)
    if (w.b[i] < 1 || w.b[i] > p - 1) return 5;
  if (!w.beta[order[I]].is_zero()) return 6;
  if (!w.beta.in_RO0()) return 6;
  for (int i = 0; i < p; ++i)
    if (mod(w.b[i] - nu_inv(w.beta[i]), p) != 0) return 5;
  return 0;
}

inline bool is_admissible(const Word& w) { return admissible_violation(w) == 0; }

inline void canonical_b(Word& w) {
  for (int k = 0; k < w.p(); ++k) w.b[k] = nu_inv(w.beta[k]);
}

/** \brief Admissible monomials with grading in a + RO(G), up to integer dimension max_dim,
 * ordered by dimension (one per even dimension). */
inline std::vector<Word> enumerate_admissible(const GradingROPi& a, Int max_dim) {
  const int p = a.p;
  auto F = a.fixed_dims();
  auto order = fixed_dim_order(F);
  std::vector<Word> out;
  for (Int N = -F[order[0]];; N += 2) {
    Word base = Word::unit(p);
    Int msum = 0, cnt = 0;
    for (int k = 0; k < p; ++k) {
      Int v = F[k] + N;
      if (mod(v, 2) != 0) throw Error("fixed dimensions of " + a.str() + " have mixed parity");
      if (v >= 0) {
        base.m[k] = v / 2;
        ++cnt;
      } else {
        base.n[k] = -v / 2;
      }
      msum += base.m[k];
    }
    if (2 * msum > max_dim) break;
    for (Int L = 0; L < cnt; ++L) {
      if (2 * (msum + L) > max_dim) break;
      Word w = base;
      for (Int i = 0; i < L; ++i) w.q[order[i]] = 1;
      GradingROPi D = a - w.base_grading();
      w.beta = D - D[order[L]];
      if (!w.beta.in_RO0()) throw Error("enumerate_admissible: remainder " + w.beta.str() + " not in RO_0");
      canonical_b(w);
      out.push_back(w);
    }
  }
  return out;
}

/** \brief Homogeneous class: a sum of coefficient * admissible word, the coefficient a G/G
 * point class in grading T - |word|. */
struct BClass {
  int p = 2;
  Coeff coeff = Coeff::A;
  GradingROPi grading;
  std::map<Word, PointClass> terms;

  static BClass zero(const GradingROPi& T, Coeff coeff = Coeff::A) {
    BClass x;
    x.p = T.p;
    x.coeff = coeff;
    x.grading = T;
    return x;
  }

  GradingROG coeff_grading(const Word& w) const {
    GradingROPi d = grading - w.grading();
    if (!d.is_constant()) throw Error("word " + w.str() + " does not fit grading " + grading.str());
    return d[0];
  }

  void add(const Word& w, const PointClass& c) {
    if (c.level != Level::GG) throw Error("B coefficients live at level G/G");
    if (c.coeff != coeff) throw Error("coefficient system mismatch");
    if (!(c.alpha == coeff_grading(w)))
      throw Error("coefficient grading " + c.alpha.str() + " wrong for " + w.str() + " in " + grading.str());
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  BClass operator+(const BClass& o) const {
    if (!(grading == o.grading) || coeff != o.coeff) throw Error("adding B classes in different gradings");
    BClass r = *this;
    for (auto& [w, c] : o.terms) r.add(w, c);
    return r;
  }
  BClass operator-() const {
    BClass r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
  }
  BClass operator-(const BClass& o) const { return *this + (-o); }
  BClass operator*(Int k) const {
    BClass r = zero(grading, coeff);
    for (auto& [w, c] : terms) r.add(w, c * k);
    return r;
  }
  bool operator==(const BClass& o) const {
    if (!(grading == o.grading) || coeff != o.coeff || terms.size() != o.terms.size()) return false;
    for (auto& [w, c] : terms) {
      auto it = o.terms.find(w);
      if (it == o.terms.end() || !(it->second == c)) return false;
    }
    return true;
  }

  std::string str(Style st = {}) const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [w, c] : terms) {
      std::string cs = c.str(st);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      std::string ws = w.str();
      std::string t = ws == "1" ? cs : (cs == "1" ? ws : cs + " " + ws);
      s += (s.empty() ? "" : " + ") + t;
    }
    return s;
  }
};

// ---------- eta ----------

namespace detail {

inline FixedRingClass fixed_unit(int p, Coeff coeff) {
  if (coeff == Coeff::A) return fixed_one(p);
  return fixed_scalar(coeff_generator(coeff, GradingROG(p)));
}

inline FixedRingClass in_coeff(const FixedRingClass& x, Coeff coeff) {
  if (coeff == Coeff::A) return x;
  if (coeff == Coeff::RZ) return to_rz(x);
  throw Error("eta with <Z> coefficients goes through the inclusion into A");
}

inline Int loc(const PointClass& x) { return detect(x, x.cell()).l; }

}  // namespace detail

// eta of the word without its lambar factor
inline FixedRingClass eta_base(const Word& w, Coeff coeff = Coeff::A) {
  const int p = w.p();
  FixedRingClass r = detail::fixed_unit(p, coeff);
  for (int i = 0; i < p; ++i) {
    Int cm = w.m[i] + w.q[i], xn = w.q[i] + w.n[i];
    if (cm) r = fixed_mul(r, detail::in_coeff(fixed_pow(eta_chic(p, i), cm), coeff));
    if (xn) r = fixed_mul(r, detail::in_coeff(fixed_pow(eta_xi(p, i, 1), xn), coeff));
  }
  return r;
}

inline FixedRingClass eta_lambda_part(const Word& w, Coeff coeff = Coeff::A) {
  if (coeff == Coeff::A) return eta_lambar(w.beta, w.b);
  FixedRingClass r = FixedRingClass::zero(w.beta, Ring::S0, coeff);
  for (int k = 0; k < w.p(); ++k) r.add(k, 0, rz_lambda(w.beta[k]));
  return r;
}

inline FixedRingClass eta_word(const Word& w, Coeff coeff = Coeff::A) {
  if (w.lambda_trivial()) return eta_base(w, coeff);
  return fixed_mul(eta_base(w, coeff), eta_lambda_part(w, coeff));
}

inline FixedRingClass eta(const BClass& x) {
  if (x.coeff == Coeff::concZ) throw Error("eta of a <Z> class: include it into A first");
  FixedRingClass r = FixedRingClass::zero(x.grading, Ring::S0, x.coeff);
  for (auto& [w, c] : x.terms) r = r + fixed_mul(fixed_scalar(c), eta_word(w, x.coeff));
  return r;
}

// ---------- normal form ----------

namespace detail {

struct Term {
  PointClass c;
  Word w;
};

inline std::vector<Int> grading_key(const GradingROPi& T) {
  Word w = Word::unit(T.p);
  w.beta = T;
  return w.key();
}

// Invert an integer matrix whose pivots on the diagonal are +-1 (triangular in practice).
inline std::vector<std::vector<Int>> invert_unimodular(std::vector<std::vector<Int>> M) {
  const size_t n = M.size();
  std::vector<std::vector<Int>> X(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) X[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    Int d = M[c][c];
    if (d != 1 && d != -1) throw Error("kappa system: diagonal entry " + std::to_string(d) + " is not a unit");
    for (size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c] == 0) continue;
      Int f = M[r][c] * d;
      for (size_t k = 0; k < n; ++k) {
        M[r][k] = checked_add(M[r][k], -checked_mul(f, M[c][k]));
        X[r][k] = checked_add(X[r][k], -checked_mul(f, X[c][k]));
      }
    }
  }
  for (size_t r = 0; r < n; ++r)
    if (M[r][r] == -1)
      for (size_t k = 0; k < n; ++k) X[r][k] = -X[r][k];
  return X;
}

inline std::map<std::vector<Int>, std::map<int, BClass>>& kt_cache() {
  static std::map<std::vector<Int>, std::map<int, BClass>> c;
  return c;
}

}  // namespace detail

/** \brief For each k with T^G_k >= 0, the class KT(k) in grading T whose eta is the single kappa
 * line sigma_k^{T^G_k/2} e^{..} kappa on component k, written in admissible monomials.
 *
 * The candidates e^{..}kappa * y_j (y_j admissible, centered at the j-th index of the order)
 * restrict to combinations of those lines by a triangular matrix with unit diagonal. */
inline const std::map<int, BClass>& kt_expansion(const GradingROPi& T) {
  auto key = detail::grading_key(T);
  auto& cache = detail::kt_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int p = T.p;
  auto F = T.fixed_dims();
  for (Int f : F)
    if (mod(f, 2) != 0) throw Error("kappa lines need even fixed dimensions, got " + T.str());
  auto order = fixed_dim_order(F);
  Word base = Word::unit(p);
  size_t N = 0;
  for (int k = 0; k < p; ++k) {
    if (F[k] >= 0) {
      base.m[k] = F[k] / 2;
      ++N;
    } else {
      base.n[k] = -F[k] / 2;
    }
  }
  std::vector<FixedRingClass> lines;
  for (size_t l = 0; l < N; ++l) lines.push_back(eta_kappa_line(T, order[l]));

  std::vector<Word> ys;
  std::vector<PointClass> cs;
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N, 0));
  for (size_t j = 0; j < N; ++j) {
    Word y = base;
    for (size_t i = 0; i < j; ++i) y.q[order[i]] = 1;
    GradingROPi D = T - y.base_grading();
    GradingROG dc = D[order[j]];
    y.beta = D - dc;
    canonical_b(y);
    PointClass c = named::ekappa(dc);
    FixedRingClass E = fixed_mul(fixed_scalar(c), eta_word(y));
    FixedRingClass acc = FixedRingClass::zero(T);
    for (size_t l = 0; l < N; ++l) {
      int k = order[l];
      Int s = F[k] / 2;
      auto it = E.comp[k].find(s);
      if (it == E.comp[k].end()) continue;
      Int num = detail::loc(it->second), den = detail::loc(lines[l].comp[k].at(s));
      if (num % den != 0) throw Error("kappa system: non-integral entry");
      M[j][l] = num / den;
      acc = acc + lines[l] * M[j][l];
    }
    if (!(acc == E)) throw Error("kappa system: e^a kappa y is not a combination of kappa lines in " + T.str());
    ys.push_back(y);
    cs.push_back(c);
  }
  auto X = detail::invert_unimodular(M);
  std::map<int, BClass> out;
  for (size_t l = 0; l < N; ++l) {
    BClass r = BClass::zero(T);
    for (size_t j = 0; j < N; ++j)
      if (X[l][j]) r.add(ys[j], cs[j] * X[l][j]);
    out.emplace(order[l], r);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

namespace detail {

class Normalizer {
 public:
  Normalizer(const GradingROPi& T, Coeff coeff) : p_(T.p), coeff_(coeff), out_(BClass::zero(T, coeff)) {
    if (coeff == Coeff::concZ) throw Error("normal forms are computed with A or RZ coefficients");
  }

  void push(const PointClass& c, const Word& w) { work_.push_back({c, w}); }

  BClass run() {
    size_t steps = 0;
    while (!work_.empty()) {
      if (++steps > 2000000) throw Error("normalize did not terminate");
      Term t = std::move(work_.back());
      work_.pop_back();
      if (t.c.is_zero()) continue;
      step(t);
    }
    return out_;
  }

 private:
  int p_;
  Coeff coeff_;
  BClass out_;
  std::vector<Term> work_;

  PointClass coeff_of(const PointClass& x) const { return coeff_ == Coeff::RZ ? quotient_map(x) : x; }

  void step(Term t) {
    Word& w = t.w;
    for (int i = 0; i < p_; ++i) {
      Int s = std::min(w.m[i], w.n[i]);
      w.m[i] -= s;
      w.n[i] -= s;
      w.q[i] += s;
    }
    bool all_xi = true;
    for (int i = 0; i < p_; ++i) all_xi = all_xi && (w.q[i] + w.n[i] > 0);
    if (all_xi) {
      // pull out xi_1 = prod xi_{i,1}
      for (int i = 0; i < p_; ++i) {
        if (w.n[i] > 0) {
          --w.n[i];
        } else {
          --w.q[i];
          ++w.m[i];
        }
      }
      work_.push_back({mul(t.c, coeff_of(named::xi(p_))), w});
      return;
    }
    if (auto pv = choose_pivot(w)) {
      pivot(t, pv->first, pv->second);
      return;
    }
    center(t);
  }

  std::optional<std::pair<int, int>> choose_pivot(const Word& w) const {
    Int Q = 0, N = 0;
    for (int i = 0; i < p_; ++i) {
      Q += w.q[i];
      N += w.n[i] == 0;
    }
    if (Q >= N) {
      int j = -1, i = -1;
      for (int k = 0; k < p_ && j < 0; ++k)
        if (w.n[k] == 0 && w.q[k] == 0) j = k;
      for (int k = 0; k < p_ && i < 0; ++k)
        if (w.q[k] > 1 || (w.q[k] == 1 && w.n[k] > 0)) i = k;
      if (i < 0 || j < 0) throw Error("normalize: no pivot found");
      return std::make_pair(i, j);
    }
    auto order = fixed_dim_order(w.fixed_dims());
    std::vector<bool> target(p_, false);
    for (Int r = 0; r < Q; ++r) target[order[r]] = true;
    int j = -1, i = -1;
    for (Int r = 0; r < Q && j < 0; ++r)
      if (w.q[order[r]] == 0) j = order[r];
    if (j < 0) return std::nullopt;
    for (int k = 0; k < p_ && i < 0; ++k)
      if (w.q[k] > 1 || (w.q[k] == 1 && !target[k])) i = k;
    if (i < 0) throw Error("normalize: no pivot source");
    return std::make_pair(i, j);
  }

  // chi^i c xi_{i,1} = chi^j c xi_{j,1} lambar^{theta,a} - e_{i-j} lambar^{phi,b}
  void pivot(const Term& t, int i, int j) {
    GradingROPi gi = chi_omega(p_, i) + Omega(p_, i, 1);
    GradingROPi theta = gi - chi_omega(p_, j) - Omega(p_, j, 1);
    GradingROPi phi = gi - GradingROG::M(p_, i - j);
    std::vector<Int> a(p_), bp(p_);
    for (int k = 0; k < p_; ++k) a[k] = nu_inv(theta[k]);
    for (int k = 0; k < p_; ++k) {
      if (k == j) bp[k] = p_ == 2 ? -1 : 1;
      else if (k == i) bp[k] = a[k];
      else bp[k] = sign_s(p_, i - j) * (sign_s(p_, k - j) * a[k] - sign_s(p_, k - i));
      if (mod(bp[k] - nu_inv(phi[k]), p_) != 0) throw Error("pivot: coefficient b not in nu(phi)^{-1}");
    }
    Word w1 = t.w, w2 = t.w;
    w1.q[i] -= 1;
    w1.q[j] += 1;
    w1.beta = w1.beta + theta;
    w2.q[i] -= 1;
    w2.beta = w2.beta + phi;
    for (int k = 0; k < p_; ++k) {
      w1.b[k] = checked_mul(w1.b[k], a[k]);
      w2.b[k] = checked_mul(w2.b[k], bp[k]);
    }
    work_.push_back({t.c, w1});
    work_.push_back({mul(t.c, coeff_of(-named::euler(p_, i - j))), w2});
  }

  void center(const Term& t) {
    const Word& w = t.w;
    auto order = fixed_dim_order(w.fixed_dims());
    Int Q = 0;
    for (Int x : w.q) Q += x;
    int kI = order[Q];
    GradingROG bc = w.beta[kI];
    Word a = w;
    a.beta = w.beta - bc;
    canonical_b(a);
    if (coeff_ == Coeff::RZ) {
      out_.add(a, mul(t.c, rz_lambda(bc)));
      return;
    }
    Int bk = w.b[kI];
    out_.add(a, mul(t.c, named::lam(bc, bk)));
    for (int l = 0; l < p_; ++l) {
      Int d = w.b[l] - checked_mul(bk, a.b[l]);
      if (d % p_ != 0) throw Error("normalize: b not congruent after centering");
      if (d != 0) kappa_term(t.c, w, l, d / p_);
    }
  }

  // add  mult * c * (word without lambar) * kappabar_l^beta
  void kappa_term(const PointClass& c, const Word& w, int l, Int mult) {
    if (w.q[l] + w.n[l] > 0) return;  // xi_{l,1} kills kappabar_l
    FixedRingClass kb = FixedRingClass::zero(w.beta);
    kb.add(l, 0, named::kappa_beta(w.beta[l]));
    FixedRingClass E = fixed_mul(fixed_mul(fixed_scalar(c), eta_base(w)), kb);
    if (E.is_zero()) return;
    const GradingROPi& T = out_.grading;
    FixedRingClass L = eta_kappa_line(T, l);
    Int s = T[l].fixed() / 2;
    auto it = E.comp[l].find(s);
    if (it == E.comp[l].end()) throw Error("kappa term off its line in " + T.str());
    Int num = loc(it->second), den = loc(L.comp[l].at(s));
    if (num % den != 0) throw Error("kappa term: non-integral multiple");
    Int k = num / den;
    if (!(L * k == E)) throw Error("kappa term is not a multiple of the kappa line in " + T.str());
    const auto& kt = kt_expansion(T);
    out_ = out_ + kt.at(l) * checked_mul(k, mult);
  }
};

}  // namespace detail

inline BClass normalize(const GradingROPi& T, Coeff coeff, const std::vector<std::pair<PointClass, Word>>& terms) {
  detail::Normalizer nz(T, coeff);
  for (auto& [c, w] : terms) nz.push(c, w);
  return nz.run();
}

inline BClass normalize(const PointClass& c, const Word& w) {
  GradingROPi T = w.grading() + c.alpha;
  return normalize(T, c.coeff, {{c, w}});
}

inline BClass bmul(const BClass& x, const BClass& y) {
  if (x.p != y.p || x.coeff != y.coeff) throw Error("B product of classes from different theories");
  detail::Normalizer nz(x.grading + y.grading, x.coeff);
  for (auto& [wx, cx] : x.terms)
    for (auto& [wy, cy] : y.terms) nz.push(mul(cx, cy), wx * wy);
  return nz.run();
}

inline BClass bscale(const PointClass& c, const BClass& x) {
  detail::Normalizer nz(x.grading + c.alpha, x.coeff);
  for (auto& [w, cx] : x.terms) nz.push(mul(c, cx), w);
  return nz.run();
}

inline BClass bpow(const BClass& x, Int n);

// ---------- generators ----------

namespace bgen {

inline PointClass unit(int p, Coeff coeff) {
  return coeff == Coeff::A ? named::one(p) : coeff_generator(coeff, GradingROG(p));
}

inline BClass scalar(int p, const PointClass& c) {
  BClass r = BClass::zero(GradingROPi::constant(c.alpha), c.coeff);
  r.add(Word::unit(p), c);
  return r;
}

inline BClass one(int p, Coeff coeff = Coeff::A) { return scalar(p, unit(p, coeff)); }

inline BClass chic(int p, Int i, Coeff coeff = Coeff::A) {
  Word w = Word::unit(p);
  w.m[mod(i, p)] = 1;
  return normalize(unit(p, coeff), w);
}

inline BClass c(int p, Coeff coeff = Coeff::A) { return chic(p, 0, coeff); }

inline BClass lambar(const GradingROPi& beta, const std::vector<Int>& b, Coeff coeff = Coeff::A) {
  const int p = beta.p;
  if (coeff == Coeff::A) check_lambar(beta, b);
  else if (!beta.in_RO0()) throw Error("lambar needs beta in RO_0(Pi)");
  Word w = Word::unit(p);
  w.beta = beta;
  w.b = coeff == Coeff::A ? b : std::vector<Int>(p, 1);
  return normalize(unit(p, coeff), w);
}

inline BClass lambar(const GradingROPi& beta, Coeff coeff = Coeff::A) {
  std::vector<Int> b(beta.p);
  for (int k = 0; k < beta.p; ++k) b[k] = nu_inv(beta[k]);
  return lambar(beta, b, coeff);
}

// xibar^{Omega_{i,j}} = xi_{i,1} lambar^{Omega_{i,j} - Omega_{i,1}, a}, a_i = j^{-1}
inline BClass xi(int p, Int i, Int j = 1, Coeff coeff = Coeff::A) {
  if (p == 2 && mod(j, 2) == 0) throw Error("xi_{i,j} for p = 2 needs j odd");
  if (p != 2 && canon_index(p, j) == 0) throw Error("xi_{i,j} needs j prime to p");
  int ii = static_cast<int>(mod(i, p));
  Word w = Word::unit(p);
  w.n[ii] = 1;
  w.beta = Omega(p, ii, j) - Omega(p, ii, 1);
  if (coeff == Coeff::A) w.b[ii] = inv_mod(j, p);
  return normalize(unit(p, coeff), w);
}

inline BClass kapbar(int k, const GradingROPi& beta) {
  const int p = beta.p;
  std::vector<Int> b(p);
  for (int i = 0; i < p; ++i) b[i] = nu_inv(beta[i]);
  std::vector<Int> b2 = b;
  b2[mod(k, p)] += p;
  return lambar(beta, b2) - lambar(beta, b);
}

}  // namespace bgen

inline BClass bpow(const BClass& x, Int n) {
  if (n < 0) throw Error("negative power");
  BClass r = bgen::one(x.p, x.coeff);
  for (Int i = 0; i < n; ++i) r = bmul(r, x);
  return r;
}

namespace bgen {

// xibar^alpha for alpha in RO_+(Pi)
inline BClass xibar(const GradingROPi& a, Coeff coeff = Coeff::A) {
  const int p = a.p;
  if (!a.in_ROplus()) throw Error("xibar^alpha needs alpha in RO_+(Pi)");
  BClass r = one(p, coeff);
  for (int k = 0; k < p; ++k) {
    const GradingROG& g = a[k];
    if (p == 2) {
      r = bmul(r, bpow(xi(p, k, 1, coeff), g.m[0] / 2));
      continue;
    }
    for (size_t j = 0; j < g.m.size(); ++j)
      if (g.m[j]) r = bmul(r, bpow(xi(p, k, static_cast<Int>(j + 1), coeff), g.m[j]));
  }
  return r;
}

// Lewis-style generators: Gamma = prod chi^i c and, p odd, Delta_k; p = 2 gamma = c xi_{0,1}.
inline BClass Gamma(int p, Coeff coeff = Coeff::A) {
  Word w = Word::unit(p);
  for (auto& x : w.m) x = 1;
  return normalize(unit(p, coeff), w);
}

inline GradingROPi delta_beta(int p, int k) {
  GradingROPi b(p);
  for (int i = 0; i < k; ++i) b = b - chi_omega(p, i) - Omega(p, i, 1) + GradingROG::M(p, k - i);
  return b;
}

inline BClass Delta(int p, int k, Coeff coeff = Coeff::A) {
  Word w = Word::unit(p);
  for (int i = 0; i < k; ++i) w.q[i] = 1;
  w.beta = delta_beta(p, k);
  canonical_b(w);
  return normalize(unit(p, coeff), w);
}

inline BClass gamma2(Coeff coeff = Coeff::A) { return bmul(c(2, coeff), xi(2, 0, 1, coeff)); }

// e_1^{-m} kappabar_k^beta: the class whose eta is e_1^{-m} kappa^{beta_k} on component k alone
inline BClass ekapbar(Int m, int k, const GradingROPi& beta) {
  if (!beta.in_RO0()) throw Error("kappabar_k^beta needs beta in RO_0(Pi)");
  if (m < 0) throw Error("e_1^{-m} kappabar needs m >= 0");
  GradingROPi T = beta - GradingROG::M(beta.p, 1) * m;
  return kt_expansion(T).at(static_cast<int>(mod(k, beta.p)));
}

}  // namespace bgen

// A -> RZ on normal forms: coefficients go through the quotient, lambar^{beta,b} to lambar^beta.
inline BClass to_rz(const BClass& x) {
  if (x.coeff != Coeff::A) throw Error("to_rz takes A-coefficient classes");
  BClass r = BClass::zero(x.grading, Coeff::RZ);
  for (auto& [w, c] : x.terms) {
    Word v = w;
    v.b.assign(x.p, 1);
    r.add(v, quotient_map(c));
  }
  return r;
}

// <Z> -> A on coefficients
inline BClass from_concz(const BClass& x) {
  if (x.coeff != Coeff::concZ) throw Error("from_concz takes <Z>-coefficient classes");
  BClass r = BClass::zero(x.grading);
  for (auto& [w, c] : x.terms) r = r + normalize(concZ_inclusion(c), w);
  return r;
}

// Membership in the ideal generated by the e^alpha kappabar: every coefficient is a multiple
// of e^a kappa, so each term splits as sum_k b_k e^a kappabar_k^beta times a word.
inline bool in_kappa_ideal(const BClass& x) {
  for (auto& [w, c] : x.terms) {
    if (c.alpha.fixed() != 0) return false;
    PointClass k = named::ekappa(c.alpha);
    Int l = detail::loc(k), lc = detail::loc(c);
    if (lc % l != 0 || !(k * (lc / l) == c)) return false;
  }
  return true;
}

// ---------- checks ----------

// eta(x y) against eta(x) eta(y)
inline bool eta_multiplicative(const BClass& x, const BClass& y) {
  return eta(bmul(x, y)) == fixed_mul(eta(x), eta(y));
}

struct Triangularity {
  std::vector<std::vector<Int>> matrix;  // rows: targets, columns: admissible monomials
  bool ok = true;
  std::string why;
};

/** f over EG_+: columns are the admissible monomials y_j of a + RO(G) by dimension, rows the
 * basis c^n xibar^{..}; the entry is the sigma_0^n coefficient of eta(y_j)_0 in the EG variant. */
inline Triangularity f_eg_matrix(const GradingROPi& a, size_t size) {
  auto ys = enumerate_admissible(a, 2 * static_cast<Int>(size) - 2);
  ys.resize(std::min(ys.size(), size));
  Triangularity t;
  t.matrix.assign(ys.size(), std::vector<Int>(ys.size(), 0));
  for (size_t j = 0; j < ys.size(); ++j) {
    FixedRingClass e = to_eg(eta_word(ys[j]));
    for (auto& [s, x] : e.comp[0]) {
      if (s >= static_cast<Int>(ys.size())) continue;
      Int v = x.c.empty() ? 0 : x.c[0];
      t.matrix[s][j] = v;
      if (s > static_cast<Int>(j) && v != 0) {
        t.ok = false;
        t.why = "entry below the diagonal";
      }
      if (s == static_cast<Int>(j) && (v != 1 && v != -1 ? true : !x.alpha.in_Iev())) {
        t.ok = false;
        t.why = "diagonal entry " + x.str() + " is not a unit";
      }
    }
    if (t.matrix[j][j] == 0) {
      t.ok = false;
      t.why = "zero on the diagonal";
    }
  }
  for (size_t j = 0; j < ys.size() && t.ok; ++j)
    if (t.matrix[j][j] != 1) {
      t.ok = false;
      t.why = "diagonal not 1";
    }
  return t;
}

/** f over the cofiber: rows are sigma_k^n zeta ordered by (2n - a^G_k, position of k in the
 * order), entries the localized images of the sigma_k^n coefficients of eta(y_j)_k. */
inline Triangularity f_teg_matrix(const GradingROPi& a, size_t size) {
  const int p = a.p;
  auto F = a.fixed_dims();
  auto order = fixed_dim_order(F);
  std::vector<int> pos(p);
  for (int i = 0; i < p; ++i) pos[order[i]] = i;
  // targets (value, pos, k, n)
  std::vector<std::pair<std::pair<Int, int>, std::pair<int, Int>>> tg;
  Int lo = -F[order[0]];
  for (Int v = lo; tg.size() < size + static_cast<size_t>(p); v += 2)
    for (int i = 0; i < p; ++i) {
      int k = order[i];
      Int twon = v + F[k];
      if (twon >= 0) tg.push_back({{v, i}, {k, twon / 2}});
    }
  tg.resize(size);
  auto ys = enumerate_admissible(a, 2 * static_cast<Int>(size) - 2);
  ys.resize(std::min(ys.size(), size));
  Triangularity t;
  t.matrix.assign(size, std::vector<Int>(ys.size(), 0));
  for (size_t j = 0; j < ys.size(); ++j) {
    FixedRingClass e = eta_word(ys[j]);
    for (size_t r = 0; r < size; ++r) {
      auto [k, n] = tg[r].second;
      auto it = e.comp[k].find(n);
      if (it == e.comp[k].end()) continue;
      Int v = detail::loc(it->second);
      t.matrix[r][j] = v;
      if (r < j && v != 0) {
        t.ok = false;
        t.why = "entry above the diagonal";
      }
    }
    if (j < size && t.matrix[j][j] != 1 && t.matrix[j][j] != -1) {
      t.ok = false;
      t.why = "diagonal entry " + std::to_string(t.matrix[j][j]) + " is not +-1";
    }
  }
  return t;
}

/** \brief Named relations of the ring, each checked through normal forms (and eta). */
inline Report verify_relations(int p, Coeff coeff = Coeff::A) {
  Report r;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) r.fail(what);
  };
  auto safe = [&](const std::string& what, auto&& f) {
    try {
      check(f(), what);
    } catch (const std::exception& e) {
      r.fail(what + ": " + e.what());
    }
  };
  const Coeff cf = coeff == Coeff::RZ ? Coeff::RZ : Coeff::A;
  auto u = [&](const PointClass& x) { return cf == Coeff::RZ ? quotient_map(x) : x; };
  // pivot relation, all i != j
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      safe("pivot " + std::to_string(i) + "->" + std::to_string(j), [&] {
        BClass lhs = bmul(bgen::chic(p, i, cf), bgen::xi(p, i, 1, cf));
        Word w = Word::unit(p);
        w.q[i] = 1;
        BClass direct = normalize(bgen::unit(p, cf), w);
        FixedRingClass want = fixed_mul(detail::in_coeff(eta_chic(p, i), cf), detail::in_coeff(eta_xi(p, i, 1), cf));
        return lhs == direct && eta(lhs) == want;
      });
    }
  // chi twist after EG_+ (A only)
  if (cf == Coeff::A)
    for (int i = 0; i < p; ++i)
      safe("chi^i c in EG", [&] {
        auto t = chi_twist(p, i);
        return t.lhs == t.rhs;
      });
  // lambar multiplicative, kappabar relations
  if (cf == Coeff::A && p > 2) {
    GradingROPi b1 = Omega(p, 1, 2) - Omega(p, 1, 1);
    safe("lambar products", [&] {
      std::vector<Int> a(p), a2(p);
      for (int k = 0; k < p; ++k) {
        a[k] = nu_inv(b1[k]);
        a2[k] = a[k] * a[k];
      }
      return bmul(bgen::lambar(b1, a), bgen::lambar(b1, a)) == bgen::lambar(b1 * 2, a2);
    });
    safe("xi_{j,1} kappabar_j = 0", [&] { return bmul(bgen::xi(p, 1, 1), bgen::kapbar(1, b1)).is_zero(); });
  }
  if (cf == Coeff::A) {
    for (int i = 0; i < p; ++i)
      for (Int j = 1; j <= half(p); ++j)
        safe("eta of xibar^{Omega_{i,j}}", [&] { return eta(bgen::xi(p, i, j)) == eta_xi(p, i, j); });
    GradingROPi beta = p == 2 ? GradingROPi(2) : Omega(p, 0, 2) - Omega(p, 0, 1) + Omega(p, 1, 1) - Omega(p, 1, 2);
    std::vector<Int> a(p);
    for (int k = 0; k < p; ++k) a[k] = nu_inv(beta[k]);
    for (Int m = 0; m <= 2; ++m)
      for (int k = 0; k < p; ++k) {
        std::string tag = " (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
        BClass kb = bgen::ekapbar(m, k, beta);
        safe("eta of e_1^{-m} kappabar" + tag, [&] {
          FixedRingClass want = FixedRingClass::zero(kb.grading);
          want.add(k, 0, named::ekappa(beta[k] - GradingROG::M(p, 1) * m));
          return eta(kb) == want;
        });
        if (m == 0)
          safe("lambar^{a + p delta_k} - lambar^a = kappabar_k" + tag,
               [&] { return bgen::kapbar(k, beta) == kb; });
        safe("xi_{k,1} e_1^{-m} kappabar_k = 0" + tag, [&] { return bmul(bgen::xi(p, k, 1), kb).is_zero(); });
        int other = (k + 1) % p;
        safe("xibar^alpha e_1^{-m} kappabar_k = 0 when alpha_k != 0" + tag,
             [&] { return bmul(bgen::xibar(Omega(p, k, 1) + Omega(p, other, 1)), kb).is_zero(); });
        // b-independence: e_1^{-m} kappa xi_{k,1} lambar^{beta,b} does not see b_k
        safe("e_1^{-m} kappa xi_{i,1} lambar^{beta,b} independent of b" + tag, [&] {
          std::vector<Int> a2 = a;
          a2[k] += p;
          PointClass ek = named::ekappa(GradingROG::M(p, 1) * -m);
          BClass x1 = bscale(ek, bmul(bgen::xi(p, k, 1), bgen::lambar(beta, a)));
          BClass x2 = bscale(ek, bmul(bgen::xi(p, k, 1), bgen::lambar(beta, a2)));
          return x1 == x2;
        });
        if (m >= 1)
          for (int i = 0; i < p; ++i) {
            if (i == k) continue;
            safe("chi^i c xi_{i,1} e_1^{-m} kappabar_k shift" + tag + " i=" + std::to_string(i), [&] {
              BClass lhs = bmul(bmul(bgen::chic(p, i), bgen::xi(p, i, 1)), kb);
              GradingROPi nb = beta + chi_omega(p, i) + Omega(p, i, 1) - GradingROG::M(p, 1);
              BClass rhs = bgen::ekapbar(m - 1, k, nb) * sign_s(p, k - i);
              return lhs == rhs;
            });
          }
      }
    for (Int m = 0; m <= 2; ++m)
      safe("e_1^{-m} kappa lambar^{beta,a} = sum a_k e_1^{-m} kappabar_k", [&] {
        std::vector<Int> a3 = a;
        for (int k = 0; k < p; ++k) a3[k] += p * (k % 2);
        BClass lhs = bscale(named::ekappa(GradingROG::M(p, 1) * -m), bgen::lambar(beta, a3));
        BClass rhs = BClass::zero(lhs.grading);
        for (int k = 0; k < p; ++k) rhs = rhs + bgen::ekapbar(m, k, beta) * a3[k];
        return lhs == rhs;
      });
  }
  if (cf == Coeff::RZ)
    safe("lambar invertible", [&] {
      GradingROPi beta = p == 2 ? GradingROPi(2) : Omega(p, 0, 2) - Omega(p, 0, 1);
      return bmul(bgen::lambar(beta, cf), bgen::lambar(-beta, cf)) == bgen::one(p, cf);
    });
  if (cf == Coeff::A && p == 2) {
    safe("kappabar_0 = e_1^{-1} kappa chi c xi_{1,1}", [&] {
      BClass lhs = bgen::kapbar(0, GradingROPi(2));
      BClass rhs = bscale(named::invkappa(2, 2), bmul(bgen::chic(2, 1), bgen::xi(2, 1)));
      return lhs == rhs;
    });
    safe("kappabar_1 = e_1^{-1} kappa c xi_{0,1}", [&] {
      BClass lhs = bgen::kapbar(1, GradingROPi(2));
      BClass rhs = bscale(named::invkappa(2, 2), bmul(bgen::c(2), bgen::xi(2, 0)));
      return lhs == rhs;
    });
  }
  if (p == 2) {
    safe("chi c xi_{1,1} = (1 - kappa) c xi_{0,1} + e_1", [&] {
      BClass lhs = bmul(bgen::chic(2, 1, cf), bgen::xi(2, 1, 1, cf));
      BClass g = bmul(bgen::c(2, cf), bgen::xi(2, 0, 1, cf));
      PointClass k = cf == Coeff::A ? named::one(2) - named::kappa(2) : u(named::one(2));
      BClass rhs = bscale(k, g) + bgen::scalar(2, u(named::euler(2, 1)));
      return lhs == rhs;
    });
  }
  return r;
}

// Lewis identities. p = 2: gamma^2 = xi_1 Gamma + e_1 gamma and the tilde generator;
// p odd: gradings of Gamma^m Delta_k.
inline Report verify_lewis(int p, Int mmax = 3) {
  Report r;
  try {
    if (p == 2) {
      BClass g = bgen::gamma2(), G = bgen::Gamma(2);
      BClass lhs = bmul(g, g);
      BClass rhs = bscale(named::xi(2), G) + bscale(named::euler(2, 1), g);
      if (!(lhs == rhs)) r.fail("gamma^2 = xi_1 Gamma + e_1 gamma: " + lhs.str() + " vs " + rhs.str());
      BClass tilde = bscale(named::one(2) - named::kappa(2), g) + bgen::scalar(2, named::euler(2, 1));
      BClass want = bmul(bgen::chic(2, 1), bgen::xi(2, 1));
      if (!(tilde == want)) r.fail("(1 - kappa) gamma + e_1 = chi c xi_{1,1}");
    } else {
      BClass G = bgen::Gamma(p);
      GradingROG gsum = GradingROG::trivial(p, 2);
      for (int i = 1; i < p; ++i) gsum += GradingROG::M(p, i);
      if (!G.grading.is_constant() || !(G.grading[0] == gsum)) r.fail("grading of Gamma");
      for (int k = 0; k < p; ++k) {
        BClass D = bgen::Delta(p, k);
        GradingROG dk(p);
        for (int i = 1; i <= k; ++i) dk += GradingROG::M(p, i);
        for (Int m = 0; m <= mmax; ++m) {
          GradingROPi want = GradingROPi::constant(gsum * m + dk);
          BClass x = bmul(bpow(G, m), D);
          if (!(x.grading == want)) r.fail("grading of Gamma^" + std::to_string(m) + " Delta_" + std::to_string(k));
          if (x.terms.size() != 1 || !is_admissible(x.terms.begin()->first))
            r.fail("Gamma^m Delta_k is not a single admissible monomial");
        }
      }
    }
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  return r;
}

}  // namespace eqc
