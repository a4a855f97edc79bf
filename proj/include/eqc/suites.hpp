#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "eqc/bgu1.hpp"
#include "eqc/grid.hpp"
#include "eqc/parse.hpp"

namespace eqc {

/** \brief Outcome of one verification suite. `checks` counts individual comparisons. */
struct SuiteResult {
  std::string name;
  Report report;
  long checks = 0;
  double seconds = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  bool ok() const { return report.ok; }
};

namespace suite_detail {

// Counts checks and records failures, turning exceptions into failures.
struct Checker {
  SuiteResult& out;
  size_t max_failures = 20;

  void operator()(bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (out.report.failures.size() < max_failures) out.report.fail(what);
    else out.report.ok = false;
  }
  template <class F>
  void safe(const std::string& what, F&& f) {
    try {
      (*this)(f(), what);
    } catch (const std::exception& e) {
      ++out.checks;
      fail(what + ": " + e.what());
    }
  }
  void merge(const Report& r, const std::string& prefix) {
    ++out.checks;
    for (auto& f : r.failures) fail(prefix + f);
    if (!r.ok && r.failures.empty()) fail(prefix + "failed");
  }
};

template <class F>
SuiteResult timed(const std::string& name, std::uint64_t seed, F&& body, double limit_s = 0) {
  SuiteResult r;
  r.name = name;
  r.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  Checker ck{r};
  try {
    body(ck, r);
  } catch (const std::exception& e) {
    ck.fail(std::string("uncaught: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && r.seconds > limit_s) ck.fail("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit_s) + " s");
  return r;
}

// RO_0 parts: coefficients of M_k - M_1 in [-lim, lim] for 2 <= k <= h
inline std::vector<GradingROG> ro0_box(int p, Int lim) {
  std::vector<GradingROG> out{GradingROG(p)};
  if (p == 2) return out;
  for (int k = 2; k <= half(p); ++k) {
    std::vector<GradingROG> nxt;
    for (auto& b : out)
      for (Int c = -lim; c <= lim; ++c) nxt.push_back(b + (GradingROG::M(p, k) - GradingROG::M(p, 1)) * c);
    out = std::move(nxt);
  }
  return out;
}

inline GradingROPi random_grading(int p, std::mt19937_64& rng, int box) {
  GradingROPi a(p);
  std::uniform_int_distribution<int> d(-box, box);
  for (int i = 0; i < p; ++i)
    for (Int j = 1; j <= half(p); ++j) a = a + Omega(p, i, j) * d(rng);
  return a + GradingROG::trivial(p, d(rng));
}

}  // namespace suite_detail

// ---------- figures ----------

/** \brief Cell contents of the six figures, written out from their additive descriptions, for
 * any (|alpha|, alpha^G); independent of the cell computations. Returns {type, label}; p-odd
 * off-parity positions give {"", ""}. */
inline std::pair<std::string, std::string> figure_oracle(int fig, [[maybe_unused]] int p, Int d, Int f) {
  auto pw = [](const std::string& s, Int k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? s : s + "^" + std::to_string(k);
  };
  auto join = [](std::initializer_list<std::string> xs) {
    std::string s;
    for (auto& x : xs)
      if (!x.empty()) s += (s.empty() ? "" : " ") + x;
    return s.empty() ? std::string("1") : s;
  };
  const std::pair<std::string, std::string> zero{".", "."};
  const std::string zp = "<Z/" + std::string(fig <= 3 ? "2" : "p") + ">";
  auto even = [](Int x) { return mod(x, 2) == 0; };
  if (fig >= 4 && !even(d - f)) return {"", ""};
  switch (fig) {
    case 1:  // p = 2, point
      if (d == 0) {
        if (f == 0) return {"A_G/G", "1"};
        if (f < 0) return even(f) ? std::pair{std::string("RZ"), pw("xi", -f / 2)} : std::pair{std::string("RZ-"), "(" + pw("iota", -f) + ")"};
        std::string t = f == 1 ? "RZ-" : even(f) ? "LZ" : "LZ-";
        return {t, "(iota^" + std::to_string(-f) + ")"};
      }
      if (d > 0) {
        if (f == 0) return {"<Z>", join({pw("e", d)})};
        if (f < 0 && even(f)) return {zp, join({pw("e", d), pw("xi", -f / 2)})};
        return zero;
      }
      if (f == 0) return {"<Z>", join({pw("e", d), "kappa"})};
      if (f >= 3 && !even(f)) return {zp, join({pw("e", d - 1), "delta", pw("xi", -(f - 1) / 2)})};
      return zero;
    case 2:  // p = 2, EG
      if (d < 0) return zero;
      if (d == 0) {
        if (even(f)) return {"RZ", f == 0 ? "1" : pw("xi", -f / 2)};
        return {"RZ-", "(" + pw("iota", -f) + ")"};
      }
      if (even(f)) return {zp, join({pw("e", d), pw("xi", -f / 2)})};
      return zero;
    case 3:  // p = 2, EG-tilde
      if (f == 0) return {"<Z>", join({pw("e", d), "kappa"})};
      if (f >= 3 && !even(f)) return {zp, join({pw("e", d - 1), "delta", pw("xi", -(f - 1) / 2)})};
      return zero;
    case 4:  // p odd, point
      if (d == 0) {
        if (f == 0) return {"A[nu(alpha)]", "{mu^{alpha,a}, iota^alpha}"};
        if (f < 0) return {"RZ", join({"lambda^{alpha,a^-1}", pw("xi1", -f / 2)})};
        return {"LZ", "(iota^alpha iota1^" + std::to_string(-f / 2) + ")"};
      }
      if (d > 0) {
        if (!even(d)) return zero;
        if (f == 0) return {"<Z>", join({"mu^{alpha,a}", pw("e1", d / 2)})};
        if (f < 0) return {zp, join({"lambda^{alpha,a^-1}", pw("e1", d / 2), pw("xi1", -f / 2)})};
        return zero;
      }
      if (even(d)) return f == 0 ? std::pair{std::string("<Z>"), join({"mu^{alpha,a}", pw("e1", d / 2), "kappa"})} : zero;
      if (f >= 3) return {zp, join({"mu^{alpha,a}", pw("e1", (d - 1) / 2), "delta", pw("xi1", -(f - 1) / 2)})};
      return zero;
    case 5:  // p odd, EG
      if (d < 0 || !even(d)) return zero;
      if (d == 0) return {"RZ", join({"xi^alpha", pw("xi1", -f / 2)})};
      return {zp, join({pw("e1", d / 2), "xi^alpha", pw("xi1", -f / 2)})};
    case 6:  // p odd, EG-tilde
      if (f == 0) return {"<Z>", join({"e^alpha", pw("e1", d / 2), "kappa"})};
      if (f >= 3 && !even(f)) return {zp, join({"e^alpha", pw("e1", (d - 1) / 2), "delta", pw("xi1", -(f - 1) / 2)})};
      return zero;
  }
  throw Error("no figure " + std::to_string(fig));
}

/** Criterion 1: figures reproduced cell for cell over |alpha^G|, |alpha| <= window. */
inline SuiteResult suite_figures(Int window = 8, std::vector<int> odd_primes = {3, 5, 7}) {
  return suite_detail::timed("figures", 0, [&](auto& ck, SuiteResult& r) {
    for (auto& fw : figure_windows()) {
      std::vector<int> primes = fw.odd ? odd_primes : std::vector<int>{2};
      for (int p : primes) {
        Grid g = make_grid(fw.ring, p, window, -window, -window, window);
        for (Int d = -window; d <= window; ++d)
          for (Int f = -window; f <= window; ++f) {
            auto [t, l] = figure_oracle(fw.number, p, d, f);
            std::string at = "figure " + std::to_string(fw.number) + " p=" + std::to_string(p) + " (|a|=" +
                             std::to_string(d) + ", a^G=" + std::to_string(f) + "): ";
            ck(g.type_at(d, f) == t, at + "type " + g.type_at(d, f) + " != " + t);
            ck(g.label_at(d, f) == l, at + "label " + g.label_at(d, f) + " != " + l);
          }
      }
    }
    r.notes.push_back("window " + std::to_string(window));
  }, 5);
}

// ---------- exactness ----------

/** Criterion 2: EG_+ -> S^0 -> EG-tilde exact at every spot over the window and RO_0 box. */
inline SuiteResult suite_les(int p, Int window = 8, Int box = 2) {
  return suite_detail::timed("les-exactness", 0, [&](auto& ck, SuiteResult& r) {
    long n = 0;
    for (auto& a0 : suite_detail::ro0_box(p, box))
      for (Int d = -window; d <= window; ++d)
        for (Int f = -window; f <= window; ++f) {
          if (p != 2 && mod(d - f, 2) != 0) continue;
          GradingROG a = grading_from(a0, d, f);
          ++n;
          ck.merge(les_report(a), "at " + a.str() + ": ");
        }
    r.notes.push_back(std::to_string(n) + " gradings, p=" + std::to_string(p));
  }, 60);
}

// ---------- relations of the point ----------

/** Criterion 3: relations of the point ring over m, n, k, l <= grid and RO_0 parts in the box. */
inline SuiteResult suite_point_relations(int p, Int grid = 4, Int box = 1) {
  namespace N = named;
  return suite_detail::timed("relations", 0, [&](auto& ck, SuiteResult& r) {
    auto R = [&](Int n) { return GradingROG::trivial(p, n); };
    auto one = N::one(p), kap = N::kappa(p), e = N::e(p), xi = N::xi(p);
    auto tag = [](std::initializer_list<Int> xs) {
      std::string s = " [";
      for (Int x : xs) s += (s.size() > 2 ? "," : "") + std::to_string(x);
      return s + "]";
    };
    ck.safe("kappa xi = 0", [&] { return mul(kap, xi).is_zero(); });
    ck.safe("rho(e) = 0", [&] { return rho(e).is_zero(); });
    ck.safe("kappa e = p e", [&] { return mul(kap, e) == e * p; });
    if (p == 2) {
      auto io = N::iota_k(p, 1), ioi = N::iota_k(p, 1, -1);
      auto iop = [&](Int k) { return N::iota((GradingROG::Lambda() - R(1)) * k); };
      ck.safe("tau(iota^-1) = 0", [&] { return tau(ioi).is_zero(); });
      ck.safe("rho(xi) = iota^2", [&] { return rho(xi) == iop(2); });
      ck.safe("iota iota^-1 = rho(1)", [&] { return mul(io, ioi) == rho(one); });
      for (Int n = 1; n <= grid; ++n)
        ck.safe("tau(iota^{-2n-1}) = e^-1 delta xi^-n" + tag({n}), [&] { return tau(iop(-2 * n - 1)) == N::dxi(p, 1, n); });
      for (Int m = 0; m <= grid; ++m) ck.safe("rho(e^-m kappa) = 0" + tag({m}), [&] { return rho(N::invkappa(p, m)).is_zero(); });
      for (Int m = 1; m <= grid; ++m) {
        ck.safe("e e^-m kappa = e^-(m-1) kappa" + tag({m}), [&] { return mul(e, N::invkappa(p, m)) == N::invkappa(p, m - 1); });
        ck.safe("xi e^-m kappa = 0" + tag({m}), [&] { return mul(xi, N::invkappa(p, m)).is_zero(); });
        for (Int n = 1; n <= grid; ++n)
          ck.safe("e^-m kappa e^-n kappa = 2 e^-(m+n) kappa" + tag({m, n}),
                  [&] { return mul(N::invkappa(p, m), N::invkappa(p, n)) == N::invkappa(p, m + n) * 2; });
        for (Int n = 0; n <= grid; ++n)
          ck.safe("2 e^m xi^n = 0 iff n > 0" + tag({m, n}), [&] {
            auto x = mul(N::power(e, m), N::power(xi, n));
            return (x * 2).is_zero() == (n > 0) && (quotient_map(x) * 2).is_zero();
          });
      }
      for (Int k = -grid - 1; k <= grid + 1; ++k) {
        ck.safe("t iota^k = (-1)^k iota^k" + tag({k}), [&] { return tgen(iop(k)) == iop(k) * (mod(k, 2) ? -1 : 1); });
        ck.safe("xi tau(iota^k) = tau(iota^{k+2})" + tag({k}), [&] { return mul(xi, tau(iop(k))) == tau(iop(k + 2)); });
        ck.safe("e tau(iota^k) = 0" + tag({k}), [&] { return mul(e, tau(iop(k))).is_zero(); });
        for (Int l = -grid; l <= grid; ++l)
          ck.safe("tau(iota^k) tau(iota^l)" + tag({k, l}), [&] {
            auto prod = mul(tau(iop(k)), tau(iop(l)));
            return mod(k, 2) || mod(l, 2) ? prod.is_zero() : prod == tau(iop(k + l)) * 2;
          });
      }
      for (Int k = 0; k <= grid; ++k) ck.safe("tau(iota^{2k+1}) = 0" + tag({k}), [&] { return tau(iop(2 * k + 1)).is_zero(); });
    } else {
      for (Int k = 1; k <= half(p); ++k) {
        ck.safe("t iota_k^-1 = iota_k^-1" + tag({k}), [&] { return tgen(N::iota_k(p, k, -1)) == N::iota_k(p, k, -1); });
        ck.safe("iota_k iota_k^-1 = rho(1)" + tag({k}), [&] { return mul(N::iota_k(p, k), N::iota_k(p, k, -1)) == rho(one); });
      }
      ck.safe("rho(xi_1) = iota_1", [&] { return rho(xi) == N::iota_k(p, 1); });
      ck.safe("p e_1 xi_1 = 0", [&] { return (mul(e, xi) * p).is_zero(); });
      auto box_ = suite_detail::ro0_box(p, box);
      for (auto& a : box_) {
        Int v = nu(a), w = nu_inv(a);
        std::string at = " at " + a.str();
        for (Int a1 : {v, v + p, v - p}) {
          ck.safe("rho(mu^{a,x}) = x iota^a" + at, [&] { return rho(N::mu(a, a1)) == N::iota(a) * a1; });
          ck.safe("mu^{a,x+p} = mu^{a,x} + tau(iota^a)" + at, [&] { return N::mu(a, a1 + p) == N::mu(a, a1) + N::tau_iota(a); });
          ck.safe("kappa^a = kappa mu^{a,x}" + at, [&] { return N::kappa_beta(a) == mul(kap, N::mu(a, a1)); });
        }
        for (Int b : {w, w + p, w + 2 * p}) {
          Int ai = inv_mod(b, p);
          ck.safe("lambda^{a,b} in terms of mu" + at, [&] {
            return N::lam(a, b) == N::mu(a, ai) * b + N::tau_iota(a) * ((1 - b * ai) / p);
          });
          ck.safe("mu in terms of lambda" + at, [&] {
            return N::mu(a, ai) == N::lam(a, b) * ai + N::kappa_beta(a) * ((1 - b * ai) / p);
          });
          ck.safe("lambda^{a,b+p} = lambda^{a,b} + kappa^a" + at, [&] { return N::lam(a, b + p) == N::lam(a, b) + N::kappa_beta(a); });
          ck.safe("lambda xi_1 independent of b" + at, [&] { return mul(N::lam(a, b + p), xi) == mul(N::lam(a, b), xi); });
          ck.safe("e_1 lambda^{a,b} = b e_1 mu" + at, [&] { return mul(e, N::lam(a, b)) == mul(e, N::mu(a, ai)) * b; });
          ck.safe("rho(lambda^{a,b}) = iota^a" + at, [&] { return rho(N::lam(a, b)) == N::iota(a); });
          for (auto& c : box_) {
            Int bc = nu_inv(c);
            ck.safe("lambda lambda = lambda" + at + " , " + c.str(), [&] { return mul(N::lam(a, b), N::lam(c, bc)) == N::lam(a + c, b * bc); });
            ck.safe("mu tau(iota) = x tau(iota)" + at, [&] { return mul(N::mu(a, v), N::tau_iota(c)) == N::tau_iota(a + c) * v; });
            ck.safe("tau(iota^a) tau(iota^c) = p tau(iota^{a+c})" + at,
                    [&] { return mul(N::tau_iota(a), N::tau_iota(c)) == N::tau_iota(a + c) * p; });
          }
        }
        for (auto& c : box_) {
          Int x = nu(a), y = nu(c);
          ck.safe("mu mu = mu" + at, [&] { return mul(N::mu(a, x), N::mu(c, y)) == N::mu(a + c, x * y); });
        }
        ck.safe("xi_1 tau(iota^a) = tau(iota_1 iota^a)" + at, [&] { return mul(xi, N::tau_iota(a)) == tau(mul(N::iota_k(p, 1), N::iota(a))); });
        ck.safe("e_1 tau(iota^a) = 0" + at, [&] { return mul(e, N::tau_iota(a)).is_zero(); });
      }
      for (Int m = 1; m <= grid; ++m)
        for (Int n = 1; n <= grid; ++n)
          ck.safe("e^-m kappa e^-n kappa = p e^-(m+n) kappa" + tag({m, n}),
                  [&] { return mul(N::invkappa(p, m), N::invkappa(p, n)) == N::invkappa(p, m + n) * p; });
    }
    // delta classes, both parities
    const int e_kill = p;  // order of the delta classes
    for (Int m = 1; m <= grid; ++m)
      for (Int n = 1; n <= grid; ++n) {
        auto D = N::dxi(p, m, n);
        auto t = tag({m, n});
        ck.safe("e e^-m delta xi^-n" + t, [&] { return m >= 2 ? mul(e, D) == N::dxi(p, m - 1, n) : mul(e, D).is_zero(); });
        ck.safe("xi e^-m delta xi^-n" + t, [&] {
          if (n >= 2) return mul(xi, D) == N::dxi(p, m, n - 1);
          if (p == 2 && m == 1) return true;  // lands in the |alpha| = 0 row, not a relation
          return mul(xi, D).is_zero();
        });
        ck.safe("p e^-m delta xi^-n = 0" + t, [&] { return (D * e_kill).is_zero(); });
        if (p != 2 || m >= 2) ck.safe("rho(e^-m delta xi^-n) = 0" + t, [&] { return rho(D).is_zero(); });
        for (Int k = 0; k <= grid; ++k)
          ck.safe("e^-k kappa e^-m delta xi^-n = 0" + t, [&] { return mul(N::invkappa(p, k), D).is_zero(); });
        for (Int k = 1; k <= grid; ++k)
          for (Int l = 1; l <= grid; ++l)
            ck.safe("delta delta = 0" + t, [&] { return mul(N::dxi(p, k, l), D).is_zero(); });
      }
    r.notes.push_back("p=" + std::to_string(p) + ", grid " + std::to_string(grid));
  });
}

// ---------- extensions ----------

/** Criterion 4: extensions of RZ by <Z>: p classes, the non-split ones matching the A[d]. */
inline SuiteResult suite_ext(int p) {
  return suite_detail::timed("ext", 0, [&](auto& ck, SuiteResult& r) {
    auto cls = ext1_classify(catalog::RZ(p), catalog::concZ(p));
    ck(static_cast<int>(cls.size()) == p, std::to_string(cls.size()) + " classes, expected " + std::to_string(p));
    int splits = 0;
    for (auto& e : cls) {
      splits += e.split;
      if (e.split) {
        ck(is_isomorphic(e.middle, direct_sum(catalog::RZ(p), catalog::concZ(p))), "split middle is not RZ + <Z>");
        continue;
      }
      // the class of A[d] for exactly one d in each {d, -d}, and its middle is A[d]
      int hits = 0;
      Int found = 0;
      for (Int d = 1; d < p; ++d)
        if (rz_equivalent(e, a_d_extension(p, d), p)) ++hits, found = d;
      ck(hits == 1, e.identified + " matches " + std::to_string(hits) + " of the A[d]");
      if (hits == 1) ck(is_isomorphic(e.middle, catalog::A_lambda(p, found)), e.identified + " middle is not A[d]");
    }
    ck(splits == 1, std::to_string(splits) + " split classes");
    for (Int d = 1; d < p; ++d) {
      int hits = 0;
      for (auto& e : cls) hits += rz_equivalent(e, a_d_extension(p, d), p);
      ck(hits == 1, "A[" + std::to_string(d) + "] lies in " + std::to_string(hits) + " classes");
      // A[d] and A[-d] are isomorphic functors but different extensions (p > 2)
      ck(is_isomorphic(catalog::A_lambda(p, d), catalog::A_lambda(p, p - d)), "A[d] not isomorphic to A[-d]");
    }
    std::string names;
    for (auto& e : cls) names += (names.empty() ? "" : ", ") + e.identified;
    r.notes.push_back(std::to_string(cls.size()) + " classes: " + names);
  }, 30);
}

// ---------- admissible basis ----------

/** Criterion 5: per offset N the basis has #{k : F_k + N >= 0} monomials, one per even dimension. */
inline SuiteResult suite_admissible(std::uint64_t seed, int count = 50) {
  return suite_detail::timed("admissible", seed, [&](auto& ck, SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int p : {3, 5})
      for (int t = 0; t < count; ++t) {
        GradingROPi a = suite_detail::random_grading(p, rng, 3);
        std::string at = " at " + a.str();
        auto F = a.fixed_dims();
        const Int top = 24;
        auto ws = enumerate_admissible(a, top);
        ck(static_cast<Int>(ws.size()) == top / 2 + 1, "wrong number of monomials" + at);
        std::map<Int, int> per;
        Int fmax = *std::max_element(F.begin(), F.end());
        for (size_t i = 0; i < ws.size(); ++i) {
          const Word& w = ws[i];
          ck(w.dim() == 2 * static_cast<Int>(i), "dimension " + std::to_string(w.dim()) + " out of order" + at);
          ck(is_admissible(w), w.str() + " not admissible" + at);
          ck((a - w.grading()).is_constant(), w.str() + " not in the coset" + at);
          auto fx = w.fixed_dims();
          Int N = fx[0] - F[0];
          bool same = true;
          for (int k = 0; k < p; ++k) same = same && fx[k] - F[k] == N;
          ck(same, w.str() + " shifts fixed dimensions unevenly" + at);
          ck(N >= -fmax, "offset below range" + at);
          ++per[N];
        }
        // every offset but the last one reached is complete
        for (auto it = per.begin(); it != per.end() && std::next(it) != per.end(); ++it) {
          int want = 0;
          for (Int f : F) want += f + it->first >= 0;
          ck(it->second == want, "offset " + std::to_string(it->first) + ": " + std::to_string(it->second) +
                                     " monomials, expected " + std::to_string(want) + at);
        }
      }
    r.notes.push_back(std::to_string(count) + " gradings per prime");
  });
}

// ---------- triangularity ----------

/** Criterion 6: f_{EG+} upper unitriangular, f_{EG-tilde} lower triangular with unit diagonal. */
inline SuiteResult suite_triangularity(std::uint64_t seed, int cosets = 10, size_t size = 8) {
  return suite_detail::timed("triangularity", seed, [&](auto& ck, SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int p : {2, 3, 5})
      for (int t = 0; t < cosets; ++t) {
        GradingROPi a = suite_detail::random_grading(p, rng, 3);
        auto E = f_eg_matrix(a, size);
        ck(E.ok, "EG at " + a.str() + ": " + E.why);
        for (size_t j = 0; j < size && E.ok; ++j) ck(E.matrix[j][j] == 1, "EG diagonal not 1 at " + a.str());
        auto T = f_teg_matrix(a, size);
        ck(T.ok, "TEG at " + a.str() + ": " + T.why);
      }
    r.notes.push_back(std::to_string(cosets) + " cosets per prime, size " + std::to_string(size));
  });
}

// ---------- products against eta ----------

// A random product of at most three generators of B.
inline BClass random_generator_word(int p, std::mt19937_64& rng, std::string* text = nullptr) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto ro0 = [&] {
    GradingROPi b(p);
    if (p == 2) return b;
    for (int k = 0; k < p; ++k)
      if (pick(2)) b = b + Omega(p, k, 2) - Omega(p, k, 1);
    return b;
  };
  int len = 1 + pick(3);
  BClass x = bgen::one(p);
  std::string s;
  for (int i = 0; i < len; ++i) {
    BClass g;
    std::string gs;
    int i0 = pick(p);
    switch (pick(p == 2 ? 4 : 5)) {
      case 0:
        g = bgen::chic(p, i0);
        gs = "chic(" + std::to_string(i0) + ")";
        break;
      case 1: {
        Int j = p == 2 ? 1 : 1 + pick(half(p));
        g = bgen::xi(p, i0, j);
        gs = "xi(" + std::to_string(i0) + "," + std::to_string(j) + ")";
        break;
      }
      case 2: {
        GradingROPi a(p);
        for (int k = 0; k < p; ++k) a = a + Omega(p, k, 1) * pick(2);
        g = bgen::xibar(a);
        gs = "xibar(" + a.str() + ")";
        break;
      }
      case 3: {
        GradingROPi b = ro0();
        g = bgen::kapbar(i0, b);
        gs = "kapbar(" + std::to_string(i0) + "; " + b.str() + ")";
        break;
      }
      default: {
        GradingROPi b = ro0();
        g = bgen::lambar(b);
        gs = "lambar(" + b.str() + ")";
        break;
      }
    }
    x = bmul(x, g);
    s += (s.empty() ? "" : "*") + gs;
  }
  if (text) *text = s;
  return x;
}

/** Criterion 7: eta(x y) = eta(x) eta(y) for random generator words. */
inline SuiteResult suite_eta_products(std::uint64_t seed, int count = 200, std::vector<int> primes = {2, 3, 5}) {
  return suite_detail::timed("eta-products", seed, [&](auto& ck, SuiteResult& r) {
    std::mt19937_64 rng(seed);
    for (int p : primes) {
      int injective = 0;
      for (int t = 0; t < count; ++t) {
        std::string sx, sy;
        BClass x = random_generator_word(p, rng, &sx), y = random_generator_word(p, rng, &sy);
        ck.safe("p=" + std::to_string(p) + " (" + sx + ") * (" + sy + ")", [&] {
          BClass z = bmul(x, y);
          if (!eta_injective_at(z.grading)) return true;
          ++injective;
          return eta(z) == fixed_mul(eta(x), eta(y));
        });
      }
      r.notes.push_back("p=" + std::to_string(p) + ": " + std::to_string(injective) + " of " + std::to_string(count) +
                        " products in eta-injective gradings");
      ck(injective > count / 4, "too few eta-injective samples for p=" + std::to_string(p));
    }
  }, 120);
}

// ---------- Lewis ----------

/** Criterion 8. */
inline SuiteResult suite_lewis(Int mmax = 3) {
  return suite_detail::timed("lewis", 0, [&](auto& ck, SuiteResult&) {
    for (int p : {2, 3, 5}) ck.merge(verify_lewis(p, mmax), "p=" + std::to_string(p) + ": ");
  });
}

// ---------- coefficient variants ----------

/** Criterion 9: RZ presentation for p = 2 and lambar invertibility, <Z> support at the point, and
 * the <Z> ideal inside B. */
inline SuiteResult suite_coefficients(std::uint64_t seed, int samples = 20) {
  return suite_detail::timed("coefficients", seed, [&](auto& ck, SuiteResult& r) {
    // p = 2 with RZ: chi c xi_{1,1} = c xi_{0,1} + e_1, lambar needs no b
    ck.safe("RZ: chi c xi_{1,1} = c xi_{0,1} + e_1", [&] {
      BClass lhs = bmul(bgen::chic(2, 1, Coeff::RZ), bgen::xi(2, 1, 1, Coeff::RZ));
      BClass rhs = bmul(bgen::c(2, Coeff::RZ), bgen::xi(2, 0, 1, Coeff::RZ)) +
                   bgen::scalar(2, quotient_map(named::euler(2, 1)));
      return lhs == rhs;
    });
    ck.safe("RZ: kappa = 0", [&] { return quotient_map(named::kappa(2)).is_zero(); });
    for (int p : {2, 3, 5}) {
      ck.merge(verify_relations(p, Coeff::RZ), "RZ relations p=" + std::to_string(p) + ": ");
      if (p > 2)
        for (int k = 0; k < p; ++k) {
          GradingROPi beta = Omega(p, k, 2) - Omega(p, k, 1);
          ck.safe("RZ: lambar^beta lambar^-beta = 1", [&] {
            return bmul(bgen::lambar(beta, Coeff::RZ), bgen::lambar(-beta, Coeff::RZ)) == bgen::one(p, Coeff::RZ);
          });
        }
      // <Z> at the point lives exactly where alpha^G = 0
      for (auto& a0 : suite_detail::ro0_box(p, 1))
        for (Int d = -6; d <= 6; ++d)
          for (Int f = -6; f <= 6; ++f) {
            if (p != 2 && mod(d - f, 2) != 0) continue;
            GradingROG a = grading_from(a0, d, f);
            Cell c = group_at(Ring::S0, a, Coeff::concZ);
            ck(c.is_zero() == (f != 0), "<Z> at " + a.str());
            if (f == 0) ck(c.type == "<Z>", "<Z> cell type at " + a.str());
          }
    }
    // the ideal: classes from <Z> die in RZ and stay in the ideal under products
    std::mt19937_64 rng(seed);
    int done = 0;
    for (int p : {2, 3})
      for (int t = 0; t < samples / 2; ++t) {
        auto ws = enumerate_admissible(suite_detail::random_grading(p, rng, 2), 6);
        const Word& w = ws[rng() % ws.size()];
        GradingROG g = GradingROG::M(p, 1) * -static_cast<Int>(rng() % 3);
        ck.safe("<Z> ideal sample " + w.str(), [&] {
          BClass x = BClass::zero(w.grading() + g, Coeff::concZ);
          x.add(w, coeff_generator(Coeff::concZ, g) * static_cast<Int>(1 + rng() % 3));
          BClass in = from_concz(x);
          BClass y = normalize(named::one(p), ws[rng() % ws.size()]);
          BClass prod = bmul(in, y);
          ++done;
          return !in.is_zero() && in_kappa_ideal(in) && to_rz(in).is_zero() && in_kappa_ideal(prod) &&
                 to_rz(prod).is_zero() && !in_kappa_ideal(y);
        });
      }
    r.notes.push_back(std::to_string(done) + " ideal samples");
  });
}

// ---------- registry ----------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"figures",     "les-exactness", "relations", "ext",         "admissible",
                                          "triangularity", "eta-products", "lewis",     "coefficients"};
  return n;
}

// Runs a suite by name; `p` restricts per-prime suites, 0 meaning their default primes.
inline std::vector<SuiteResult> run_suite(const std::string& name, int p, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto primes = [&](std::vector<int> d) { return p ? std::vector<int>{p} : d; };
  if (name == "figures") out.push_back(suite_figures(8, p > 2 ? std::vector<int>{p} : std::vector<int>{3, 5, 7}));
  else if (name == "les-exactness")
    for (int q : primes({2, 3, 5, 7})) out.push_back(suite_les(q));
  else if (name == "relations")
    for (int q : primes({2, 3, 5, 7})) {
      out.push_back(suite_point_relations(q));
      if (q <= 5)
        out.push_back(suite_detail::timed("relations-B", 0, [&](auto& ck, SuiteResult&) { ck.merge(verify_relations(q), ""); }));
    }
  else if (name == "ext")
    for (int q : primes({2, 3, 5})) out.push_back(suite_ext(q));
  else if (name == "admissible") out.push_back(suite_admissible(seed));
  else if (name == "triangularity") out.push_back(suite_triangularity(seed));
  else if (name == "eta-products") out.push_back(suite_eta_products(seed, 200, primes({2, 3, 5})));
  else if (name == "lewis") out.push_back(suite_lewis());
  else if (name == "coefficients") out.push_back(suite_coefficients(seed));
  else throw Error("unknown suite '" + name + "'");
  return out;
}

}  // namespace eqc
