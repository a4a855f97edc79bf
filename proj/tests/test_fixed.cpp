#include <gtest/gtest.h>

#include "eqc/fixed_ring.hpp"

using namespace eqc;

namespace {

GradingROPi lam_shift(int p, int k, Int j) {
  // M_j - M_1 in component k, zero elsewhere
  GradingROPi r(p);
  r[k] = GradingROG::M(p, j) - GradingROG::M(p, 1);
  return r;
}

}  // namespace

TEST(FixedRing, ZetaExponentsAdd) {
  for (int p : {2, 3, 5}) {
    GradingROPi a = Omega(p, 1, 1), b = Omega(p, 1, 1) * 2;
    if (p > 2) b = b + Omega(p, p - 1, 1) * -1;
    auto z = fixed_mul(fixed::zeta(0, a), fixed::zeta(0, b));
    EXPECT_EQ(z, fixed::zeta(0, a + b)) << p;
    EXPECT_EQ(fixed_mul(fixed_one(p), z), z);
  }
}

TEST(FixedRing, SigmaTimesEuler) {
  // (xi_1 sigma_0 zeta^d) (e_1 zeta^d') = e_1 xi_1 sigma_0 zeta^{d+d'}
  for (int p : {3, 5}) {
    GradingROPi d = Omega(p, 1, 1), d2 = Omega(p, 2, 1);
    auto x = fixed_mul(fixed_mul(fixed::sigma(p, 0), fixed_scalar(named::xi(p))), fixed::zeta(0, d));
    auto y = fixed_mul(fixed_scalar(named::euler(p, 1)), fixed::zeta(0, d2));
    auto want = fixed_mul(fixed_mul(fixed::sigma(p, 0), fixed_scalar(mul(named::euler(p, 1), named::xi(p)))),
                          fixed::zeta(0, d + d2));
    EXPECT_EQ(fixed_mul(x, y), want);
  }
}

TEST(FixedRing, EulerClassRestrictions) {
  for (int p : {2, 3, 5}) {
    auto c = eta_chic(p, 0);
    ASSERT_EQ(c.comp[0].size(), 1u);
    EXPECT_EQ(c.comp[0].begin()->first, 1);
    EXPECT_EQ(c.comp[0].begin()->second, named::one(p));
    EXPECT_EQ(c.zeta_grading(0), omega_star(p) - GradingROG::trivial(p, 2));
    for (int i = 0; i < p; ++i) {
      auto ci = eta_chic(p, i);
      EXPECT_EQ(ci.grading, chi_omega(p, i));
      for (int k = 0; k < p; ++k) {
        if (k == i) continue;
        EXPECT_EQ(ci.comp[k].at(0), named::euler(p, k - i));
        EXPECT_EQ(ci.comp[k].at(1), named::xi_k(p, k - i));
      }
    }
  }
}

TEST(FixedRing, XibarImages) {
  for (int p : {2, 3, 5}) {
    GradingROPi a = Omega(p, 0, 1) * 2 + Omega(p, p - 1, 1);
    auto x = eta_xibar(a);
    EXPECT_EQ(x.comp[0].at(0), named::power(named::xi(p), 2));
    EXPECT_EQ(x.comp[p - 1].at(0), named::xi(p));
    if (p > 2) {
      EXPECT_EQ(x.comp[1].at(0), named::one(p));
    }
    // xibar^{M_1 - 2} = xi_1
    EXPECT_EQ(eta_xibar(GradingROPi::constant(named::xi_grading(p))), fixed_scalar(named::xi(p)));
    // multiplicative
    GradingROPi b = Omega(p, 1, 1);
    EXPECT_EQ(fixed_mul(eta_xibar(a), eta_xibar(b)), eta_xibar(a + b));
  }
}

TEST(FixedRing, LambdaProductsAndKappaLines) {
  const int p = 5;
  GradingROPi b1 = lam_shift(p, 1, 2), b2 = lam_shift(p, 3, 2);
  std::vector<Int> a1(p, 1), a2(p, 1);
  a1[1] = nu_inv(b1[1]);
  a2[3] = nu_inv(b2[3]) + p;
  auto prod = fixed_mul(eta_lambar(b1, a1), eta_lambar(b2, a2));
  std::vector<Int> ab(p);
  for (int k = 0; k < p; ++k) ab[k] = a1[k] * a2[k];
  EXPECT_EQ(prod, eta_lambar(b1 + b2, ab));
  // lambar^{a + p delta_3} - lambar^{a} is the kappa line on component 3
  std::vector<Int> a3 = a2;
  a3[3] -= p;
  EXPECT_EQ(eta_lambar(b2, a2) - eta_lambar(b2, a3), eta_kappa_line(b2, 3));
  EXPECT_THROW(eta_lambar(b1, std::vector<Int>(p, 1)), Error);
}

TEST(FixedRing, InjectivityRange) {
  GradingROPi z(3);
  EXPECT_TRUE(eta_injective_at(z));
  EXPECT_TRUE(eta_injective_at(omega_star(3) + chi_omega(3, 1)));
  GradingROPi odd = GradingROPi::constant(GradingROG::trivial(2, 1)) + GradingROPi::constant(GradingROG::Lambda());
  EXPECT_FALSE(eta_injective_at(odd));
  EXPECT_TRUE(eta_injective_at(odd - GradingROG::trivial(2, 2)));
}

TEST(FixedRing, ChiTwistInEG) {
  for (int p : {2, 3, 5})
    for (int i = 0; i < p; ++i) {
      auto t = chi_twist(p, i);
      EXPECT_EQ(t.lhs, t.rhs) << "p=" << p << " i=" << i << "\n" << t.lhs.str() << "\n" << t.rhs.str();
    }
}

TEST(FixedRing, ComponentZeroDetectsEG) {
  // eta followed by projection to B_0 is an isomorphism on the EG variant: c and the xibar
  // land on sigma_0 and xi^{alpha_0}
  for (int p : {2, 3, 5}) {
    auto c = to_eg(eta_chic(p, 0));
    ASSERT_EQ(c.comp[0].size(), 1u);
    EXPECT_EQ(c.comp[0].begin()->first, 1);
    GradingROPi a = Omega(p, 1, 1) * -3 + Omega(p, 0, 1) * 2;
    auto x = eta_xibar(a, Ring::EG);
    EXPECT_EQ(x.comp[0].at(0), named::eg_gen(a[0]));
  }
}

TEST(FixedRing, TegModule) {
  const int p = 3;
  auto k = fixed_scalar(basis_class(Ring::TEG, GradingROG(p), Level::GG, 0));
  auto s = fixed_mul(fixed::sigma(p, 1), k);
  EXPECT_EQ(s.ring, Ring::TEG);
  EXPECT_EQ(s.comp[1].size(), 1u);
  EXPECT_THROW(fixed_mul(k, k), Error);
}
