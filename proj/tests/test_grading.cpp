#include <gtest/gtest.h>

#include <random>

#include "eqc/burnside.hpp"
#include "eqc/grading.hpp"

using namespace eqc;

TEST(Grading, DimensionsP2) {
  GradingROG a = GradingROG::Lambda() * 3;
  EXPECT_EQ(a.dim(), 3);
  EXPECT_EQ(a.fixed(), 0);
}

TEST(Grading, DimensionsP5) {
  GradingROG a = GradingROG::trivial(5, 1) + GradingROG::M(5, 2) * 2;
  EXPECT_EQ(a.dim(), 5);
  EXPECT_EQ(a.fixed(), 1);
}

TEST(Grading, OmegaStarDims) {
  GradingROPi w = omega_star(3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(w[k].dim(), 2);
  EXPECT_EQ(w.fixed_dims(), (std::vector<Int>{2, 0, 0}));
}

TEST(Grading, Classify) {
  GradingROG z(5);
  EXPECT_TRUE(z.in_Iev() && z.in_RO0() && z.in_ROplus());
  GradingROG a = GradingROG::M(5, 2) - GradingROG::M(5, 1);
  EXPECT_TRUE(a.in_RO0());
  EXPECT_FALSE(a.in_ROplus());
  EXPECT_TRUE(Omega(3, 1, 1).in_ROplus());
}

TEST(Grading, OmegaStarBasis) {
  for (int p : {3, 5, 7}) {
    GradingROPi expect = GradingROPi::constant(GradingROG::trivial(p, 2));
    for (int i = 1; i < p; ++i) expect += Omega(p, i, i);
    EXPECT_EQ(omega_star(p), expect);
  }
  auto c = basis_decompose(omega_star(2));
  EXPECT_EQ(c, (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(basis_decompose(GradingROPi(5)), std::vector<Int>(11, 0));
}

TEST(Grading, DecomposeRoundTrip) {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5, 7}) {
    int n = p == 2 ? 3 : 1 + p * half(p);
    for (int it = 0; it < 50; ++it) {
      std::vector<Int> v(n);
      for (auto& x : v) x = static_cast<Int>(rng() % 9) - 4;
      GradingROPi a = basis_reconstruct(p, v);
      EXPECT_EQ(basis_decompose(a), v);
      EXPECT_EQ(basis_reconstruct(p, basis_decompose(a)), a);
    }
  }
}

TEST(Grading, MalformedRejected) {
  GradingROPi a(3);
  a[0] = GradingROG::trivial(3, 1);
  EXPECT_THROW(a.validate(), Error);
  GradingROPi b(2);
  b[0] = GradingROG::trivial(2, 1);
  b[1] = GradingROG::Lambda();
  EXPECT_THROW(b.validate(), Error);
}

TEST(Grading, Chi) {
  EXPECT_EQ(chi(Omega(5, 0, 1), 1), Omega(5, 1, 1));
  GradingROPi c = GradingROPi::constant(GradingROG::trivial(3, 4));
  EXPECT_EQ(chi(c, 1), c);
  EXPECT_EQ(chi(Omega2(), 1), -Omega2());
  for (int p : {2, 3, 5}) {
    GradingROPi w = omega_star(p) + Omega(p, 1, 1);
    EXPECT_EQ(chi(w, p), w);
  }
}

TEST(Grading, P2DerivedOmegas) {
  GradingROPi one = GradingROPi::constant(GradingROG::trivial(2, 1));
  GradingROPi L = GradingROPi::constant(GradingROG::Lambda());
  EXPECT_EQ(Omega(2, 0, 1), L - one - Omega2());
  EXPECT_EQ(Omega(2, 1, 1), L - one + Omega2());
}

TEST(Grading, Nu) {
  EXPECT_EQ(nu(GradingROG(5)), 1);
  EXPECT_EQ(nu(GradingROG::M(5, 2) - GradingROG::M(5, 1)), 2);
  GradingROG a = (GradingROG::M(7, 3) - GradingROG::M(7, 1)) * 2 + GradingROG::M(7, 2) - GradingROG::M(7, 1);
  EXPECT_EQ(nu(a), 4);
  EXPECT_THROW(nu(GradingROG::M(5, 1)), Error);
}

TEST(Grading, NuHomomorphism) {
  std::mt19937 rng(11);
  for (int p : {3, 5, 7, 11, 13}) {
    auto rnd = [&] {
      GradingROG a(p);
      for (int k = 2; k <= half(p); ++k) {
        Int c = static_cast<Int>(rng() % 7) - 3;
        a += (GradingROG::M(p, k) - GradingROG::M(p, 1)) * c;
      }
      return a;
    };
    for (int it = 0; it < 30; ++it) {
      GradingROG a = rnd(), b = rnd();
      EXPECT_EQ(nu(a + b), mod(nu(a) * nu(b), p));
    }
  }
}

TEST(Grading, Gamma) {
  EXPECT_EQ(gamma(GradingROG::Lambda(), GradingROG::Lambda()), Burnside(2, 1, -1));
  EXPECT_EQ(gamma(GradingROG::trivial(3, 1), GradingROG::trivial(3, 1)), Burnside(3, -1, 0));
  EXPECT_EQ(gamma(GradingROG(5), GradingROG::M(5, 1)), Burnside::one(5));
  std::mt19937 rng(3);
  for (int p : {2, 3, 5}) {
    auto rnd = [&] {
      GradingROG a(p, static_cast<Int>(rng() % 7) - 3);
      for (auto& x : a.m) x = static_cast<Int>(rng() % 7) - 3;
      return a;
    };
    for (int it = 0; it < 30; ++it) {
      GradingROG a = rnd(), a2 = rnd(), b = rnd();
      EXPECT_EQ(gamma(a, b), gamma(b, a));
      EXPECT_EQ(gamma(a, b) * gamma(a, b), Burnside::one(p));
      EXPECT_EQ(gamma(a + a2, b), gamma(a, b) * gamma(a2, b));
    }
  }
}

TEST(Grading, FixedDimOrder) {
  EXPECT_EQ(fixed_dim_order(std::vector<Int>{1, 1, 1}), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(fixed_dim_order(std::vector<Int>{0, 4, 2}), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(fixed_dim_order(std::vector<Int>{2, 2, 0}), (std::vector<int>{0, 1, 2}));
}

TEST(Grading, SignS) {
  EXPECT_EQ(sign_s(5, 2), 1);
  EXPECT_EQ(sign_s(5, 3), -1);
  EXPECT_EQ(sign_s(5, 7), 1);
  EXPECT_THROW(sign_s(5, 10), Error);
}

TEST(Grading, KernelOfProjection) {
  // alpha with alpha_k = 0 is spanned by Omega_{i,j}, i != k
  for (int p : {3, 5}) {
    GradingROPi a = Omega(p, 1, 1) * 2 - Omega(p, 2, 1) + Omega(p, 1, 2 % (half(p) + 1) ? 2 % (half(p) + 1) : 1);
    a[0] = GradingROG(p);
    auto c = basis_decompose(a);
    EXPECT_EQ(c[0], a.dim());
    for (int j = 0; j < half(p); ++j) EXPECT_EQ(c[1 + j], 0);
  }
}

TEST(Burnside, Arithmetic) {
  EXPECT_EQ(Burnside::g(3) * Burnside::g(3), Burnside(3, 0, 3));
  for (int p : {2, 3, 5}) {
    auto k = Burnside::kappa(p);
    EXPECT_EQ(k * k, k * p);
  }
  Burnside u(2, 1, -1);
  EXPECT_EQ(u * u, Burnside::one(2));
  EXPECT_TRUE(u.is_unit());
  EXPECT_FALSE(Burnside::kappa(3).is_unit());
  Burnside x(5, 2, 3), y(5, -1, 4);
  EXPECT_EQ((x * y).eps(), x.eps() * y.eps());
}
