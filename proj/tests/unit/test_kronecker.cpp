#include <gtest/gtest.h>

#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/kronecker.hpp"
#include "support.hpp"

using namespace qt;

namespace {

const Field F5 = Field::prime(5);

KroneckerModule module(const std::vector<std::vector<std::string>>& cells, Field f = F5) {
  return KroneckerModule(f, grid(cells, f));
}

KroneckerModule random_module(Field f, std::size_t b, std::size_t a, quintic::Rng& rng) {
  FormGrid g(b, std::vector<Form>(a));
  for (auto& row : g)
    for (auto& e : row) e = random_form(f, 1, rng, 3);
  return KroneckerModule(f, g);
}

Vector unit(Field f, std::size_t n, std::size_t i) {
  Vector v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

const std::vector<std::vector<std::string>> kDiag = {{"x", "0", "0", "0", "0"},
                                                     {"0", "x", "0", "0", "0"},
                                                     {"0", "0", "x", "0", "0"},
                                                     {"0", "0", "0", "x", "0"},
                                                     {"0", "0", "0", "0", "x"}};

}  // namespace

TEST(KroneckerModule, RejectsNonLinearEntries) {
  EXPECT_THROW(module({{"x^2"}}), DegreeError);
  const KroneckerModule k = module({{"x + 2*z", "y"}});
  EXPECT_TRUE(k.slice(0).at(0, 0).is_one());
  EXPECT_EQ(k.slice(2).at(0, 0), S(2, F5));
  EXPECT_TRUE(k.slice(1).at(0, 0).is_zero());
}

TEST(RowSupport, KnownValues) {
  const KroneckerModule zero = module({{"0", "0"}, {"0", "0"}});
  EXPECT_EQ(row_support_dim(zero, {unit(F5, 2, 0)}), 0u);
  EXPECT_EQ(row_support_dim(module(kDiag), {unit(F5, 5, 0)}), 1u);
  const KroneckerModule zc = module({{"x", "0", "y"}, {"z", "0", "x"}});
  EXPECT_EQ(row_support_dim(zc, {unit(F5, 3, 1)}), 0u);
}

TEST(King, DiagonalIsStrictlySemistable) {
  const KingVerdict v = king_semistable(module(kDiag));
  EXPECT_TRUE(v.semistable);
  EXPECT_FALSE(v.stable);
  ASSERT_TRUE(v.witness.has_value());
  // Equality witness: dim S * b == support * a.
  EXPECT_EQ(v.witness->row_support_dim * 5, v.witness->column_subspace.size() * 5);
  EXPECT_FALSE(king_stable(module(kDiag)));
}

TEST(King, ZeroColumnIsUnstable) {
  const KingVerdict v = king_semistable(module({{"x", "0", "y", "z"}, {"y", "0", "z", "x"}, {"z", "0", "x", "y"}}));
  EXPECT_FALSE(v.semistable);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->row_support_dim, 0u);
}

TEST(King, RepeatedColumnsAreNotStable) {
  const KroneckerModule k = module({{"x", "x", "y", "z", "0"},
                                    {"y", "y", "z", "0", "x"},
                                    {"z", "z", "0", "x", "y"},
                                    {"x + y", "x + y", "x", "y", "z"},
                                    {"0", "0", "y", "z", "x + z"}});
  EXPECT_FALSE(king_stable(k));
}

TEST(King, WitnessesViolateTheInequality) {
  quintic::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    KroneckerModule k = random_module(F5, 3, 4, rng);
    if (t % 2) {
      FormGrid g = k.entries();
      g[0][0] = g[0][1] = g[1][0] = g[1][1] = Form(F5, 1);
      k = KroneckerModule(F5, right_multiply(left_multiply(random_invertible(F5, 3, rng, 0), g, F5),
                                             random_invertible(F5, 4, rng, 0), F5));
    }
    const KingVerdict v = king_semistable(k);
    if (v.semistable) continue;
    ASSERT_TRUE(v.witness.has_value());
    const auto& w = *v.witness;
    EXPECT_EQ(rank(Matrix::from_rows(F5, w.column_subspace)), w.column_subspace.size());
    EXPECT_EQ(row_support_dim(k, w.column_subspace), w.row_support_dim);
    EXPECT_LT(w.row_support_dim * k.cols(), k.rows() * w.column_subspace.size());
  }
}

TEST(King, GenericX0BlockOfM51IsSemistable) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SampleRequest req;
    req.space = {5, 1};
    req.seed = seed;
    req.field = F5;
    const GradedMorphism phi = sample_stratum(req);
    // Rows 1..3 carry O(-1), row 0 carries O.
    const FormGrid psi(phi.entries().begin() + 1, phi.entries().end());
    EXPECT_TRUE(king_semistable(KroneckerModule(F5, psi)).semistable);
  }
}

TEST(King, RandomSquareModulesAreMostlyStable) {
  quintic::Rng rng(42);
  int stable = 0;
  for (int t = 0; t < 200; ++t) stable += king_stable(random_module(F5, 5, 5, rng));
  EXPECT_GE(stable, 180);
}

TEST(King, NonzeroDeterminantImpliesSemistable) {
  quintic::Rng rng(43);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    FormGrid g(5, std::vector<Form>(5));
    for (auto& row : g)
      for (auto& e : row) e = (rng() % 3 == 0) ? Form(F5, 1) : random_form(F5, 1, rng, 0);
    if (determinant(g, F5, 5).is_zero()) continue;
    ++checked;
    EXPECT_TRUE(king_semistable(KroneckerModule(F5, g)).semistable);
  }
  EXPECT_GT(checked, 100);
}

TEST(King, RationalModulesReportPrimes) {
  const KingVerdict v = king_semistable(module({{"x", "y", "z", "0"}, {"y", "z", "0", "x"}, {"z", "0", "x", "y"}}, Q));
  EXPECT_TRUE(v.semistable);
  EXPECT_FALSE(v.primes.empty());
  const KingVerdict u = king_semistable(module({{"x", "0", "z", "0"}, {"y", "0", "0", "x"}, {"z", "0", "x", "y"}}, Q));
  EXPECT_FALSE(u.semistable);
  EXPECT_TRUE(u.probabilistic);
}

TEST(King, BudgetIsEnforced) {
  KingOptions opts;
  opts.budget = 10;
  EXPECT_THROW(king_semistable(module(kDiag), opts), DomainError);
}

TEST(KernelTwist, GenericModuleHasTwistFive) {
  const Field f = Field::prime(10007);
  quintic::Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    const KernelTwist k = kernel_twist(random_module(f, 3, 4, rng));
    EXPECT_EQ(k.d, 5);
    EXPECT_EQ(k.g.degree(), 0);
  }
}

TEST(KernelTwist, KoszulNormalFormHasTwistThree) {
  const KroneckerModule psi = module({{"-y", "x", "0", "2*x - y + z"}, {"-z", "0", "x", "x + 3*z"}, {"0", "-z", "y", "y - 2*z"}}, Q);
  const KernelTwist k = kernel_twist(psi);
  EXPECT_EQ(k.d, 3);
  EXPECT_EQ(k.g.degree(), 2);
  // eta proportional to (X, Y, Z, 0).
  ASSERT_EQ(k.eta.size(), 4u);
  EXPECT_TRUE(k.eta[3].is_zero());
  const Scalar c = k.eta[0].coefficient({1, 0, 0});
  EXPECT_EQ(k.eta[0], F("x").scaled(c));
  EXPECT_EQ(k.eta[1], F("y").scaled(c));
  EXPECT_EQ(k.eta[2], F("z").scaled(c));
}

TEST(KernelTwist, ComposeWithEtaVanishes) {
  quintic::Rng rng(45);
  for (int t = 0; t < 50; ++t) {
    const KroneckerModule psi = random_module(Q, 3, 4, rng);
    const KernelTwist k = kernel_twist(psi);
    const int e = k.eta[0].degree();
    std::vector<std::vector<Form>> col;
    for (const auto& x : k.eta) col.push_back({x});
    const GradedMorphism eta = GradedMorphism::arrange(Q, {-2 - e}, {-2, -2, -2, -2}, col);
    const GradedMorphism p = GradedMorphism::arrange(Q, {-2, -2, -2, -2}, {-1, -1, -1}, psi.entries());
    const GradedMorphism prod = compose(p, eta);
    for (const auto& row : prod.entries()) EXPECT_TRUE(row[0].is_zero());
  }
}

TEST(KernelTwist, RankDeficientModulesAreRejected) {
  EXPECT_THROW(kernel_twist(module({{"x", "y", "z", "x"}, {"x", "y", "z", "x"}, {"y", "z", "x", "y"}}, Q)), DomainError);
}

TEST(MinorsProfile, KnownValues) {
  const MinorsProfile a = minors_profile(module({{"x"}, {"y"}, {"z"}}, Q));
  EXPECT_EQ(a.span_dim, 3u);
  EXPECT_FALSE(a.common_linear_factor.has_value());
  const MinorsProfile b = minors_profile(module({{"-y", "x"}, {"-z", "0"}, {"0", "-z"}}, Q));
  EXPECT_EQ(b.span_dim, 3u);
  // Minors z^2, y*z, x*z.
  ASSERT_TRUE(b.common_linear_factor.has_value());
  EXPECT_EQ(*b.common_linear_factor, F("z"));
  const MinorsProfile coprime = minors_profile(module({{"x", "0"}, {"y", "x"}, {"0", "z"}}, Q));
  EXPECT_EQ(coprime.span_dim, 3u);
  EXPECT_FALSE(coprime.common_linear_factor.has_value());
  // Every 2 x 2 minor of [[l, 0], [0, l], [a, b]] is a multiple of l... by construction with l = x.
  const MinorsProfile c = minors_profile(module({{"x", "0"}, {"0", "x"}, {"y", "z"}}, Q));
  ASSERT_TRUE(c.common_linear_factor.has_value());
  EXPECT_EQ(*c.common_linear_factor, F("x"));
  EXPECT_THROW(minors_profile(module({{"x", "y", "z", "x"}, {"x", "y", "z", "z"}}, Q)), DomainError);
}

TEST(CommonFactor, SemistableIffMinorsIndependent) {
  quintic::Rng rng(46);
  int used = 0, semistable = 0;
  while (used < 200) {
    const auto [psi, l] = common_factor_kronecker(F5, rng, 0);
    const KroneckerModule k(F5, psi);
    for (const auto& m : maximal_minors(psi, F5)) EXPECT_TRUE(m.is_zero() || divides(l, m));
    const MinorsProfile prof = minors_profile(k);
    if (!prof.gcd || prof.gcd->degree() != 1) continue;
    ++used;
    const bool ss = king_semistable(k).semistable;
    semistable += ss;
    EXPECT_EQ(ss, prof.span_dim == 4);
    EXPECT_EQ(kernel_twist(k).d, 4);
  }
  EXPECT_GT(semistable, 20);
  EXPECT_LT(semistable, 190);
}

TEST(ClosedForm, ForbiddenPatterns3x4AgreeWithEnumeration) {
  quintic::Rng rng(47);
  for (int t = 0; t < 200; ++t) {
    FormGrid g = random_module(F5, 3, 4, rng).entries();
    switch (t % 4) {
      case 1:
        for (auto& row : g) row[2] = Form(F5, 1);
        break;
      case 2:
        g[1][1] = g[1][2] = g[2][1] = g[2][2] = Form(F5, 1);
        break;
      case 3:
        g[2][0] = g[2][1] = g[2][3] = Form(F5, 1);
        break;
      default:
        break;
    }
    const KroneckerModule k(F5, right_multiply(left_multiply(random_invertible(F5, 3, rng, 0), g, F5),
                                               random_invertible(F5, 4, rng, 0), F5));
    EXPECT_EQ(semistable_3x4(k), king_semistable(k).semistable);
    const auto p = forbidden_patterns_3x4(k);
    if (t % 4) {
      EXPECT_TRUE(p[0] || p[1] || p[2]);
    }
  }
}

TEST(ClosedForm, Stable5x5AgreesWithEnumeration) {
  quintic::Rng rng(48);
  for (int t = 0; t < 40; ++t) {
    FormGrid g = random_module(F5, 5, 5, rng).entries();
    if (t % 2)
      for (int r = 2; r < 5; ++r)
        for (int c = 0; c < 2; ++c) g[r][c] = Form(F5, 1);
    if (determinant(g, F5, 5).is_zero()) continue;
    const KroneckerModule k(F5, g);
    EXPECT_EQ(stable_5x5(k), king_stable(k));
  }
}

TEST(ClosedForm, M53Battery) {
  const std::vector<Form> q1 = {F("x^2"), F("y^2"), F("z^2")}, q2 = {F("x*y"), F("y*z"), F("x*z")};
  EXPECT_TRUE(m53_x0_battery(q1, q2, {F("x"), F("y"), F("z")}).passes());
  const M53X0Battery span = m53_x0_battery(q1, q2, {F("x"), F("2*x"), F("0", Q, 1)});
  EXPECT_FALSE(span.span_ok);
  // Row 0 has l = 0 and q2 = 3 q1.
  const M53X0Battery dep = m53_x0_battery({F("x^2"), F("y^2"), F("z^2")}, {F("3*x^2"), F("y*z"), F("x*z")},
                                          {F("0", Q, 1), F("y"), F("z")});
  EXPECT_TRUE(dep.span_ok);
  EXPECT_FALSE(dep.quadrics_ok);
}

TEST(ProjectivePoints, Counts) {
  EXPECT_EQ(projective_points(F5, 3).size(), 31u);
  EXPECT_EQ(projective_points(Field::prime(7), 2).size(), 8u);
  EXPECT_EQ(grassmannian_size(5, 4, 2), 806u);
  EXPECT_EQ(grassmannian_size(5, 5, 2), 20306u);
}
