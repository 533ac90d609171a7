#include <gtest/gtest.h>

#include <random>

#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/strata.hpp"
#include "support.hpp"

using namespace qt;

namespace {

const std::vector<std::vector<std::string>> kSemistableSingular = {{"x*y", "x^2", "0"}, {"x*z", "0", "x"}, {"0", "-x*z", "y"}};

// det via evaluation at random points and a Leibniz expansion.
void expect_det_matches_evaluation(const GradedMorphism& phi, std::mt19937_64& rng) {
  const Form d = determinant(phi);
  std::uniform_int_distribution<long> u(-9, 9);
  for (int k = 0; k < 5; ++k) {
    const std::array<Scalar, 3> p = {S(u(rng)), S(u(rng)), S(u(rng))};
    std::vector<std::vector<Scalar>> m(phi.rows());
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j) m[i].push_back(eval(phi.at(i, j), p));
    EXPECT_EQ(eval(d, p), leibniz(m, Q));
  }
}

}  // namespace

TEST(TwistSum, CanonicalDescendingOrder) {
  const TwistSum t({-1, -2, 0, -2});
  EXPECT_EQ(t.twists(), (std::vector<int>{0, -1, -2, -2}));
  EXPECT_EQ(t.sum(), -5);
  EXPECT_EQ(t.multiplicity(-2), 2u);
  EXPECT_EQ(t.h0(2), 6u + 3u + 1u + 1u);
}

TEST(Validate, KnownValues) {
  EXPECT_TRUE(validate(morph({-1}, {0}, {{"x"}})));
  EXPECT_FALSE(validate(morph({-1}, {0}, {{"x^2"}})));
  EXPECT_TRUE(validate(morph({-2, -2, -1}, {0, 0, 0}, kSemistableSingular)));
}

TEST(Validate, NegativeDegreeCellsMustVanish) {
  EXPECT_FALSE(validate(GradedMorphism::arrange(Q, {0}, {-1}, {{F("1")}})));
  EXPECT_TRUE(validate(morph({0}, {-1}, {{"0"}})));
}

TEST(Compose, KnownValues) {
  const GradedMorphism x = morph({-1}, {0}, {{"x"}});
  EXPECT_EQ(compose(x, GradedMorphism::identity(Q, x.source())), x);
  EXPECT_EQ(compose(morph({-1}, {0}, {{"x"}}), morph({-2}, {-1}, {{"y"}})), morph({-2}, {0}, {{"x*y"}}));
  EXPECT_THROW(compose(x, x), DegreeError);
}

TEST(Determinant, KnownValues) {
  EXPECT_TRUE(determinant(morph({-2, -2, -1}, {0, 0, 0}, kSemistableSingular)).is_zero());
  EXPECT_TRUE(determinant(morph({-3, -3, -1}, {-2, 0, 0}, {{"x", "y", "0"}, {"z^3", "0", "y"}, {"0", "z^3", "-x"}})).is_zero());
  EXPECT_EQ(determinant(morph({-3, -1}, {0, 1}, {{"y^3", "x"}, {"-z^4", "y^2"}})), F("y^5 + x*z^4"));
  EXPECT_THROW(determinant(morph({-1, -1}, {0}, {{"x", "y"}})), DomainError);
}

TEST(Determinant, MatchesEvaluationOracle) {
  std::mt19937_64 pts(31);
  for (const auto& e : catalogue()) {
    quintic::Rng rng(32);
    const GradedMorphism phi = random_shape(e.space, e.label, Q, rng, 3);
    expect_det_matches_evaluation(phi, pts);
    const Form d = determinant(phi);
    if (!d.is_zero()) {
      EXPECT_EQ(d.degree(), phi.target().sum() - phi.source().sum());
    }
  }
}

TEST(Determinant, MultiplicativeUnderCompose) {
  quintic::Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const GradedMorphism a = random_shape({5, 1}, Label::X3, Q, rng, 3);
    const GradedMorphism b = random_recombination(GradedMorphism::identity(Q, a.target()), rng, 3);
    EXPECT_EQ(determinant(compose(b, a)), determinant(b) * determinant(a));
  }
}

TEST(Injective, KnownValues) {
  EXPECT_FALSE(is_injective(morph({-2, -2, -1, -1}, {-1, 0, 0, 0},
                                  {{"y", "x", "0", "0"}, {"0", "y^2", "x", "0"}, {"0", "y*z", "0", "x"}, {"0", "0", "-z", "y"}})));
  EXPECT_FALSE(is_injective(morph({-3, -2, -1}, {-1, 0, 0}, {{"x^2 - y^2", "x", "0"}, {"x*z^2", "z^2", "y"}, {"y*z^2", "0", "x"}})));
  const GradedMorphism p = morph({-3, -3}, {-2, 1}, {{"x", "y"}, {"z^4", "y^4"}});
  EXPECT_TRUE(is_injective(p));
  const Form d = determinant(p), h = F("x*y^4 - y*z^4");
  EXPECT_TRUE(d == h || d == -h);
}

TEST(DualResolution, CatalogueShapes) {
  quintic::Rng rng(34);
  const GradedMorphism x0 = random_shape({5, 3}, Label::X0, Q, rng, 5);
  const GradedMorphism d = dual_resolution(x0, 1);
  EXPECT_EQ(d.source(), TwistSum({-2, -2, -2}));
  EXPECT_EQ(d.target(), TwistSum({0, 0, -1}));

  const GradedMorphism q = morph({-4}, {1}, {{"x^5 + y^4*z"}});
  EXPECT_EQ(dual_resolution(q, 0), q);
  EXPECT_EQ(dual_resolution(q, 1).source(), TwistSum({-3}));

  const GradedMorphism m51 = random_shape({5, 1}, Label::X0, Q, rng, 5);
  const GradedMorphism d51 = dual_resolution(m51, 1);
  EXPECT_EQ(d51.source(), TwistSum({-1, -1, -1, -2}));
  EXPECT_EQ(d51.target(), TwistSum({0, 0, 0, 0}));

  EXPECT_THROW(dual_resolution(morph({-2, -2, -1}, {0, 0, 0}, kSemistableSingular), 1), DomainError);
}

TEST(DualResolution, InvolutionAndDeterminant) {
  for (const auto& e : catalogue()) {
    SampleRequest req;
    req.space = e.space;
    req.label = e.label;
    req.seed = 35;
    const GradedMorphism phi = sample_stratum(req);
    for (int k : {0, 1, 2}) {
      const GradedMorphism d = dual_resolution(phi, k);
      EXPECT_TRUE(equivalent_up_to_permutation(dual_resolution(d, k), phi));
      const Form a = determinant(d), b = determinant(phi);
      EXPECT_TRUE(a == b || a == -b);
      const HilbertData h = hilbert(phi), hd = hilbert(d);
      EXPECT_EQ(hd.r, 5);
      EXPECT_EQ(hd.chi, -h.chi + 5 * k);
    }
  }
}

TEST(Minimize, KnownValues) {
  const GradedMorphism phi0 = morph({-4}, {1}, {{"x^5 - y*z^4"}});
  const GradedMorphism padded = morph({-4, 0}, {1, 0}, {{"x^5 - y*z^4", "x"}, {"0", "1"}});
  EXPECT_EQ(minimize(padded), phi0);
  quintic::Rng rng(36);
  const GradedMorphism minimal = random_shape({5, 3}, Label::X3, Q, rng, 4);
  EXPECT_EQ(minimize(minimal), minimal);
}

TEST(Minimize, CancelsBlocksHiddenByRecombination) {
  quintic::Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    SampleRequest req;
    req.space = {5, 1};
    req.label = Label::X2;
    req.seed = 100 + t;
    const GradedMorphism phi = sample_stratum(req);
    // phi + [1] on O(-1) -> O(-1), then scrambled.
    std::vector<int> src = phi.source().twists(), tgt = phi.target().twists();
    src.push_back(-1);
    tgt.push_back(-1);
    FormGrid g = phi.entries();
    for (std::size_t i = 0; i < g.size(); ++i) g[i].push_back(Form(Q, tgt[i] + 1));
    g.emplace_back();
    for (int s : phi.source().twists()) g.back().push_back(Form(Q, -1 - s));
    g.back().push_back(F("1"));
    const GradedMorphism big = random_recombination(GradedMorphism::arrange(Q, src, tgt, g), rng, 3);
    const GradedMorphism m = minimize(big);
    EXPECT_EQ(m.source(), phi.source());
    EXPECT_EQ(m.target(), phi.target());
    EXPECT_EQ(hilbert(m), hilbert(big));
    const Form a = determinant(m), b = determinant(big);
    EXPECT_EQ(a.monic(), b.monic());
  }
}

TEST(Hilbert, KnownValues) {
  quintic::Rng rng(38);
  EXPECT_EQ(hilbert(random_shape({5, 3}, Label::X0, Q, rng, 3)), (HilbertData{5, 3}));
  EXPECT_EQ(hilbert(morph({-4}, {1}, {{"x^5"}})), (HilbertData{5, 0}));
  EXPECT_EQ(hilbert(random_shape({5, 1}, Label::X0, Q, rng, 3)), (HilbertData{5, 1}));
  EXPECT_THROW(hilbert(morph({-1, -1}, {0}, {{"x", "y"}})), DomainError);
}

TEST(Hilbert, MatchesSectionCountsAtLargeTwist) {
  // For t >> 0, P(t) = h0(B(t)) - h0(A(t)); compare two consecutive values.
  for (const auto& e : catalogue()) {
    const TwistSum a(e.source), b(e.target);
    const long p10 = long(b.h0(10)) - long(a.h0(10)), p11 = long(b.h0(11)) - long(a.h0(11));
    quintic::Rng rng(39);
    const HilbertData h = hilbert(random_shape(e.space, e.label, Q, rng, 3));
    EXPECT_EQ(h.r, p11 - p10);
    EXPECT_EQ(h.chi, p10 - 10 * h.r);
    EXPECT_EQ(b.sum() - a.sum(), 5);
  }
}

TEST(MaximalMinors, KnownValues) {
  EXPECT_EQ(maximal_minors(grid({{"x", "y", "z"}}), Q), (std::vector<Form>{F("x"), F("y"), F("z")}));
  const auto m = maximal_minors(grid({{"-y", "x"}, {"-z", "0"}, {"0", "-z"}}), Q);
  ASSERT_EQ(m.size(), 3u);
  for (const auto& f : m) EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(linear_span_dim(m), 3u);
  // Rows l*m_i: every minor carries l.
  const Form l = F("x + 2*y");
  const FormGrid block = {{F("x") * l, F("y") * l}, {F("z") * l, F("x + z") * l}, {F("y - z") * l, F("2*x") * l}};
  const Form g = gcd(maximal_minors(block, Q));
  EXPECT_TRUE(divides(l, g));
  EXPECT_THROW(maximal_minors(grid({{"x", "y", "z", "x"}, {"x", "y", "z", "z"}}), Q), DomainError);
}
