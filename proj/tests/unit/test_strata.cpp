#include <gtest/gtest.h>

#include "quintic/error.hpp"
#include "quintic/gallery.hpp"
#include "quintic/strata.hpp"
#include "support.hpp"

using namespace qt;

namespace {

GradedMorphism sample(ModuliSpaceId space, Label label, std::uint64_t seed,
                      std::optional<std::string> sublabel = std::nullopt) {
  SampleRequest req;
  req.space = space;
  req.label = label;
  req.seed = seed;
  req.sublabel = std::move(sublabel);
  return sample_stratum(req);
}

bool condition(const StratumReport& r, const std::string& name) {
  for (const auto& c : r.conditions)
    if (c.name == name) return c.value;
  ADD_FAILURE() << "missing condition " << name;
  return false;
}

}  // namespace

TEST(ModuliSpaceId, ParseAndSlope) {
  EXPECT_EQ(ModuliSpaceId::parse("M(5,3)"), (ModuliSpaceId{5, 3}));
  EXPECT_EQ((ModuliSpaceId{5, 3}.slope()), "3/5");
  EXPECT_EQ((ModuliSpaceId{5, 0}.slope()), "0");
  EXPECT_THROW(ModuliSpaceId::parse("M(4,1)"), DomainError);
  EXPECT_THROW(ModuliSpaceId::parse("M(5,x)"), DomainError);
}

TEST(Catalogue, TwelveDistinctShapesOfDegreeFive) {
  ASSERT_EQ(catalogue().size(), 12u);
  for (std::size_t i = 0; i < catalogue().size(); ++i) {
    const auto& e = catalogue()[i];
    EXPECT_EQ(TwistSum(e.target).sum() - TwistSum(e.source).sum(), 5);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = catalogue()[j];
      if (o.space == e.space) {
        EXPECT_FALSE(TwistSum(o.source) == TwistSum(e.source) && TwistSum(o.target) == TwistSum(e.target));
      }
    }
  }
}

TEST(Classify, QuinticWithPointIsX3) {
  quintic::Rng rng(51);
  const GradedMorphism phi = quintic_with_point(F("x"), F("y"), random_form(Q, 4, rng, 5), random_form(Q, 4, rng, 5));
  const StratumReport r = classify({5, 1}, phi);
  EXPECT_EQ(r.label, Label::X3);
  EXPECT_TRUE(condition(r, "phi11_span_2"));
}

TEST(Classify, VerbatimCounterexamplesAreNotInjective) {
  const std::vector<std::pair<ModuliSpaceId, GradedMorphism>> cases = {
      {{5, 3}, morph({-2, -2, -1}, {0, 0, 0}, {{"x*y", "x^2", "0"}, {"x*z", "0", "x"}, {"0", "-x*z", "y"}})},
      {{5, 3},
       morph({-2, -2, -1, -1}, {-1, 0, 0, 0}, {{"y", "x", "0", "0"}, {"0", "y^2", "x", "0"}, {"0", "y*z", "0", "x"}, {"0", "0", "-z", "y"}})},
      {{5, 1}, morph({-3, -2, -1}, {-1, 0, 0}, {{"x^2 - y^2", "x", "0"}, {"x*z^2", "z^2", "y"}, {"y*z^2", "0", "x"}})},
      {{5, 0}, morph({-3, -3, -1}, {-2, 0, 0}, {{"x", "y", "0"}, {"z^3", "0", "y"}, {"0", "z^3", "-x"}})},
  };
  for (const auto& [space, phi] : cases) {
    const StratumReport r = classify(space, phi);
    EXPECT_EQ(r.label, Label::NotInjective);
    EXPECT_TRUE(r.determinant.is_zero());
    EXPECT_FALSE(r.signature.has_value());
  }
}

TEST(Classify, DiagonalM50IsStrictlySemistableX0) {
  const GradedMorphism phi = morph({-2, -2, -2, -2, -2}, {-1, -1, -1, -1, -1},
                                   {{"x", "0", "0", "0", "0"},
                                    {"0", "y", "0", "0", "0"},
                                    {"0", "0", "z", "0", "0"},
                                    {"0", "0", "0", "x + y", "0"},
                                    {"0", "0", "0", "0", "y + z"}});
  const StratumReport r = classify({5, 0}, phi);
  EXPECT_EQ(r.label, Label::X0);
  EXPECT_EQ(r.sublabel, "strictly-semistable");
  EXPECT_EQ(r.determinant, F("x*y*z*(x + y)*(y + z)"));
}

TEST(Classify, SamplesLandInTheirStratumWithTableSignature) {
  for (const auto& e : catalogue())
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const StratumReport r = classify(e.space, sample(e.space, e.label, seed));
      EXPECT_EQ(r.label, e.label) << e.space.to_string() << " seed " << seed;
      ASSERT_TRUE(r.signature.has_value());
      EXPECT_EQ(*r.signature, e.signature);
      EXPECT_EQ(r.hilbert, (HilbertData{5, e.space.chi}));
    }
}

TEST(Classify, Sublabels) {
  const std::vector<std::tuple<ModuliSpaceId, Label, std::string>> cases = {
      {{5, 3}, Label::X0, "X0∖X01"}, {{5, 3}, Label::X0, "X01"}, {{5, 3}, Label::X2, "X20"},
      {{5, 3}, Label::X2, "X21"},    {{5, 1}, Label::X0, "X01"}, {{5, 1}, Label::X0, "X02"},
      {{5, 1}, Label::X1, "X10"},    {{5, 1}, Label::X1, "X11"}, {{5, 0}, Label::X0, "stable"},
      {{5, 0}, Label::X0, "strictly-semistable"},
  };
  for (const auto& [space, label, sub] : cases) {
    const StratumReport r = classify(space, sample(space, label, 3, sub));
    EXPECT_EQ(r.label, label);
    EXPECT_EQ(r.sublabel, sub) << space.to_string();
  }
}

TEST(Classify, WrongShapeAndFailedConditions) {
  const StratumReport w = classify({5, 3}, morph({-4}, {1}, {{"x^5 + y^5"}}));
  EXPECT_EQ(w.label, Label::WrongShape);
  EXPECT_TRUE(w.signature.has_value());
  // M(5,1) X3 shape with dependent one-forms.
  const StratumReport c = classify({5, 1}, morph({-3, -3}, {-2, 1}, {{"x", "2*x"}, {"y^4", "z^4"}}));
  EXPECT_EQ(c.label, Label::ConditionsFailed);
  EXPECT_FALSE(condition(c, "phi11_span_2"));
}

TEST(Classify, MinimizesFirst) {
  const GradedMorphism padded = morph({-4, 0}, {1, 0}, {{"x^5 + y^5 + z^5", "x"}, {"0", "1"}});
  EXPECT_EQ(classify({5, 0}, padded).label, Label::X3);
}

TEST(DualClassify, KnownValues) {
  const auto [s0, r0] = dual_classify({5, 3}, sample({5, 3}, Label::X0, 7));
  EXPECT_EQ(s0, (ModuliSpaceId{5, 2}));
  EXPECT_EQ(r0.label, Label::X0);
  ASSERT_TRUE(r0.serre_signature.has_value());
  EXPECT_EQ(*r0.serre_signature, (std::array<long, 3>{0, 0, 1}));

  const auto [s3, r3] = dual_classify({5, 0}, twisted_structure_sheaf(F("x^5 + y^5 + z^5")));
  EXPECT_EQ(s3, (ModuliSpaceId{5, 0}));
  EXPECT_EQ(r3.label, Label::X3);

  const auto [s1, r1] = dual_classify({5, 1}, sample({5, 1}, Label::X3, 7));
  EXPECT_EQ(s1, (ModuliSpaceId{5, 4}));
  EXPECT_EQ(r1.label, Label::X3);
}

TEST(DualClassify, SerreRelationsAndInvolution) {
  for (const auto& e : catalogue())
    for (std::uint64_t seed : {8, 9}) {
      const GradedMorphism phi = sample(e.space, e.label, seed);
      const auto [ds, dr] = dual_classify(e.space, phi);
      EXPECT_EQ(dr.label, e.label);
      if (ds == e.space) {
        EXPECT_FALSE(dr.serre_signature.has_value());
      } else {
        ASSERT_TRUE(dr.serre_signature.has_value());
        const auto& g = *dr.serre_signature;
        EXPECT_EQ((std::array<long, 3>{long(e.signature.h1), long(e.signature.h0_minus1), long(e.signature.h0_omega)}), g);
      }
      const auto [bs, br] = dual_classify(ds, canonical_dual(e.space, phi));
      EXPECT_EQ(bs, e.space);
      EXPECT_EQ(br.label, e.label);
    }
}

TEST(Stabilizer, KnownValues) {
  EXPECT_EQ(stabilizer_dimension(morph({-4}, {1}, {{"x^5 - y^2*z^3"}})), 0u);
  EXPECT_EQ(stabilizer_dimension(sample({5, 3}, Label::X0, 10)), 0u);
  EXPECT_EQ(stabilizer_dimension(sample({5, 3}, Label::X1, 10)), 2u);
}

TEST(DimensionAudit, CatalogueRows) {
  const DimensionAudit a = dimension_audit({5, 3}, Label::X0, 5);
  EXPECT_EQ(a.dim_W, 45u);
  EXPECT_EQ(a.dim_G, 19u);
  EXPECT_EQ(a.stab_dim, 0u);
  EXPECT_EQ(a.stratum_dim, 26);
  EXPECT_TRUE(a.ok);
  const DimensionAudit b = dimension_audit({5, 3}, Label::X3, 5);
  EXPECT_EQ(b.dim_W, 34u);
  EXPECT_EQ(b.dim_G, 12u);
  EXPECT_EQ(b.stratum_dim, 22);
  const DimensionAudit c = dimension_audit({5, 0}, Label::X3, 5);
  EXPECT_EQ(c.dim_W, 21u);
  EXPECT_EQ(c.dim_G, 1u);
  EXPECT_EQ(c.stratum_dim, 20);
  EXPECT_TRUE(c.ok);
}

TEST(DimensionAudit, KroneckerModuli) {
  EXPECT_EQ(kronecker_moduli_dimension(3, 2, 3), 6);
  EXPECT_EQ(kronecker_moduli_dimension(3, 5, 5), 26);
}
