#include <gtest/gtest.h>

#include "ncspan/polynomial.hpp"
#include "ncspan/text.hpp"
#include "support/generators.hpp"

namespace ncspan {
namespace {

NcPolynomial X(VarIndex i) { return NcPolynomial::variable(i); }

TEST(Polynomial, AdditiveInverseCancels) {
  NcPolynomial z = X(1) + (-X(1));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.nvars(), 0u);
}

TEST(Polynomial, AddKeepsDistinctWords) {
  NcPolynomial f = X(1) * X(2) + X(2) * X(1);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(Word{1, 2}), 1);
  EXPECT_EQ(f.coefficient(Word{2, 1}), 1);
}

TEST(Polynomial, ExactRationalAdd) {
  NcPolynomial half = Coefficient(1, 2) * X(1);
  EXPECT_EQ(half + half, X(1));
}

TEST(Polynomial, ProductConcatenatesWords) {
  NcPolynomial f = X(1) * X(2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.terms().begin()->first, (Word{1, 2}));
}

TEST(Polynomial, ProductIsNoncommutative) {
  NcPolynomial f = (X(1) + X(2)) * (X(1) - X(2));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.coefficient(Word{1, 1}), 1);
  EXPECT_EQ(f.coefficient(Word{1, 2}), -1);
  EXPECT_EQ(f.coefficient(Word{2, 1}), 1);
  EXPECT_EQ(f.coefficient(Word{2, 2}), -1);
}

TEST(Polynomial, CommutatorHasTwoOppositeTerms) {
  NcPolynomial c = commutator(X(1), X(2));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.coefficient(Word{1, 2}), -c.coefficient(Word{2, 1}));
}

TEST(Polynomial, NvarsTracksMaximumIndex) {
  NcPolynomial f = X(1) * X(5) + X(2);
  EXPECT_EQ(f.nvars(), 5u);
  f -= X(1) * X(5);
  EXPECT_EQ(f.nvars(), 2u);
  EXPECT_EQ(NcPolynomial(7).nvars(), 0u);
}

TEST(Substitute, SwapsVariables) {
  EXPECT_EQ(substitute(X(1) * X(2), {{1, X(2)}, {2, X(1)}}), X(2) * X(1));
}

TEST(Substitute, ExpandsSquareOfSum) {
  NcPolynomial got = substitute(X(1) * X(1), {{1, X(1) + X(2)}});
  EXPECT_EQ(got, X(1) * X(1) + X(1) * X(2) + X(2) * X(1) + X(2) * X(2));
}

TEST(Substitute, MissingAssignmentNamesVariable) {
  try {
    substitute(X(1) * X(3), {{1, X(1)}});
    FAIL() << "expected MissingAssignment";
  } catch (const MissingAssignment& e) {
    EXPECT_EQ(e.variable, 3u);
  }
}

TEST(Degree, Basics) {
  EXPECT_EQ(degree(commutator(X(1), X(2))), 2u);
  EXPECT_EQ(degree_in(X(1) * X(2) * X(1), 1), 2u);
  EXPECT_FALSE(degree(NcPolynomial{}).has_value());
  EXPECT_FALSE(degree_in(NcPolynomial{}, 1).has_value());
  EXPECT_EQ(degree(NcPolynomial(3)), 0u);
}

TEST(HomogeneousComponents, SplitsByDegree) {
  auto parts = homogeneous_components_in(X(1) + X(1) * X(1), 1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 1u);
  EXPECT_EQ(parts[0].second, X(1));
  EXPECT_EQ(parts[1].first, 2u);
  EXPECT_EQ(parts[1].second, X(1) * X(1));
}

TEST(HomogeneousComponents, AlreadyHomogeneous) {
  NcPolynomial f = X(1) * X(2) + X(2) * X(1);
  auto parts = homogeneous_components_in(f, 1);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].first, 1u);
  EXPECT_EQ(parts[0].second, f);
}

TEST(HomogeneousComponents, ConstantTermIsDegreeZero) {
  auto parts = homogeneous_components_in(NcPolynomial(3) + X(1), 1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 0u);
  EXPECT_EQ(parts[0].second, NcPolynomial(3));
  EXPECT_EQ(parts[1].second, X(1));
}

TEST(StripVariable, Examples) {
  NcPolynomial f = X(1) * X(2) + X(2);
  auto s1 = strip_variable(f, 1);
  EXPECT_EQ(s1.with_var, X(1) * X(2));
  EXPECT_EQ(s1.without_var, X(2));
  auto s2 = strip_variable(f, 2);
  EXPECT_EQ(s2.with_var, f);
  EXPECT_TRUE(s2.without_var.is_zero());
  auto s3 = strip_variable(NcPolynomial(5), 1);
  EXPECT_TRUE(s3.with_var.is_zero());
  EXPECT_EQ(s3.without_var, NcPolynomial(5));
}

TEST(Multilinear, Examples) {
  EXPECT_TRUE(is_multilinear(commutator(X(1), X(2))));
  EXPECT_FALSE(is_multilinear(X(1) * X(1)));
  EXPECT_FALSE(is_multilinear(X(1) * X(3)));
  EXPECT_TRUE(is_multilinear(testing::standard_polynomial(4)));
}

TEST(SumOfCommutators, Examples) {
  EXPECT_TRUE(is_sum_of_commutators(commutator(X(1), X(2))));

  auto t = commutator_test(X(1));
  EXPECT_FALSE(t.is_sum_of_commutators);
  ASSERT_TRUE(t.offending_class.has_value());
  EXPECT_EQ(*t.offending_class, (Word{1}));
  EXPECT_EQ(t.class_sum, 1);

  // X1X2X3 - X3X1X2 expands [X1X2, X3].
  NcPolynomial f = X(1) * X(2) * X(3) - X(3) * X(1) * X(2);
  EXPECT_EQ(f, commutator(X(1) * X(2), X(3)));
  EXPECT_TRUE(is_sum_of_commutators(f));
}

TEST(SumOfCommutators, ConstantIsNot) {
  auto t = commutator_test(NcPolynomial(2));
  EXPECT_FALSE(t.is_sum_of_commutators);
  EXPECT_TRUE(t.offending_class->empty());
}

TEST(LeastRotation, PicksLexicographicMinimum) {
  EXPECT_EQ(least_rotation(Word{3, 1, 2}), (Word{1, 2, 3}));
  EXPECT_EQ(least_rotation(Word{2, 1, 2, 1}), (Word{1, 2, 1, 2}));
  EXPECT_EQ(least_rotation(Word{}), (Word{}));
}

TEST(CompactVariables, ClosesGaps) {
  auto [g, old] = compact_variables(X(2) * X(5) + X(5));
  EXPECT_EQ(g, X(1) * X(2) + X(2));
  EXPECT_EQ(old, (std::vector<VarIndex>{2, 5}));
}

// Property checks over seeded random polynomials.

class PolynomialProperties : public ::testing::Test {
 protected:
  testing::Gen gen{0xC0FFEE};
  NcPolynomial random() { return gen.polynomial(3, 3, static_cast<std::size_t>(gen.integer(0, 5))); }
};

TEST_F(PolynomialProperties, RingAxioms) {
  for (int trial = 0; trial < 120; ++trial) {
    NcPolynomial f = random(), g = random(), h = random();
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST_F(PolynomialProperties, SubstituteIsHomomorphism) {
  for (int trial = 0; trial < 60; ++trial) {
    NcPolynomial f = random(), g = random();
    Assignment sigma;
    for (VarIndex v = 1; v <= 3; ++v) sigma[v] = gen.polynomial(2, 3, 2);
    EXPECT_EQ(substitute(f * g, sigma), substitute(f, sigma) * substitute(g, sigma));
    EXPECT_EQ(substitute(f + g, sigma), substitute(f, sigma) + substitute(g, sigma));
  }
}

TEST_F(PolynomialProperties, ComponentsReconstruct) {
  for (int trial = 0; trial < 80; ++trial) {
    NcPolynomial f = random();
    for (VarIndex i = 1; i <= 4; ++i) {
      NcPolynomial sum;
      for (const auto& [deg, part] : homogeneous_components_in(f, i)) {
        EXPECT_FALSE(part.is_zero());
        EXPECT_TRUE(is_homogeneous_in(part, i));
        sum += part;
      }
      EXPECT_EQ(sum, f);
    }
  }
}

TEST_F(PolynomialProperties, StripMatchesZeroSubstitution) {
  for (int trial = 0; trial < 80; ++trial) {
    NcPolynomial f = random();
    for (VarIndex i = 1; i <= 3; ++i) {
      Assignment zero_i;
      for (VarIndex v = 1; v <= 3; ++v) zero_i[v] = v == i ? NcPolynomial{} : X(v);
      auto s = strip_variable(f, i);
      EXPECT_EQ(s.without_var, substitute(f, zero_i));
      EXPECT_EQ(s.with_var, f - substitute(f, zero_i));
      EXPECT_EQ(s.with_var + s.without_var, f);
    }
  }
}

TEST_F(PolynomialProperties, CommutatorSumsPassTheCyclicTest) {
  for (int trial = 0; trial < 100; ++trial) {
    NcPolynomial f = gen.commutator_sum(5, 3, static_cast<std::size_t>(gen.integer(1, 4)));
    EXPECT_TRUE(is_sum_of_commutators(f)) << print(f);
  }
}

TEST_F(PolynomialProperties, FailureReportsNonCancellingClass) {
  for (int trial = 0; trial < 100; ++trial) {
    NcPolynomial f = random();
    auto t = commutator_test(f);
    if (t.is_sum_of_commutators) continue;
    ASSERT_TRUE(t.offending_class.has_value());
    Coefficient sum = 0;
    for (const auto& [w, c] : f.terms())
      if (least_rotation(w) == *t.offending_class) sum += c;
    EXPECT_EQ(sum, t.class_sum);
    EXPECT_NE(sum, 0);
  }
}

}  // namespace
}  // namespace ncspan
