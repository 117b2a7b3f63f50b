#include <gtest/gtest.h>

#include "pathring/formal_model.hpp"
#include "test_algebras.hpp"

using namespace pathring;
using namespace pathring::testing;

TEST(FormalModel, AlreadyFormalIsIdentity) {
  auto A = punctured_line_model();
  auto M = formal_model(A);
  EXPECT_EQ(M.h1_letters, (std::vector<std::string>{"w0", "w1"}));
  ASSERT_EQ(M.inclusion.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(M.inclusion[i], unit_vector(i));
  EXPECT_TRUE(is_quasi_isomorphism(M, A));
}

TEST(FormalModel, DropsExactDirection) {
  auto A = exact_direction_model();
  auto M = formal_model(A);
  EXPECT_EQ(M.h1_letters, (std::vector<std::string>{"w"}));
  EXPECT_EQ(M.inclusion[1], unit_vector(A.space().index("w")));
  EXPECT_EQ(M.model.space().dimension(0), 1u);
  EXPECT_TRUE(check_axioms(M.model).ok());
}

TEST(FormalModel, Preconditions) {
  EXPECT_THROW(formal_model(sphere_model()), NotCurveLike);
  EXPECT_THROW(formal_model(torus_model()), NotCurveLike);
  EXPECT_THROW(formal_model(two_point_algebra()), NotConnective);
}

TEST(FormalModel, SplittingRulesBothQuasiIsomorphic) {
  // w0 + v and w1 are closed, v = dx exact; the kernel basis mixes directions.
  auto A = CDGA::Builder()
               .basis(0, {"1", "x"})
               .basis(1, {"v", "w0", "w1"})
               .unit("1")
               .d("x", {{"v", q(1)}})
               .build();
  auto lo = formal_model(A, SplittingRule::LowestPivot);
  auto hi = formal_model(A, SplittingRule::HighestPivot);
  EXPECT_EQ(lo.letter_count(), 2u);
  EXPECT_EQ(hi.letter_count(), 2u);
  EXPECT_NE(lo.inclusion, hi.inclusion);
  EXPECT_TRUE(is_quasi_isomorphism(lo, A));
  EXPECT_TRUE(is_quasi_isomorphism(hi, A));
}

TEST(FormalModel, InvariantsOnTensorProducts) {
  // (exact direction) ⊗ (nilpotent acyclic) is curve-like with H^1 of dim 1.
  auto A = tensor_product(exact_direction_model(), nilpotent_acyclic());
  ASSERT_TRUE(check_axioms(A).ok());
  auto M = formal_model(A);
  EXPECT_EQ(M.letter_count(), cohomology(A, 1).dimension);
  EXPECT_EQ(M.model.space().dimension(0), 1u);
  for (std::size_t a = 1; a < M.model.dimension(); ++a)
    for (std::size_t b = 1; b < M.model.dimension(); ++b) EXPECT_TRUE(M.model.multiply(a, b).empty());
  EXPECT_TRUE(is_quasi_isomorphism(M, A));
}

TEST(FormalModel, SingletonAugmentation) {
  for (std::size_t m : {0u, 2u, 3u}) {
    auto augs = augmentations_of_formal_model(free_formal_model(m));
    ASSERT_EQ(augs.size(), 1u);
    EXPECT_EQ(augs[0].values, std::vector<Rational>{Rational(1)});
  }
}
