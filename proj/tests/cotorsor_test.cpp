#include <gtest/gtest.h>

#include "pathring/cotorsor.hpp"

using namespace pathring;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST(Cotorsor, TrivialPasses) {
  for (auto [m, N] : {std::pair{1u, 3u}, {2u, 3u}, {3u, 2u}}) {
    auto H = tensor_word_algebra(m, N);
    auto rep = verify_cotorsor(trivial_cotorsor(H), H);
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.galois_rank, rep.galois_dimension);
  }
}

TEST(Cotorsor, TranslatedPassesAndDiffers) {
  auto H = tensor_word_algebra(2, 3);
  auto P = translated_cotorsor(H, {q(1), q(-2, 3)});
  auto rep = verify_cotorsor(P, H);
  EXPECT_TRUE(rep.pass()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_NE(P.coaction.at(Word{0, 1}), deconcatenate(Word{0, 1}));
  // Length-1 words are primitive-like under either coaction.
  EXPECT_EQ(P.coaction.at(Word{0}), deconcatenate(Word{0}));
}

TEST(Cotorsor, ZeroAlgebraFails) {
  auto H = tensor_word_algebra(2, 2);
  auto rep = verify_cotorsor(zero_cotorsor(2), H);
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.nonzero);
  EXPECT_EQ(rep.galois_dimension, 0u);
}

TEST(Cotorsor, DegenerateCoactionFailsGalois) {
  auto H = tensor_word_algebra(2, 2);
  auto P = trivial_cotorsor(H);
  for (auto& [w, rho] : P.coaction) rho = WordPairSum{{{Word{}, w}, q(1)}};
  auto rep = verify_cotorsor(P, H);
  EXPECT_TRUE(rep.coassociative);
  EXPECT_TRUE(rep.counital);
  EXPECT_FALSE(rep.galois_isomorphism);
}

TEST(Cotorsor, NonCoassociativeDetected) {
  auto H = tensor_word_algebra(1, 2);
  auto P = trivial_cotorsor(H);
  P.coaction[Word{0, 0}] = WordPairSum{{{Word{}, Word{0, 0}}, q(1)}, {{Word{0, 0}, Word{}}, q(1)}};
  auto rep = verify_cotorsor(P, H);
  EXPECT_FALSE(rep.coassociative);
}

TEST(Cotorsor, TruncationMismatch) {
  auto H = tensor_word_algebra(2, 3);
  EXPECT_THROW(verify_cotorsor(trivial_cotorsor(tensor_word_algebra(2, 2)), H), TruncationMismatch);
}

TEST(Kunneth, Concentration) {
  auto ok = concentration_from_kunneth({{0, 4}, {1, 0}, {-1, 0}}, {{0, 4}});
  EXPECT_TRUE(ok.consistent());
  for (const auto& r : ok.rows) EXPECT_EQ(r.claim, KunnethClaim::Vanishes);
  auto bad = concentration_from_kunneth({{0, 1}, {2, 0}}, {{0, 1}, {2, 3}});
  EXPECT_FALSE(bad.consistent());
  auto none = concentration_from_kunneth({{0, 1}, {2, 1}}, {{0, 1}, {2, 1}});
  EXPECT_TRUE(none.consistent());
  EXPECT_EQ(none.rows.front().claim, KunnethClaim::NoClaim);
  EXPECT_THROW(concentration_from_kunneth({{0, 1}}, {{0, 0}}), ZeroH0);
}
