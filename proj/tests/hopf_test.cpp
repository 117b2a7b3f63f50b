#include <gtest/gtest.h>

#include "pathring/bar.hpp"
#include "pathring/formal_model.hpp"
#include "pathring/hopf.hpp"

using namespace pathring;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST(Shuffle, SmallExamples) {
  EXPECT_EQ(shuffle_product(Word{0}, Word{1}), (WordSum{{{0, 1}, q(1)}, {{1, 0}, q(1)}}));
  EXPECT_EQ(shuffle_product(Word{0}, Word{0}), (WordSum{{{0, 0}, q(2)}}));
  EXPECT_EQ(shuffle_product(Word{}, Word{2, 1}), (WordSum{{{2, 1}, q(1)}}));
  auto s = shuffle_product(Word{0, 1}, Word{2});
  EXPECT_EQ(s, (WordSum{{{0, 1, 2}, q(1)}, {{0, 2, 1}, q(1)}, {{2, 0, 1}, q(1)}}));
  // binomial count of terms
  Rational total;
  for (const auto& [w, c] : shuffle_product(Word{0, 1, 0}, Word{1, 1})) total += c;
  EXPECT_EQ(total, q(10));
}

TEST(Shuffle, TruncatedAlgebraRejectsLongProducts) {
  auto H = tensor_word_algebra(2, 2);
  EXPECT_NO_THROW(shuffle_product(H, Word{0}, Word{1}));
  EXPECT_THROW(shuffle_product(H, Word{0, 1}, Word{1}), TruncationExceeded);
}

TEST(Coproduct, Deconcatenation) {
  auto d = deconcatenate(Word{0, 1});
  WordPairSum expect{{{Word{}, Word{0, 1}}, q(1)}, {{Word{0}, Word{1}}, q(1)}, {{Word{0, 1}, Word{}}, q(1)}};
  EXPECT_EQ(d, expect);
  EXPECT_EQ(counit(Word{}), q(1));
  EXPECT_EQ(counit(Word{3}), q(0));
  EXPECT_EQ(antipode(Word{0, 1}), (WordSum{{{1, 0}, q(1)}}));
  EXPECT_EQ(antipode(Word{0, 1, 1}), (WordSum{{{1, 1, 0}, q(-1)}}));
}

TEST(HopfAxioms, HoldOnTruncations) {
  for (auto [m, N] : {std::pair{1u, 4u}, {2u, 3u}, {3u, 3u}}) {
    auto rep = check_hopf_axioms(tensor_word_algebra(m, N));
    EXPECT_TRUE(rep.ok()) << m << " " << N << " " << (rep.ok() ? "" : rep.violations[0].axiom);
    EXPECT_GT(rep.checks, 0u);
  }
}

TEST(HopfAxioms, PlantedAntipodeSignError) {
  auto H = tensor_word_algebra(2, 3);
  AntipodeFn bad = [](const Word& w) { return WordSum{{Word(w.rbegin(), w.rend()), q(1)}}; };
  auto rep = check_hopf_axioms(H, bad);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front().axiom, "antipode");
  EXPECT_EQ(rep.violations.front().word, "[a0]");
}

TEST(Groupoid, CocompositionCoassociative) {
  auto H = tensor_word_algebra(2, 4);
  EXPECT_TRUE(check_cocomposition(H, "a", "b", "c", "d").ok());
  auto c = cocomposition(H, {"z", "x"}, "y", Word{0, 1});
  EXPECT_EQ(c.left, (PathSpace{"z", "y"}));
  EXPECT_EQ(c.right, (PathSpace{"y", "x"}));
  EXPECT_EQ(c.terms.size(), 3u);
  EXPECT_EQ(counit_at({"x", "x"}, Word{}), q(1));
  EXPECT_THROW(counit_at({"x", "y"}, Word{}), std::invalid_argument);
}

TEST(Characters, ExponentialIsCharacter) {
  auto H = tensor_word_algebra(2, 4);
  auto chi = exponential_character(H, {q(1, 2), q(-3)});
  EXPECT_TRUE(is_character(H, chi));
  EXPECT_EQ(evaluate(chi, Word{0, 1}), q(-3, 4));
  EXPECT_EQ(evaluate(chi, Word{1, 1, 1}), q(-27, 6));
  Functional not_char{{Word{}, q(1)}, {Word{0}, q(1)}, {Word{0, 0}, q(1)}};
  EXPECT_FALSE(is_character(H, not_char));
}

TEST(Characters, GroupLaws) {
  auto H = tensor_word_algebra(2, 4);
  auto f = exponential_character(H, {q(1), q(2)});
  auto g = exponential_character(H, {q(-1, 3), q(5)});
  auto h = exponential_character(H, {q(7), q(0)});
  auto e = counit_functional();
  EXPECT_EQ(convolve(H, f, e), f);
  EXPECT_EQ(convolve(H, e, f), f);
  EXPECT_EQ(convolve(H, convolve(H, f, g), h), convolve(H, f, convolve(H, g, h)));
  EXPECT_EQ(convolve(H, f, convolution_inverse(H, f)), e);
  EXPECT_EQ(convolve(H, convolution_inverse(H, f), f), e);
  EXPECT_TRUE(is_character(H, convolve(H, f, g)));
  // exponentials of commuting... letters a0, a1 do not commute: f*g != g*f
  EXPECT_NE(convolve(H, f, g), convolve(H, g, f));
}

TEST(Characters, LeftTranslationIsAlgebraMap) {
  auto H = tensor_word_algebra(2, 4);
  auto chi = exponential_character(H, {q(2), q(-1, 2)});
  for (const auto& u : H.basis())
    for (const auto& v : H.basis()) {
      if (u.size() + v.size() > 4) continue;
      WordSum lhs;
      for (const auto& [w, c] : shuffle_product(u, v)) add_scaled(lhs, left_translate(chi, w), c);
      EXPECT_EQ(lhs, shuffle_product(left_translate(chi, u), left_translate(chi, v)));
    }
}

TEST(FiniteLevels, LengthQuotients) {
  auto H = tensor_word_algebra(2, 3);
  EXPECT_EQ(length_quotient(H, 1).dimension(), 1u);
  EXPECT_EQ(length_quotient(H, 2).dimension(), 3u);
  EXPECT_EQ(length_quotient(H, 4).dimension(), H.dimension());
  EXPECT_THROW(length_quotient(H, 0), std::invalid_argument);
  EXPECT_THROW(length_quotient(H, 5), std::invalid_argument);
  // Quotients compose.
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      EXPECT_EQ(length_quotient(length_quotient(H, n), k).basis(), length_quotient(H, k).basis());
  EXPECT_TRUE(check_hopf_axioms(length_quotient(H, 3)).ok());
}

TEST(BarConsistency, ShuffleMatchesBarProduct) {
  // On a formal model D = 0 and the letters have shifted degree 0, so the
  // bar product on H^0 is the plain shuffle.
  for (std::size_t m : {1u, 2u}) {
    auto M = free_formal_model(m);
    auto xi = unit_augmentation(M.model);
    BarComplex B(M.model, xi, xi, {4});
    auto H = tensor_word_algebra(m, 4);
    EXPECT_EQ(B.cohomology(0).dimension, H.dimension());
    for (const auto& u : H.basis())
      for (const auto& v : H.basis())
        if (u.size() + v.size() <= 4) {
          EXPECT_EQ(bar_shuffle(B.letters(), u, v), shuffle_product(u, v));
        }
  }
}
