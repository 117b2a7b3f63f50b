// The thrice-punctured line end to end: its formal model, the path ring up
// to length 3, one shuffle product, two Sullivan stages, and the dilogarithm
// entry of the polylogarithm connection along a real segment.

#include <cstdio>

#include "pathring/bar.hpp"
#include "pathring/chen/integrate.hpp"
#include "pathring/formal_model.hpp"
#include "pathring/hopf.hpp"
#include "pathring/sullivan.hpp"

using namespace pathring;

int main() {
  auto A = CDGA::Builder().basis(0, {"1"}).basis(1, {"w0", "w1"}).unit("1").build();
  auto M = formal_model(A);
  auto unit = unit_augmentation(M.model);
  BarComplex B(M.model, unit, unit, {3});

  std::printf("H^0 by length:");
  for (auto n : B.h0_length_profile()) std::printf(" %zu", n);
  std::printf("\nconcentrated in degree 0: %s\n", verify_concentration(B).pass ? "yes" : "no");

  auto H = tensor_word_algebra(2, 3);
  std::printf("[a0] * [a0|a1] =");
  for (const auto& [w, c] : shuffle_product(Word{0}, Word{0, 1})) std::printf(" %s%s", c.str().c_str(), H.format(w).c_str());
  std::printf("\n");

  auto stages = bg_stages(M.model, 2, 3);
  for (const auto& st : stages)
    std::printf("stage %d: %zu generators\n", st.algebra.stage(), st.algebra.generator_count());

  using namespace pathring::chen;
  auto pt = [](const char* re) { return ExactPoint{Rational::parse(re), Rational(0)}; };
  PuncturedLine X({pt("0"), pt("1")});
  UnipotentConnection C{3, {}};
  C.set(0, 1, 0, {Rational(1), Rational(0)});
  C.set(1, 2, 1, {Rational(1), Rational(0)});
  auto T = transport_dyson<double>(X, C, Path::line(pt("1/5"), pt("1/2")));
  std::printf("T[0][2] along 1/5 -> 1/2: %.12f (error %.1e)\n", T.value[0][2].re, T.error);
}
