#pragma once

// The shuffle Hopf algebra on words in H^1 letters (H^0 of the bar complex of
// a formal model), its groupoid bookkeeping, characters, and finite-level
// quotients.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathring/errors.hpp"
#include "pathring/rational.hpp"
#include "pathring/words.hpp"

namespace pathring {

/// Words of length <= truncation over an ordered alphabet. The empty word
/// is the unit.
struct TensorWordAlgebra {
  std::vector<std::string> letters;
  std::size_t truncation = 0;

  std::size_t letter_count() const { return letters.size(); }
  std::vector<Word> basis() const { return all_words(letters.size(), truncation); }
  std::size_t dimension() const {
    std::size_t total = 0, p = 1;
    for (std::size_t n = 0; n <= truncation; ++n, p *= letters.size()) total += p;
    return total;
  }
  bool contains(const Word& w) const {
    if (w.size() > truncation) return false;
    for (Letter l : w)
      if (l >= letters.size()) return false;
    return true;
  }
  std::string format(const Word& w) const { return format_word(letters, w); }
};

inline TensorWordAlgebra tensor_word_algebra(std::size_t m, std::size_t N) {
  TensorWordAlgebra H;
  for (std::size_t i = 0; i < m; ++i) H.letters.push_back("a" + std::to_string(i));
  H.truncation = N;
  return H;
}

/// Sum over all (|u|,|v|)-shuffles, unit coefficients.
inline WordSum shuffle_product(const Word& u, const Word& v) {
  WordSum out;
  Word acc;
  acc.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      add_term(out, acc, Rational(1));
      return;
    }
    if (i < u.size()) {
      acc.push_back(u[i]);
      self(self, i + 1, j);
      acc.pop_back();
    }
    if (j < v.size()) {
      acc.push_back(v[j]);
      self(self, i, j + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline WordSum shuffle_product(const TensorWordAlgebra& H, const Word& u, const Word& v) {
  if (u.size() + v.size() > H.truncation)
    throw TruncationExceeded("shuffle of lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " exceeds truncation " +
                             std::to_string(H.truncation));
  return shuffle_product(u, v);
}

inline WordSum shuffle_product(const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) add_scaled(out, shuffle_product(u, v), a * b);
  return out;
}

/// Δ(w) = Σ_k (w_1..w_k) ⊗ (w_{k+1}..w_n)
inline WordPairSum deconcatenate(const Word& w) {
  WordPairSum out;
  for (std::size_t k = 0; k <= w.size(); ++k)
    add_term(out, std::make_pair(Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())),
             Rational(1));
  return out;
}

inline Rational counit(const Word& w) { return w.empty() ? Rational(1) : Rational(0); }

inline Rational counit(const WordSum& s) {
  auto it = s.find(Word{});
  return it == s.end() ? Rational(0) : it->second;
}

/// S(w) = (-1)^{|w|} reverse(w)
inline WordSum antipode(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return WordSum{{r, Rational(w.size() % 2 == 0 ? 1 : -1)}};
}

using AntipodeFn = std::function<WordSum(const Word&)>;

// ---------------------------------------------------------------------------
// Axiom checks

struct HopfViolation {
  std::string axiom;
  std::string word;  // offending word or tuple, formatted
};

struct HopfReport {
  std::vector<HopfViolation> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline WordSum apply_linear(const WordSum& x, const std::function<WordSum(const Word&)>& f) {
  WordSum out;
  for (const auto& [w, c] : x) add_scaled(out, f(w), c);
  return out;
}

inline WordPairSum shuffle_pairs(const WordPairSum& x, const WordPairSum& y) {
  WordPairSum out;
  for (const auto& [p, a] : x)
    for (const auto& [q, b] : y)
      for (const auto& [l, c1] : shuffle_product(p.first, q.first))
        for (const auto& [r, c2] : shuffle_product(p.second, q.second))
          add_term(out, std::make_pair(l, r), a * b * c1 * c2);
  return out;
}

using Triple = std::tuple<Word, Word, Word>;
using TripleSum = std::map<Triple, Rational>;

inline TripleSum coproduct_left(const Word& w) {
  TripleSum out;
  for (const auto& [p, c] : deconcatenate(w))
    for (const auto& [q, d] : deconcatenate(p.first))
      add_term(out, Triple{q.first, q.second, p.second}, c * d);
  return out;
}

inline TripleSum coproduct_right(const Word& w) {
  TripleSum out;
  for (const auto& [p, c] : deconcatenate(w))
    for (const auto& [q, d] : deconcatenate(p.second))
      add_term(out, Triple{p.first, q.first, q.second}, c * d);
  return out;
}

}  // namespace detail

inline HopfReport check_hopf_axioms(const TensorWordAlgebra& H, const AntipodeFn& S = antipode) {
  HopfReport rep;
  const auto words = H.basis();
  const std::size_t N = H.truncation;
  auto fail = [&](const char* axiom, std::string what) { rep.violations.push_back({axiom, std::move(what)}); };
  auto fmt = [&](const Word& w) { return H.format(w); };

  for (const auto& w : words) {
    ++rep.checks;
    if (shuffle_product(Word{}, w) != WordSum{{w, Rational(1)}}) fail("unit", fmt(w));

    ++rep.checks;
    if (detail::coproduct_left(w) != detail::coproduct_right(w)) fail("coassociativity", fmt(w));

    ++rep.checks;
    WordSum left, right;
    for (const auto& [p, c] : deconcatenate(w)) {
      add_scaled(left, WordSum{{p.second, Rational(1)}}, c * counit(p.first));
      add_scaled(right, WordSum{{p.first, Rational(1)}}, c * counit(p.second));
    }
    if (left != WordSum{{w, Rational(1)}} || right != WordSum{{w, Rational(1)}}) fail("counit", fmt(w));

    ++rep.checks;
    WordSum sl, sr;
    for (const auto& [p, c] : deconcatenate(w)) {
      add_scaled(sl, shuffle_product(S(p.first), WordSum{{p.second, Rational(1)}}), c);
      add_scaled(sr, shuffle_product(WordSum{{p.first, Rational(1)}}, S(p.second)), c);
    }
    WordSum expected;
    add_term(expected, Word{}, counit(w));
    if (sl != expected || sr != expected) fail("antipode", fmt(w));
  }

  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > N) continue;
      auto uv = shuffle_product(u, v);
      ++rep.checks;
      if (uv != shuffle_product(v, u)) fail("commutativity", fmt(u) + "," + fmt(v));
      ++rep.checks;
      WordPairSum lhs;
      for (const auto& [w, c] : uv) add_scaled(lhs, deconcatenate(w), c);
      if (lhs != detail::shuffle_pairs(deconcatenate(u), deconcatenate(v)))
        fail("bialgebra", fmt(u) + "," + fmt(v));
      for (const auto& t : words) {
        if (u.size() + v.size() + t.size() > N) continue;
        ++rep.checks;
        WordSum a = shuffle_product(uv, WordSum{{t, Rational(1)}});
        WordSum b = shuffle_product(WordSum{{u, Rational(1)}}, shuffle_product(v, t));
        if (a != b) fail("associativity", fmt(u) + "," + fmt(v) + "," + fmt(t));
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Groupoid bookkeeping: _target H _source is the coordinate ring of paths
// from `source` to `target`.

struct PathSpace {
  std::string target;
  std::string source;
  friend bool operator==(const PathSpace&, const PathSpace&) = default;
};

struct Cocomposition {
  PathSpace left;   // _target H _via
  PathSpace right;  // _via H _source
  WordPairSum terms;
};

/// _ζH_ξ -> _ζH_η ⊗ _ηH_ξ, prefix into the left factor.
inline Cocomposition cocomposition(const TensorWordAlgebra& H, const PathSpace& space, const std::string& via,
                                   const Word& w) {
  if (!H.contains(w)) throw TruncationExceeded("word " + H.format(w) + " not in algebra");
  return {{space.target, via}, {via, space.source}, deconcatenate(w)};
}

/// Counit of _xH_x: the empty word maps to 1, everything else to 0.
inline Rational counit_at(const PathSpace& space, const Word& w) {
  if (space.target != space.source)
    throw std::invalid_argument("counit only exists on loop spaces _xH_x");
  return counit(w);
}

struct LabeledTriple {
  PathSpace first, second, third;
  detail::TripleSum terms;
  friend bool operator==(const LabeledTriple& a, const LabeledTriple& b) {
    return a.first == b.first && a.second == b.second && a.third == b.third && a.terms == b.terms;
  }
};

/// Both ways of splitting _aH_d through b then c: (Δ_b ⊗ id)∘Δ_c and
/// (id ⊗ Δ_c)∘Δ_b.
inline std::pair<LabeledTriple, LabeledTriple> cocomposition_twice(const TensorWordAlgebra& H,
                                                                   const PathSpace& space,
                                                                   const std::string& b,
                                                                   const std::string& c,
                                                                   const Word& w) {
  LabeledTriple lhs, rhs;
  auto outer_c = cocomposition(H, space, c, w);
  for (const auto& [p, x] : outer_c.terms) {
    auto inner = cocomposition(H, outer_c.left, b, p.first);
    lhs.first = inner.left;
    lhs.second = inner.right;
    lhs.third = outer_c.right;
    for (const auto& [q, y] : inner.terms)
      add_term(lhs.terms, detail::Triple{q.first, q.second, p.second}, x * y);
  }
  auto outer_b = cocomposition(H, space, b, w);
  for (const auto& [p, x] : outer_b.terms) {
    auto inner = cocomposition(H, outer_b.right, c, p.second);
    rhs.first = outer_b.left;
    rhs.second = inner.left;
    rhs.third = inner.right;
    for (const auto& [q, y] : inner.terms)
      add_term(rhs.terms, detail::Triple{p.first, q.first, q.second}, x * y);
  }
  return {lhs, rhs};
}

/// Coassociativity of cocomposition across vertices d <- c <- b <- a, for
/// every word up to the truncation.
inline HopfReport check_cocomposition(const TensorWordAlgebra& H, const std::string& a, const std::string& b,
                                      const std::string& c, const std::string& d) {
  HopfReport rep;
  for (const auto& w : H.basis()) {
    ++rep.checks;
    auto [l, r] = cocomposition_twice(H, {d, a}, c, b, w);
    if (!(l == r)) rep.violations.push_back({"cocomposition", H.format(w)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Characters (points of the truncated group) and convolution.

/// Linear functional on the truncated algebra, given on basis words.
using Functional = std::map<Word, Rational>;

inline Rational evaluate(const Functional& f, const Word& w) {
  auto it = f.find(w);
  return it == f.end() ? Rational(0) : it->second;
}

/// (f * g)(w) = Σ f(prefix) g(suffix)
inline Functional convolve(const TensorWordAlgebra& H, const Functional& f, const Functional& g) {
  Functional out;
  for (const auto& w : H.basis()) {
    Rational v;
    for (const auto& [p, c] : deconcatenate(w)) v += c * evaluate(f, p.first) * evaluate(g, p.second);
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

inline Functional counit_functional() { return Functional{{Word{}, Rational(1)}}; }

/// f ∘ S
inline Functional convolution_inverse(const TensorWordAlgebra& H, const Functional& f) {
  Functional out;
  for (const auto& w : H.basis()) {
    Rational v;
    for (const auto& [u, c] : antipode(w)) v += c * evaluate(f, u);
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

/// f(u ⧢ v) = f(u) f(v) whenever |u| + |v| <= N, and f(∅) = 1.
inline bool is_character(const TensorWordAlgebra& H, const Functional& f) {
  if (evaluate(f, Word{}) != Rational(1)) return false;
  const auto words = H.basis();
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > H.truncation) continue;
      Rational lhs;
      for (const auto& [w, c] : shuffle_product(u, v)) lhs += c * evaluate(f, w);
      if (lhs != evaluate(f, u) * evaluate(f, v)) return false;
    }
  return true;
}

/// exp(Σ c_i x_i): w ↦ c_{w_1}···c_{w_n} / n!. A character of the shuffle algebra.
inline Functional exponential_character(const TensorWordAlgebra& H, const std::vector<Rational>& constants) {
  if (constants.size() != H.letter_count())
    throw std::invalid_argument("one constant per letter expected");
  Functional out;
  for (const auto& w : H.basis()) {
    Rational v(1);
    for (std::size_t k = 0; k < w.size(); ++k) v = v * constants[w[k]] / Rational(static_cast<long>(k + 1));
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

/// Left translation (χ ⊗ id)∘Δ: an algebra automorphism of the shuffle
/// algebra when χ is a character.
inline WordSum left_translate(const Functional& chi, const Word& w) {
  WordSum out;
  for (const auto& [p, c] : deconcatenate(w)) add_term(out, p.second, c * evaluate(chi, p.first));
  return out;
}

// ---------------------------------------------------------------------------
// Finite levels

/// Coordinate ring of the quotient by the n-th step of the descending central
/// series: words of length < n. Requires 1 <= n <= N + 1.
inline TensorWordAlgebra length_quotient(const TensorWordAlgebra& H, std::size_t n) {
  if (n < 1 || n > H.truncation + 1)
    throw std::invalid_argument("length_quotient level must lie in [1, N+1]");
  return TensorWordAlgebra{H.letters, n - 1};
}

}  // namespace pathring
