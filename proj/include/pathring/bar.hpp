#pragma once

// Two-sided reduced bar complex B(Q_eta, A, Q_xi) of an augmented cdga,
// truncated by word length. Sign conventions are documented in signs.hpp.

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pathring/cdga.hpp"
#include "pathring/errors.hpp"
#include "pathring/signs.hpp"
#include "pathring/sparse.hpp"
#include "pathring/words.hpp"

namespace pathring {

/// Basis of the augmentation ideal Ā = ker(xi): one letter per non-unit basis
/// element e of A, represented by e - xi(e)·1. Words containing the unit are
/// degenerate and never appear.
struct ReducedLetters {
  std::vector<std::size_t> source;         // basis index in A
  std::vector<int> degree;                 // |e|
  std::vector<SparseVector> representative;  // e - xi(e)·1, global coordinates of A
  std::vector<std::string> names;
  std::map<std::size_t, Letter> letter_of;  // basis index in A -> letter

  std::size_t size() const { return source.size(); }

  /// Coordinates in Ā of an element of A (drop the unit component).
  std::vector<std::pair<Letter, Rational>> project(const SparseVector& v) const {
    std::vector<std::pair<Letter, Rational>> out;
    for (const auto& [i, x] : v)
      if (auto it = letter_of.find(i); it != letter_of.end()) out.emplace_back(it->second, x);
    return out;
  }

  /// Number of letters in each degree.
  std::size_t count_in_degree(int d) const {
    std::size_t n = 0;
    for (int x : degree) n += (x == d);
    return n;
  }
};

inline ReducedLetters reduce_letters(const CDGA& A, const Augmentation& xi) {
  require_valid(A, xi);
  ReducedLetters L;
  const auto& S = A.space();
  for (std::size_t i = 0; i < A.dimension(); ++i) {
    if (i == A.unit()) continue;
    SparseVector rep = unit_vector(i);
    if (S.degree(i) == 0) axpy(rep, -xi.at(i), unit_vector(A.unit()));
    L.letter_of.emplace(i, static_cast<Letter>(L.source.size()));
    L.source.push_back(i);
    L.degree.push_back(S.degree(i));
    L.representative.push_back(std::move(rep));
    L.names.push_back(S.name(i));
  }
  return L;
}

struct BarOptions {
  std::size_t truncation = 3;
  std::size_t basis_cap = 1'000'000;
};

/// Cohomology of the bar complex in one degree; representatives are sums of
/// words and `basis` maps degree-local word vectors to coordinates.
struct BarCohomology {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<WordSum> representatives;
  std::shared_ptr<const QuotientBasis> basis;
};

class BarComplex {
 public:
  BarComplex(CDGA source, Augmentation left, Augmentation right, BarOptions opt = {})
      : source_(std::move(source)), left_(std::move(left)), right_(std::move(right)), opt_(opt) {
    require_valid(source_);
    require_valid(source_, left_);
    letters_ = reduce_letters(source_, right_);
    enumerate_words();
    assemble_differential();
    if (!differential_squares_to_zero())
      throw DifferentialSquareNonzero("total bar differential does not square to zero");
  }

  const CDGA& source() const { return source_; }
  const Augmentation& left_augmentation() const { return left_; }
  const Augmentation& right_augmentation() const { return right_; }
  std::size_t truncation() const { return opt_.truncation; }
  const ReducedLetters& letters() const { return letters_; }

  int word_degree(const Word& w) const {
    int d = 0;
    for (Letter l : w) d += static_cast<int>(signs::shifted_degree(letters_.degree[l]));
    return d;
  }

  /// Degrees with a nonzero basis, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [d, ws] : basis_) out.push_back(d);
    return out;
  }
  const std::vector<Word>& basis(int degree) const {
    static const std::vector<Word> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
  }
  std::size_t total_dimension() const { return index_.size(); }

  /// Position of w within basis(word_degree(w)).
  std::size_t index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::out_of_range("word not in bar basis");
    return it->second;
  }

  /// D: B^k -> B^{k+1} with degree-local indices.
  SparseMatrix differential(int k) const {
    auto it = d_.find(k);
    if (it != d_.end()) return it->second;
    return SparseMatrix(basis(k + 1).size(), basis(k).size());
  }

  /// D applied to a single word (unnormalized terms, projected to Ā).
  WordSum apply(const Word& w) const {
    WordSum out;
    const std::size_t n = w.size();
    long prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& rep = letters_.representative[w[i]];
      const int deg_i = letters_.degree[w[i]];
      Rational sgn_int(signs::bar_internal(prefix));
      for (const auto& [l, c] : letters_.project(source_.d(rep))) {
        Word v = w;
        v[i] = l;
        add_term(out, v, sgn_int * c);
      }
      if (i + 1 < n) {
        Rational sgn_merge(signs::bar_merge(prefix, deg_i));
        auto prod = source_.multiply(rep, letters_.representative[w[i + 1]]);
        for (const auto& [l, c] : letters_.project(prod)) {
          Word v(w.begin(), w.begin() + i);
          v.push_back(l);
          v.insert(v.end(), w.begin() + i + 2, w.end());
          add_term(out, v, sgn_merge * c);
        }
      }
      if (i + 1 < n) prefix += signs::shifted_degree(deg_i);
    }
    if (n > 0) {
      Rational eta = left_(letters_.representative[w.front()]);
      add_term(out, Word(w.begin() + 1, w.end()), eta * Rational(signs::bar_left_end()));
      Rational xi = right_(letters_.representative[w.back()]);
      add_term(out, Word(w.begin(), w.end() - 1), xi * Rational(signs::bar_right_end(prefix)));
    }
    return out;
  }

  SparseVector to_local(const WordSum& s, int degree) const {
    SparseVector v;
    for (const auto& [w, c] : s) {
      if (word_degree(w) != degree) throw std::invalid_argument("word sum not homogeneous");
      v.emplace(index_of(w), c);
    }
    return v;
  }
  WordSum from_local(const SparseVector& v, int degree) const {
    WordSum s;
    const auto& ws = basis(degree);
    for (const auto& [i, c] : v) s.emplace(ws.at(i), c);
    return s;
  }

  /// Every stored D column for a length-n word only has rows of length n or n-1.
  bool respects_length_filtration() const {
    for (const auto& [k, m] : d_) {
      const auto& src = basis(k);
      const auto& dst = basis(k + 1);
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, c] : m.column(j)) {
          std::size_t a = src[j].size(), b = dst[i].size();
          if (b != a && b + 1 != a) return false;
        }
    }
    return true;
  }

  bool differential_squares_to_zero() const {
    for (const auto& [k, m] : d_) {
      auto next = d_.find(k + 1);
      if (next == d_.end()) continue;
      if (!(next->second * m).is_zero()) return false;
    }
    return true;
  }

  BarCohomology cohomology(int i) const {
    BarCohomology h;
    h.degree = i;
    h.basis = std::make_shared<QuotientBasis>(
        complex_cohomology(basis(i).size(), differential(i - 1), differential(i)));
    h.dimension = h.basis->dimension();
    for (const auto& r : h.basis->representatives()) h.representatives.push_back(from_local(r, i));
    return h;
  }

  /// dim F_n H^0 - dim F_{n-1} H^0 for n = 0..N, where F_n is spanned by words
  /// of length <= n.
  std::vector<std::size_t> h0_length_profile() const {
    const auto& ws = basis(0);
    SparseMatrix full = differential(0);
    Echelon boundaries;
    for (const auto& b : image_basis(differential(-1))) boundaries.insert(b);
    const std::size_t base_rank = boundaries.rank();
    std::vector<std::size_t> profile;
    std::size_t previous = 0;
    for (std::size_t n = 0; n <= opt_.truncation; ++n) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < ws.size(); ++j)
        if (ws[j].size() <= n) cols.push_back(j);
      SparseMatrix sub(full.rows(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) sub.set_column(c, full.column(cols[c]));
      Echelon span = boundaries;
      for (const auto& z : kernel_basis(sub)) {
        SparseVector lifted;
        for (const auto& [c, x] : z) lifted.emplace(cols[c], x);
        span.insert(lifted);
      }
      std::size_t dim = span.rank() - base_rank;
      profile.push_back(dim - previous);
      previous = dim;
    }
    return profile;
  }

 private:
  void enumerate_words() {
    const std::size_t m = letters_.size();
    const std::size_t N = opt_.truncation;
    double estimate = 0, power = 1;
    for (std::size_t n = 0; n <= N; ++n) {
      estimate += power;
      power *= static_cast<double>(m);
    }
    if (estimate > static_cast<double>(opt_.basis_cap))
      throw BasisCapExceeded("bar basis would have ~" + std::to_string(static_cast<long double>(estimate)) +
                             " words, above the cap of " + std::to_string(opt_.basis_cap));
    std::vector<Word> layer{Word{}};
    for (std::size_t n = 0; n <= N; ++n) {
      std::vector<Word> next;
      for (const auto& w : layer) {
        auto& bucket = basis_[word_degree(w)];
        index_.emplace(w, bucket.size());
        bucket.push_back(w);
        if (n < N)
          for (Letter l = 0; l < m; ++l) {
            Word v = w;
            v.push_back(l);
            next.push_back(std::move(v));
          }
      }
      layer = std::move(next);
    }
  }

  void assemble_differential() {
    for (const auto& [k, ws] : basis_) {
      SparseMatrix m(basis(k + 1).size(), ws.size());
      bool any = false;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        WordSum img = apply(ws[j]);
        if (img.empty()) continue;
        SparseVector col;
        for (const auto& [w, c] : img) col.emplace(index_of(w), c);
        m.set_column(j, std::move(col));
        any = true;
      }
      if (any || basis_.count(k + 1)) d_.emplace(k, std::move(m));
    }
  }

  CDGA source_;
  Augmentation left_, right_;
  BarOptions opt_;
  ReducedLetters letters_;
  std::map<int, std::vector<Word>> basis_;
  std::map<Word, std::size_t> index_;
  std::map<int, SparseMatrix> d_;
};

inline BarComplex build_bar(const CDGA& A, const Augmentation& xi, const Augmentation& eta,
                            BarOptions opt = {}) {
  // xi acts on the right (source point), eta on the left (target point).
  return BarComplex(A, eta, xi, opt);
}

inline BarCohomology bar_cohomology(const BarComplex& B, int i) { return B.cohomology(i); }

/// Shuffle product of bar words with Koszul signs on shifted degrees.
inline WordSum bar_shuffle(const ReducedLetters& L, const Word& u, const Word& v) {
  WordSum out;
  Word acc;
  acc.reserve(u.size() + v.size());
  // crossings accumulates |s x|·|s y| for each letter y of v placed before x of u.
  auto rec = [&](auto&& self, std::size_t i, std::size_t j, long crossings) -> void {
    if (i == u.size() && j == v.size()) {
      add_term(out, acc, Rational(signs::shuffle(crossings)));
      return;
    }
    if (i < u.size()) {
      acc.push_back(u[i]);
      self(self, i + 1, j, crossings);
      acc.pop_back();
    }
    if (j < v.size()) {
      long remaining = 0;
      for (std::size_t k = i; k < u.size(); ++k) remaining += signs::shifted_degree(L.degree[u[k]]);
      acc.push_back(v[j]);
      self(self, i, j + 1, crossings + remaining * signs::shifted_degree(L.degree[v[j]]));
      acc.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

inline WordSum bar_shuffle(const ReducedLetters& L, const WordSum& x, const WordSum& y) {
  WordSum out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y)
      for (const auto& [w, c] : bar_shuffle(L, u, v)) add_term(out, w, a * b * c);
  return out;
}

// ---------------------------------------------------------------------------
// Connectedness and concentration

struct DegreeDimension {
  int degree;
  std::size_t dimension;
};

struct ConcentrationReport {
  std::size_t truncation = 0;
  std::vector<DegreeDimension> dimensions;  // every degree with a nonzero bar basis
  std::vector<std::size_t> h0_length_profile;
  bool pass = true;
};

inline ConcentrationReport verify_concentration(const BarComplex& B) {
  ConcentrationReport r;
  r.truncation = B.truncation();
  for (int k : B.degrees()) {
    auto h = B.cohomology(k);
    r.dimensions.push_back({k, h.dimension});
    if (k != 0 && h.dimension != 0) r.pass = false;
  }
  r.h0_length_profile = B.h0_length_profile();
  return r;
}

struct ConnectednessReport {
  std::size_t h0_dimension = 0;
  bool pass = false;
};

inline ConnectednessReport verify_connectedness(const BarComplex& B) {
  ConnectednessReport r;
  r.h0_dimension = B.cohomology(0).dimension;
  r.pass = r.h0_dimension >= 1;
  return r;
}

inline std::string format_word(const ReducedLetters& L, const Word& w) { return format_word(L.names, w); }

}  // namespace pathring
