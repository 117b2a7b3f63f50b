#pragma once

// Free graded-commutative algebras on generators of positive degree and the
// staged replacement L(1) -> L(2) -> ... of a cdga built from them: S(n) is
// free on one closed generator, T(n) on b, c with db = c.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathring/cdga.hpp"
#include "pathring/errors.hpp"
#include "pathring/formal_model.hpp"
#include "pathring/signs.hpp"
#include "pathring/sparse.hpp"
#include "pathring/words.hpp"

namespace pathring {

/// Exponent vector in generator-creation order, trailing zeros trimmed.
using Monomial = std::vector<unsigned>;
using Polynomial = std::map<Monomial, Rational>;

struct Generator {
  std::string name;
  int degree;
  Polynomial d;
};

class FreeCDGA {
 public:
  explicit FreeCDGA(int degree_cap = 4, std::size_t basis_cap = 100'000)
      : cap_(degree_cap), basis_cap_(basis_cap) {
    if (degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  }

  int degree_cap() const { return cap_; }
  std::size_t basis_cap() const { return basis_cap_; }
  int stage() const { return stage_; }
  void set_stage(int s) { stage_ = s; }

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  /// Appends a generator; d may only involve existing generators.
  std::size_t add_generator(std::string name, int degree, Polynomial d = {}) {
    if (degree < 1) throw InvalidCDGA("generator '" + name + "' must have degree >= 1");
    for (const auto& g : gens_)
      if (g.name == name) throw InvalidCDGA("duplicate generator '" + name + "'");
    for (const auto& [m, c] : d) {
      if (m.size() > gens_.size()) throw InvalidCDGA("d(" + name + ") uses a later generator");
      if (monomial_degree(m) != degree + 1) throw InvalidCDGA("d(" + name + ") has the wrong degree");
    }
    gens_.push_back({std::move(name), degree, std::move(d)});
    cache_.clear();
    index_.clear();
    return gens_.size() - 1;
  }

  Monomial generator_monomial(std::size_t i) const {
    Monomial m(i + 1, 0);
    m[i] = 1;
    return m;
  }

  int monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * gens_.at(i).degree;
    return d;
  }

  bool odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }

  /// Monomials of total degree k, graded-lexicographic (descending exponents
  /// in generator order).
  const std::vector<Monomial>& basis(int k) const {
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    std::vector<Monomial> out;
    if (k >= 0) {
      Monomial cur(gens_.size(), 0);
      auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (remaining == 0) {
          out.push_back(trim(cur));
          if (out.size() > basis_cap_)
            throw BasisCapExceeded("more than " + std::to_string(basis_cap_) + " monomials in degree " +
                                   std::to_string(k));
          return;
        }
        if (i == gens_.size()) return;
        int deg = gens_[i].degree;
        int max_e = remaining / deg;
        if (odd(i)) max_e = std::min(max_e, 1);
        for (int e = max_e; e >= 0; --e) {
          cur[i] = static_cast<unsigned>(e);
          self(self, i + 1, remaining - e * deg);
        }
        cur[i] = 0;
      };
      rec(rec, 0, k);
    }
    for (std::size_t i = 0; i < out.size(); ++i) index_.emplace(out[i], i);
    return cache_.emplace(k, std::move(out)).first->second;
  }

  std::size_t dimension(int k) const { return basis(k).size(); }

  std::size_t index_of(const Monomial& m) const {
    basis(monomial_degree(m));
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial not in basis");
    return it->second;
  }

  /// m1·m2 rewritten in generator order: nullopt if an odd generator repeats.
  std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) const {
    Monomial out(std::max(a.size(), b.size()), 0);
    long crossings = 0;
    std::size_t odd_after = 0;  // odd generators of a with index > current
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && odd(i)) ++odd_after;
    for (std::size_t i = 0; i < out.size(); ++i) {
      unsigned ea = i < a.size() ? a[i] : 0;
      unsigned eb = i < b.size() ? b[i] : 0;
      if (ea && odd(i)) --odd_after;
      if (odd(i) && ea + eb > 1) return std::nullopt;
      if (eb && odd(i)) crossings += static_cast<long>(odd_after);
      out[i] = ea + eb;
    }
    return std::make_pair(signs::power_of_minus_one(crossings), trim(out));
  }

  Polynomial multiply(const Polynomial& x, const Polynomial& y) const {
    Polynomial out;
    for (const auto& [a, c] : x)
      for (const auto& [b, e] : y)
        if (auto p = multiply(a, b)) add_term(out, p->second, c * e * Rational(p->first));
    return out;
  }

  Polynomial d(const Monomial& m) const {
    Polynomial out;
    int prefix_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Monomial head(m.begin(), m.begin() + static_cast<long>(i) + 1);
      head[i] -= 1;
      Monomial tail(m.size(), 0);
      for (std::size_t j = i + 1; j < m.size(); ++j) tail[j] = m[j];
      Rational coeff(static_cast<long>(m[i]) * signs::power_of_minus_one(prefix_degree));
      Polynomial term = multiply(multiply(Polynomial{{trim(head), coeff}}, gens_[i].d), Polynomial{{trim(tail), Rational(1)}});
      for (const auto& [p, c] : term) add_term(out, p, c);
      prefix_degree += static_cast<int>(m[i]) * gens_[i].degree;
    }
    return out;
  }

  Polynomial d(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p) add_scaled(out, d(m), c);
    return out;
  }

  /// d: degree k -> degree k+1 in monomial-basis coordinates.
  SparseMatrix differential_matrix(int k) const {
    const auto& src = basis(k);
    SparseMatrix out(basis(k + 1).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) out.set_column(j, to_local(d(src[j])));
    return out;
  }

  SparseVector to_local(const Polynomial& p) const {
    SparseVector v;
    for (const auto& [m, c] : p) v.emplace(index_of(m), c);
    return v;
  }
  Polynomial from_local(const SparseVector& v, int k) const {
    Polynomial p;
    for (const auto& [i, c] : v) p.emplace(basis(k).at(i), c);
    return p;
  }

  /// d(d(m)) = 0 for every monomial of degree <= cap.
  bool differential_squares_to_zero() const {
    for (int k = 0; k <= cap_; ++k)
      for (const auto& m : basis(k))
        if (!d(d(m)).empty()) return false;
    return true;
  }

  /// H^k for 0 <= k <= cap.
  QuotientBasis cohomology(int k) const {
    if (k < 0 || k > cap_) throw std::out_of_range("cohomology degree outside the cap");
    SparseMatrix in = k == 0 ? SparseMatrix(dimension(0), 0) : differential_matrix(k - 1);
    return complex_cohomology(dimension(k), in, differential_matrix(k));
  }

  std::string format(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += gens_[i].name;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string format(const Polynomial& p) const {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : p) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + format(m);
    }
    return s;
  }

  static Monomial trim(Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
  }

 private:
  int cap_;
  std::size_t basis_cap_;
  int stage_ = 0;
  std::vector<Generator> gens_;
  mutable std::map<int, std::vector<Monomial>> cache_;
  mutable std::map<Monomial, std::size_t> index_;
};

inline FreeCDGA elementary_S(int n, int degree_cap = 4) {
  if (n < 1) throw InvalidCDGA("S(n) needs n >= 1");
  FreeCDGA L(degree_cap);
  L.add_generator("a", n);
  return L;
}

inline FreeCDGA elementary_T(int n, int degree_cap = 4) {
  if (n < 1) throw InvalidCDGA("T(n) needs n >= 1");
  FreeCDGA L(degree_cap);
  std::size_t c = L.add_generator("c", n + 1);
  L.add_generator("b", n, Polynomial{{L.generator_monomial(c), Rational(1)}});
  return L;
}

// ---------------------------------------------------------------------------
// Maps to a cdga

/// A stage L(n) with its map ψ to the target: psi[i] is the image of
/// generator i, in global coordinates of the target.
struct BGStage {
  FreeCDGA algebra;
  std::vector<SparseVector> psi;
  /// Degree-1 obstruction classes that would need a degree-0 generator.
  std::size_t skipped_degree_one = 0;
};

inline SparseVector map_monomial(const FreeCDGA& L, const std::vector<SparseVector>& psi, const CDGA& target,
                                 const Monomial& m) {
  SparseVector out = unit_vector(target.unit());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) out = target.multiply(out, psi.at(i));
  (void)L;
  return out;
}

inline SparseVector map_polynomial(const FreeCDGA& L, const std::vector<SparseVector>& psi, const CDGA& target,
                                   const Polynomial& p) {
  SparseVector out;
  for (const auto& [m, c] : p) axpy(out, c, map_monomial(L, psi, target, m));
  return out;
}

struct ChainMapReport {
  bool degrees = true;       // ψ(g) has degree |g|
  bool chain = true;         // ψ(dm) = dψ(m) for monomials up to the cap
  bool multiplicative = true;  // ψ(g)^2 = 0 for odd g
  std::vector<std::string> failures;
  bool ok() const { return degrees && chain && multiplicative; }
};

inline ChainMapReport check_chain_map(const FreeCDGA& L, const std::vector<SparseVector>& psi, const CDGA& target) {
  ChainMapReport rep;
  const auto& S = target.space();
  if (psi.size() != L.generator_count()) {
    rep.degrees = false;
    rep.failures.push_back("psi has " + std::to_string(psi.size()) + " images for " +
                           std::to_string(L.generator_count()) + " generators");
    return rep;
  }
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto& g = L.generators()[i];
    if (auto d = S.homogeneous_degree(psi[i]); !psi[i].empty() && d != g.degree) {
      rep.degrees = false;
      rep.failures.push_back("psi(" + g.name + ") has the wrong degree");
    }
    if (L.odd(i) && !target.multiply(psi[i], psi[i]).empty()) {
      rep.multiplicative = false;
      rep.failures.push_back("psi(" + g.name + ")^2 != 0");
    }
  }
  for (int k = 0; k <= L.degree_cap(); ++k)
    for (const auto& m : L.basis(k)) {
      auto lhs = map_polynomial(L, psi, target, L.d(m));
      auto rhs = target.d(map_monomial(L, psi, target, m));
      if (lhs != rhs) {
        rep.chain = false;
        rep.failures.push_back("psi(d " + L.format(m) + ") != d psi(" + L.format(m) + ")");
      }
    }
  return rep;
}

namespace detail {

inline std::string cocycle_name(const GradedVectorSpace& S, const SparseVector& v, const std::string& fallback) {
  if (v.size() == 1 && v.begin()->second == Rational(1)) return S.name(v.begin()->first);
  return fallback;
}

}  // namespace detail

/// L(1): one free generator S(|z|) per element z of a basis of the
/// positive-degree cocycles of the target, with ψ(z-generator) = z.
inline BGStage bg_initial(const CDGA& target, int degree_cap = 4, std::size_t basis_cap = 100'000) {
  require_valid(target);
  const auto& S = target.space();
  BGStage st{FreeCDGA(degree_cap, basis_cap), {}, 0};
  st.algebra.set_stage(1);
  for (int k = 1; k <= std::min(target.max_degree(), degree_cap); ++k) {
    auto cocycles = kernel_basis(target.differential_matrix(k));
    for (std::size_t j = 0; j < cocycles.size(); ++j) {
      auto z = S.to_global(cocycles[j], k);
      std::string name = detail::cocycle_name(S, z, "z" + std::to_string(k) + "_" + std::to_string(j));
      st.algebra.add_generator(name, k);
      st.psi.push_back(std::move(z));
    }
  }
  return st;
}

inline BGStage bg_initial(const FormalModel& M, int degree_cap = 4, std::size_t basis_cap = 100'000) {
  return bg_initial(M.model, degree_cap, basis_cap);
}

/// One pushout step: for each degree 2 <= k <= cap, pick representatives w of
/// {w in Z^k(L) : ψ(w) exact} modulo B^k(L), solve db = ψ(w) in the target,
/// and adjoin a generator u of degree k-1 with du = w, ψ(u) = b.
inline BGStage bg_step(const BGStage& prev, const CDGA& target) {
  const FreeCDGA& L = prev.algebra;
  if (auto rep = check_chain_map(L, prev.psi, target); !rep.ok())
    throw NonChainMap(rep.failures.front());
  const auto& S = target.space();
  BGStage next = prev;
  next.algebra.set_stage(L.stage() + 1);
  next.skipped_degree_one = 0;

  struct Pair {
    int degree;
    Polynomial w;
    SparseVector b;
  };
  std::vector<Pair> pairs;
  for (int k = 1; k <= L.degree_cap(); ++k) {
    auto cocycles = kernel_basis(L.differential_matrix(k));
    if (cocycles.empty()) continue;
    // Combinations Σ x_j z_j with ψ landing in B^k(target).
    auto target_boundaries = k >= 1 ? image_basis(target.differential_matrix(k - 1)) : std::vector<SparseVector>{};
    const std::size_t r = cocycles.size();
    SparseMatrix M(S.dimension(k), r + target_boundaries.size());
    for (std::size_t j = 0; j < r; ++j)
      M.set_column(j, S.to_local(map_polynomial(L, prev.psi, target, L.from_local(cocycles[j], k)), k));
    for (std::size_t j = 0; j < target_boundaries.size(); ++j) M.set_column(r + j, target_boundaries[j]);
    std::vector<SparseVector> K;
    for (const auto& x : kernel_basis(M)) {
      SparseVector w;
      for (const auto& [j, c] : x)
        if (j < r) axpy(w, c, cocycles[j]);
      if (!w.empty()) K.push_back(std::move(w));
    }
    auto boundaries = image_basis(L.differential_matrix(k - 1));
    QuotientBasis classes(L.dimension(k), boundaries, K);
    if (k == 1) {
      next.skipped_degree_one = classes.dimension();
      continue;
    }
    for (const auto& w_local : classes.representatives()) {
      Polynomial w = L.from_local(w_local, k);
      SparseVector image = S.to_local(map_polynomial(L, prev.psi, target, w), k);
      auto b = solve(target.differential_matrix(k - 1), image);
      if (!b) throw NonChainMap("no primitive for an exact image");
      pairs.push_back({k, std::move(w), S.to_global(*b, k - 1)});
    }
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string name = "u" + std::to_string(next.algebra.stage()) + "_" + std::to_string(i);
    next.algebra.add_generator(name, pairs[i].degree - 1, pairs[i].w);
    next.psi.push_back(pairs[i].b);
  }
  if (!next.algebra.differential_squares_to_zero())
    throw DifferentialSquareNonzero("d^2 != 0 after stage " + std::to_string(next.algebra.stage()));
  if (auto rep = check_chain_map(next.algebra, next.psi, target); !rep.ok())
    throw NonChainMap(rep.failures.front());
  return next;
}

/// L(1), ..., L(stages).
inline std::vector<BGStage> bg_stages(const CDGA& target, int stages, int degree_cap = 4,
                                      std::size_t basis_cap = 100'000) {
  std::vector<BGStage> out;
  if (stages < 1) return out;
  out.push_back(bg_initial(target, degree_cap, basis_cap));
  for (int s = 2; s <= stages; ++s) out.push_back(bg_step(out.back(), target));
  return out;
}

struct AugmentationCount {
  std::size_t count = 0;
  /// Value of the augmentation on each generator (all zero).
  std::vector<Rational> witness;
};

/// Degree-0 maps L -> Q: every generator has positive degree, so the only
/// candidate sends all of them to 0; it is counted once checked against d.
inline AugmentationCount augmentation_count(const FreeCDGA& L) {
  AugmentationCount out;
  for (const auto& g : L.generators()) {
    if (g.degree <= 0) return out;
    // The unique candidate must kill the constant term of dg.
    for (const auto& [m, c] : g.d)
      if (m.empty() && !c.is_zero()) return out;
  }
  out.count = 1;
  out.witness.assign(L.generator_count(), Rational(0));
  return out;
}

}  // namespace pathring
