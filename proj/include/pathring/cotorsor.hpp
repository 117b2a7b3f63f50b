#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathring/errors.hpp"
#include "pathring/hopf.hpp"
#include "pathring/sparse.hpp"

namespace pathring {

/// A commutative algebra P with a coaction P -> H ⊗ P, presented by tables
/// over a basis of words (P is modelled on the same word space as H).
struct CotorsorData {
  std::string name;
  std::size_t truncation = 0;
  std::vector<Word> basis;
  /// p·q for basis pairs with |p| + |q| <= truncation.
  std::map<std::pair<Word, Word>, WordSum> product;
  /// ρ(p) = Σ h ⊗ p'
  std::map<Word, WordPairSum> coaction;

  bool in_basis(const Word& w) const { return coaction.count(w) != 0; }
};

namespace detail {

inline std::map<std::pair<Word, Word>, WordSum> shuffle_table(const std::vector<Word>& basis, std::size_t N) {
  std::map<std::pair<Word, Word>, WordSum> table;
  for (const auto& u : basis)
    for (const auto& v : basis)
      if (u.size() + v.size() <= N) table.emplace(std::make_pair(u, v), shuffle_product(u, v));
  return table;
}

}  // namespace detail

/// P = H with coaction Δ: the loop space torsor itself.
inline CotorsorData trivial_cotorsor(const TensorWordAlgebra& H) {
  CotorsorData P{"trivial", H.truncation, H.basis(), {}, {}};
  P.product = detail::shuffle_table(P.basis, P.truncation);
  for (const auto& w : P.basis) P.coaction.emplace(w, deconcatenate(w));
  return P;
}

/// P = H with coaction (L_χ^{-1} ⊗ L_χ)∘Δ, where χ = exp(Σ c_i x_i) and
/// L_χ = (χ ⊗ id)∘Δ translates each letter by its constant.
inline CotorsorData translated_cotorsor(const TensorWordAlgebra& H, const std::vector<Rational>& constants) {
  CotorsorData P{"translated", H.truncation, H.basis(), {}, {}};
  P.product = detail::shuffle_table(P.basis, P.truncation);
  Functional chi = exponential_character(H, constants);
  Functional chi_inv = convolution_inverse(H, chi);
  for (const auto& w : P.basis) {
    WordPairSum rho;
    for (const auto& [p, c] : deconcatenate(w))
      for (const auto& [l, a] : left_translate(chi_inv, p.first))
        for (const auto& [r, b] : left_translate(chi, p.second)) add_term(rho, std::make_pair(l, r), c * a * b);
    P.coaction.emplace(w, std::move(rho));
  }
  return P;
}

/// The zero algebra.
inline CotorsorData zero_cotorsor(std::size_t N) { return CotorsorData{"zero", N, {}, {}, {}}; }

struct CotorsorReport {
  bool coassociative = true;
  bool counital = true;
  bool galois_isomorphism = true;
  bool nonzero = true;
  std::size_t galois_dimension = 0;
  std::size_t galois_rank = 0;
  std::vector<std::string> failures;

  bool pass() const { return coassociative && counital && galois_isomorphism && nonzero; }
};

inline CotorsorReport verify_cotorsor(const CotorsorData& P, const TensorWordAlgebra& H) {
  if (P.truncation != H.truncation)
    throw TruncationMismatch("cotorsor truncation " + std::to_string(P.truncation) +
                             " differs from algebra truncation " + std::to_string(H.truncation));
  CotorsorReport rep;
  auto coact = [&](const Word& p) -> const WordPairSum& {
    auto it = P.coaction.find(p);
    if (it == P.coaction.end()) throw std::invalid_argument("coaction undefined on " + H.format(p));
    return it->second;
  };

  // (i) (Δ ⊗ id)ρ = (id ⊗ ρ)ρ and (ε ⊗ id)ρ = id
  for (const auto& p : P.basis) {
    detail::TripleSum lhs, rhs;
    WordSum counit_side;
    for (const auto& [hp, c] : coact(p)) {
      for (const auto& [split, d] : deconcatenate(hp.first))
        add_term(lhs, detail::Triple{split.first, split.second, hp.second}, c * d);
      for (const auto& [inner, d] : coact(hp.second))
        add_term(rhs, detail::Triple{hp.first, inner.first, inner.second}, c * d);
      add_term(counit_side, hp.second, c * counit(hp.first));
    }
    if (lhs != rhs) {
      rep.coassociative = false;
      rep.failures.push_back("coassociativity " + H.format(p));
    }
    if (counit_side != WordSum{{p, Rational(1)}}) {
      rep.counital = false;
      rep.failures.push_back("counit " + H.format(p));
    }
  }

  // (ii) Galois map P ⊗ P -> H ⊗ P, p ⊗ q ↦ ρ(p)·(1 ⊗ q), on total length <= N.
  std::vector<std::pair<Word, Word>> domain;
  for (const auto& p : P.basis)
    for (const auto& q : P.basis)
      if (p.size() + q.size() <= P.truncation) domain.emplace_back(p, q);
  std::map<std::pair<Word, Word>, std::size_t> codomain;
  for (const auto& h : H.basis())
    for (const auto& q : P.basis)
      if (h.size() + q.size() <= P.truncation) codomain.emplace(std::make_pair(h, q), codomain.size());
  SparseMatrix galois(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const auto& [p, q] = domain[j];
    SparseVector col;
    for (const auto& [hp, c] : coact(p)) {
      auto prod = P.product.find({hp.second, q});
      if (prod == P.product.end()) throw std::invalid_argument("product table incomplete");
      for (const auto& [r, d] : prod->second) {
        auto idx = codomain.find({hp.first, r});
        if (idx == codomain.end()) throw std::invalid_argument("Galois map leaves the truncation");
        axpy(col, c * d, unit_vector(idx->second));
      }
    }
    galois.set_column(j, std::move(col));
  }
  rep.galois_dimension = domain.size();
  rep.galois_rank = rank(galois);
  rep.galois_isomorphism = domain.size() == codomain.size() && rep.galois_rank == domain.size();
  if (!rep.galois_isomorphism) rep.failures.push_back("Galois map is not bijective");

  // (iii) P is nonzero: the unit word is a basis element.
  rep.nonzero = !P.basis.empty();
  if (!rep.nonzero) rep.failures.push_back("P is the zero algebra");
  return rep;
}

// ---------------------------------------------------------------------------

enum class KunnethClaim { NoClaim, Vanishes, Contradiction };

struct KunnethRow {
  int degree;
  std::size_t b_dimension;
  std::size_t p_dimension;
  KunnethClaim claim;
};

struct KunnethVerdict {
  std::vector<KunnethRow> rows;
  /// True when every degree forced to vanish does vanish.
  bool consistent() const {
    for (const auto& r : rows)
      if (r.claim == KunnethClaim::Contradiction) return false;
    return true;
  }
};

/// For i != 0 with H^i(B) = 0, H^i(B) ⊗ H^0(P) ≅ H^i(P) ⊗ H^0(P) and
/// H^0(P) != 0 force H^i(P) = 0.
inline KunnethVerdict concentration_from_kunneth(const std::map<int, std::size_t>& b_dims,
                                                 const std::map<int, std::size_t>& p_dims) {
  auto get = [](const std::map<int, std::size_t>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? std::size_t{0} : it->second;
  };
  if (get(p_dims, 0) == 0) throw ZeroH0("H^0(P) vanishes; the Kunneth argument needs it nonzero");
  std::map<int, bool> degrees;
  for (const auto& [k, v] : b_dims) degrees[k] = true;
  for (const auto& [k, v] : p_dims) degrees[k] = true;
  KunnethVerdict out;
  for (const auto& [k, unused] : degrees) {
    if (k == 0) continue;
    std::size_t b = get(b_dims, k), p = get(p_dims, k);
    KunnethClaim claim = KunnethClaim::NoClaim;
    if (b == 0) claim = (p == 0) ? KunnethClaim::Vanishes : KunnethClaim::Contradiction;
    out.rows.push_back({k, b, p, claim});
  }
  return out;
}

}  // namespace pathring
