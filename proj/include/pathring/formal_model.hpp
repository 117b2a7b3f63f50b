#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pathring/cdga.hpp"

namespace pathring {

/// Q ⊕ H^1[-1] with zero differential and zero products of degree-1
/// elements, together with its inclusion into the source algebra.
struct FormalModel {
  CDGA model;
  /// inclusion[i] is the image of model basis element i, in global
  /// coordinates of the source algebra.
  std::vector<SparseVector> inclusion;
  std::vector<std::string> h1_letters;

  std::size_t letter_count() const { return h1_letters.size(); }
};

/// How the degree-1 cocycles are walked when picking the splitting of H^1.
/// LowestPivot keeps the earliest cocycle basis vectors (the default);
/// HighestPivot walks them in reverse, giving a different but equally valid
/// splitting.
enum class SplittingRule { LowestPivot, HighestPivot };

inline CDGA make_formal_cdga(const std::string& unit_name, const std::vector<std::string>& letters) {
  CDGA::Builder b;
  b.basis(0, {unit_name}).unit(unit_name);
  if (!letters.empty()) b.basis(1, letters);
  return b.build();
}

/// A formal model on m letters named a0, a1, ... (or the given names),
/// included into itself by the identity.
inline FormalModel free_formal_model(std::size_t m) {
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < m; ++i) letters.push_back("a" + std::to_string(i));
  FormalModel f{make_formal_cdga("1", letters), {}, letters};
  for (std::size_t i = 0; i <= m; ++i) f.inclusion.push_back(unit_vector(i));
  return f;
}

/// True when the inclusion induces isomorphisms on H^0 and H^1 and kills no
/// other cohomology; assumes A is valid.
inline bool is_quasi_isomorphism(const FormalModel& M, const CDGA& A) {
  const auto& S = A.space();
  if (M.inclusion.size() != M.model.dimension()) return false;
  if (cohomology(A, 0).dimension != 1 || M.inclusion[M.model.unit()] != unit_vector(A.unit()))
    return false;
  for (int i = 2; i <= A.max_degree(); ++i)
    if (cohomology(A, i).dimension != 0) return false;
  SparseMatrix in = A.differential_matrix(0);
  SparseMatrix out = A.differential_matrix(1);
  std::vector<SparseVector> images;
  for (std::size_t k = 1; k < M.inclusion.size(); ++k) {
    const auto& v = M.inclusion[k];
    if (S.homogeneous_degree(v) != 1) return false;
    auto local = S.to_local(v, 1);
    if (!out.apply(local).empty()) return false;
    images.push_back(local);
  }
  auto boundaries = image_basis(in);
  auto cocycles = kernel_basis(out);
  QuotientBasis h1(S.dimension(1), boundaries, cocycles);
  if (h1.dimension() != images.size()) return false;
  Echelon e;
  for (const auto& b : boundaries) e.insert(b);
  for (const auto& v : images)
    if (!e.insert(v)) return false;
  return true;
}

inline FormalModel formal_model(const CDGA& A, SplittingRule rule = SplittingRule::LowestPivot) {
  require_valid(A);
  const auto& S = A.space();
  if (cohomology(A, 0).dimension != 1) throw NotConnective("H^0 is not one-dimensional");
  for (int i = 2; i <= A.max_degree(); ++i)
    if (auto h = cohomology(A, i); h.dimension != 0)
      throw NotCurveLike("H^" + std::to_string(i) + " has dimension " + std::to_string(h.dimension));

  auto cocycles = kernel_basis(A.differential_matrix(1));
  if (rule == SplittingRule::HighestPivot) std::reverse(cocycles.begin(), cocycles.end());
  QuotientBasis h1(S.dimension(1), image_basis(A.differential_matrix(0)), cocycles);

  std::vector<SparseVector> reps;
  for (const auto& r : h1.representatives()) reps.push_back(S.to_global(r, 1));

  // Products of the chosen cocycles must be coboundaries for the inclusion
  // to be multiplicative up to homotopy.
  if (S.dimension(2) > 0) {
    Echelon exact2;
    for (const auto& b : image_basis(A.differential_matrix(1))) exact2.insert(b);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i; j < reps.size(); ++j) {
        auto p = A.multiply(reps[i], reps[j]);
        if (!p.empty() && !exact2.contains(S.to_local(p, 2)))
          throw NonVanishingProducts("product of H^1 representatives " + std::to_string(i) + " and " +
                                     std::to_string(j) + " is not exact");
      }
  }

  const std::string unit_name = S.name(A.unit());
  std::vector<std::string> letters;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& r = reps[k];
    std::string name;
    if (r.size() == 1 && r.begin()->second == Rational(1)) {
      name = S.name(r.begin()->first);
    } else {
      name = "h" + std::to_string(k);
    }
    while (name == unit_name || std::find(letters.begin(), letters.end(), name) != letters.end())
      name += "'";
    letters.push_back(name);
  }

  FormalModel M{make_formal_cdga(unit_name, letters), {}, letters};
  M.inclusion.push_back(unit_vector(A.unit()));
  for (auto& r : reps) M.inclusion.push_back(r);
  if (!is_quasi_isomorphism(M, A))
    throw NotCurveLike("constructed inclusion is not a quasi-isomorphism");
  return M;
}

/// Augmentations of a formal model: exactly one, since degree 0 is spanned
/// by the unit.
inline std::vector<Augmentation> augmentations_of_formal_model(const FormalModel& M) {
  return {unit_augmentation(M.model, "unit")};
}

}  // namespace pathring
