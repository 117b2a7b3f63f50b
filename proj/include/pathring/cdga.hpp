#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathring/errors.hpp"
#include "pathring/rational.hpp"
#include "pathring/signs.hpp"
#include "pathring/sparse.hpp"

namespace pathring {

/// Named basis of a nonnegatively graded vector space. Elements are indexed
/// globally, sorted by degree (stable within a degree), so each degree
/// occupies a contiguous index range.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;

  /// `degrees[k] = (degree, names)`; names must be unique and nonempty.
  explicit GradedVectorSpace(std::vector<std::pair<int, std::vector<std::string>>> degrees) {
    std::stable_sort(degrees.begin(), degrees.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [deg, names] : degrees) {
      if (deg < 0) throw InvalidCDGA("negative degree " + std::to_string(deg));
      for (const auto& n : names) {
        if (n.empty()) throw InvalidCDGA("empty basis name");
        if (index_.count(n)) throw InvalidCDGA("duplicate basis name '" + n + "'");
        index_.emplace(n, names_.size());
        names_.push_back(n);
        degree_.push_back(deg);
      }
    }
  }

  std::size_t dimension() const { return names_.size(); }
  int max_degree() const { return degree_.empty() ? -1 : degree_.back(); }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degree_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw InvalidCDGA("unknown basis element '" + name + "'");
    return *i;
  }

  /// Global index range [first, last) of degree d.
  std::pair<std::size_t, std::size_t> range(int d) const {
    auto lo = std::lower_bound(degree_.begin(), degree_.end(), d);
    auto hi = std::upper_bound(degree_.begin(), degree_.end(), d);
    return {static_cast<std::size_t>(lo - degree_.begin()),
            static_cast<std::size_t>(hi - degree_.begin())};
  }
  std::size_t dimension(int d) const {
    auto [a, b] = range(d);
    return b - a;
  }

  /// Restricts a global vector supported in degree d to local coordinates.
  SparseVector to_local(const SparseVector& v, int d) const {
    auto [a, b] = range(d);
    SparseVector out;
    for (const auto& [i, x] : v) {
      if (i < a || i >= b) throw InvalidCDGA("vector not homogeneous of degree " + std::to_string(d));
      out.emplace_hint(out.end(), i - a, x);
    }
    return out;
  }
  SparseVector to_global(const SparseVector& v, int d) const {
    std::size_t a = range(d).first;
    SparseVector out;
    for (const auto& [i, x] : v) out.emplace_hint(out.end(), i + a, x);
    return out;
  }

  /// Degree of a nonzero vector, or nullopt if it is zero or inhomogeneous.
  std::optional<int> homogeneous_degree(const SparseVector& v) const {
    if (v.empty()) return std::nullopt;
    int d = degree(v.begin()->first);
    if (degree(v.rbegin()->first) != d) return std::nullopt;
    return d;
  }

  std::string format(const SparseVector& v) const {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, x] : v) {
      if (!s.empty()) s += " + ";
      s += x.str() + "*" + name(i);
    }
    return s;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degree_;
  std::map<std::string, std::size_t> index_;
};

/// Finite-dimensional graded-commutative dga over Q with an explicit basis.
/// Immutable once built; construct through CDGA::Builder.
class CDGA {
 public:
  class Builder;

  const GradedVectorSpace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  std::size_t unit() const { return unit_; }
  int max_degree() const { return space_.max_degree(); }
  int degree(std::size_t i) const { return space_.degree(i); }

  const SparseVector& d(std::size_t i) const { return differential_.at(i); }

  SparseVector d(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [i, x] : v) axpy(out, x, differential_.at(i));
    return out;
  }

  /// Product of basis elements. Uses the table entry for (a, b) if present,
  /// otherwise the graded-commutative mirror of (b, a), otherwise the unit
  /// law, otherwise zero.
  SparseVector multiply(std::size_t a, std::size_t b) const {
    if (auto it = product_.find({a, b}); it != product_.end()) return it->second;
    if (auto it = product_.find({b, a}); it != product_.end()) {
      SparseVector v = it->second;
      scale(v, Rational(signs::koszul(degree(a), degree(b))));
      return v;
    }
    if (a == unit_) return unit_vector(b);
    if (b == unit_) return unit_vector(a);
    return {};
  }

  SparseVector multiply(const SparseVector& x, const SparseVector& y) const {
    SparseVector out;
    for (const auto& [i, xi] : x)
      for (const auto& [j, yj] : y) axpy(out, xi * yj, multiply(i, j));
    return out;
  }

  /// The explicitly stored product entries, in key order.
  const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& product_table() const {
    return product_;
  }

  /// Matrix of d: A^k -> A^{k+1} in local coordinates.
  SparseMatrix differential_matrix(int k) const {
    SparseMatrix m(space_.dimension(k + 1), space_.dimension(k));
    auto [a, b] = space_.range(k);
    for (std::size_t i = a; i < b; ++i) {
      if (differential_[i].empty()) continue;
      m.set_column(i - a, space_.to_local(differential_[i], k + 1));
    }
    return m;
  }

 private:
  CDGA() = default;

  GradedVectorSpace space_;
  std::size_t unit_ = 0;
  std::vector<SparseVector> differential_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> product_;
};

/// Term of a vector given by basis name.
using NamedTerm = std::pair<std::string, Rational>;

class CDGA::Builder {
 public:
  Builder& basis(int degree, std::vector<std::string> names) {
    degrees_.emplace_back(degree, std::move(names));
    return *this;
  }
  Builder& unit(std::string name) {
    unit_ = std::move(name);
    return *this;
  }
  Builder& d(std::string source, std::vector<NamedTerm> image) {
    d_.emplace_back(std::move(source), std::move(image));
    return *this;
  }
  Builder& product(std::string a, std::string b, std::vector<NamedTerm> result) {
    product_.push_back({std::move(a), std::move(b), std::move(result)});
    return *this;
  }

  /// Structural validation only (names, degrees, duplicates). Algebraic
  /// axioms are checked by check_axioms().
  CDGA build() const {
    CDGA a;
    a.space_ = GradedVectorSpace(degrees_);
    if (unit_.empty()) throw InvalidCDGA("no unit specified");
    a.unit_ = a.space_.index(unit_);
    if (a.space_.degree(a.unit_) != 0) throw InvalidCDGA("unit must have degree 0");
    a.differential_.assign(a.space_.dimension(), {});
    std::vector<bool> seen(a.space_.dimension(), false);
    for (const auto& [src, img] : d_) {
      std::size_t i = a.space_.index(src);
      if (seen[i]) throw InvalidCDGA("differential of '" + src + "' given twice");
      seen[i] = true;
      a.differential_[i] = vec(a.space_, img);
    }
    for (const auto& p : product_) {
      std::size_t i = a.space_.index(p.a), j = a.space_.index(p.b);
      if (!a.product_.emplace(std::make_pair(i, j), vec(a.space_, p.result)).second)
        throw InvalidCDGA("product (" + p.a + ", " + p.b + ") given twice");
    }
    return a;
  }

 private:
  static SparseVector vec(const GradedVectorSpace& s, const std::vector<NamedTerm>& terms) {
    SparseVector v;
    for (const auto& [n, c] : terms) axpy(v, c, unit_vector(s.index(n)));
    return v;
  }

  struct ProductEntry {
    std::string a, b;
    std::vector<NamedTerm> result;
  };
  std::vector<std::pair<int, std::vector<std::string>>> degrees_;
  std::string unit_;
  std::vector<std::pair<std::string, std::vector<NamedTerm>>> d_;
  std::vector<ProductEntry> product_;
};

// ---------------------------------------------------------------------------
// Axioms

struct Violation {
  std::string axiom;   // degree, d_unit, d_squared, unit, commutativity, associativity, leibniz
  std::string detail;  // names the offending basis tuple
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

inline AxiomReport check_axioms(const CDGA& A) {
  AxiomReport rep;
  const auto& S = A.space();
  const std::size_t n = A.dimension();
  auto add = [&](std::string axiom, std::string detail) {
    rep.violations.push_back({std::move(axiom), std::move(detail)});
  };
  auto in_degree = [&](const SparseVector& v, int d) {
    return std::all_of(v.begin(), v.end(), [&](const auto& kv) { return S.degree(kv.first) == d; });
  };

  for (std::size_t i = 0; i < n; ++i)
    if (!in_degree(A.d(i), S.degree(i) + 1))
      add("degree", "d(" + S.name(i) + ") = " + S.format(A.d(i)) + " is not in degree " +
                        std::to_string(S.degree(i) + 1));
  for (const auto& [key, v] : A.product_table())
    if (!in_degree(v, S.degree(key.first) + S.degree(key.second)))
      add("degree", S.name(key.first) + "*" + S.name(key.second) + " = " + S.format(v) +
                        " has the wrong degree");
  if (!rep.ok()) return rep;  // the remaining checks assume homogeneity

  if (!A.d(A.unit()).empty()) add("d_unit", "d(" + S.name(A.unit()) + ") = " + S.format(A.d(A.unit())));

  for (std::size_t i = 0; i < n; ++i) {
    auto dd = A.d(A.d(i));
    if (!dd.empty()) add("d_squared", "d(d(" + S.name(i) + ")) = " + S.format(dd));
  }

  for (const auto& [key, v] : A.product_table()) {
    auto [a, b] = key;
    if (a == A.unit() && v != unit_vector(b))
      add("unit", S.name(a) + "*" + S.name(b) + " = " + S.format(v));
    else if (b == A.unit() && v != unit_vector(a))
      add("unit", S.name(a) + "*" + S.name(b) + " = " + S.format(v));
    if (a < b) {
      auto it = A.product_table().find({b, a});
      if (it != A.product_table().end()) {
        SparseVector mirrored = it->second;
        scale(mirrored, Rational(signs::koszul(S.degree(a), S.degree(b))));
        if (mirrored != v) add("commutativity", S.name(a) + "*" + S.name(b) + " vs " + S.name(b) + "*" + S.name(a));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (S.degree(a) % 2 == 1 && !A.multiply(a, a).empty())
      add("commutativity", S.name(a) + "*" + S.name(a) + " must vanish for odd degree");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = A.multiply(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (S.degree(a) + S.degree(b) + S.degree(c) > S.max_degree()) continue;
        if (A.multiply(ab, unit_vector(c)) != A.multiply(unit_vector(a), A.multiply(b, c)))
          add("associativity", "(" + S.name(a) + "*" + S.name(b) + ")*" + S.name(c));
      }
      SparseVector lhs = A.d(ab);
      SparseVector rhs = A.multiply(A.d(a), unit_vector(b));
      axpy(rhs, Rational(signs::leibniz(S.degree(a))), A.multiply(unit_vector(a), A.d(b)));
      if (lhs != rhs) add("leibniz", "d(" + S.name(a) + "*" + S.name(b) + ")");
    }
  return rep;
}

inline void require_valid(const CDGA& A) {
  auto rep = check_axioms(A);
  if (!rep.ok())
    throw InvalidCDGA(rep.violations.front().axiom + ": " + rep.violations.front().detail);
}

// ---------------------------------------------------------------------------
// Cohomology

struct Cohomology {
  int degree = 0;
  std::size_t dimension = 0;
  /// Representatives in global coordinates of the algebra.
  std::vector<SparseVector> representatives;
};

/// H^i of a cochain complex given the incoming and outgoing differentials
/// (local coordinates): ker(out) / im(in). Representatives come from the
/// kernel basis in free-column order.
inline QuotientBasis complex_cohomology(std::size_t dim, const SparseMatrix& incoming,
                                        const SparseMatrix& outgoing) {
  auto cocycles = kernel_basis(outgoing);
  auto boundaries = image_basis(incoming);
  return QuotientBasis(dim, boundaries, cocycles);
}

inline Cohomology cohomology(const CDGA& A, int i) {
  require_valid(A);
  Cohomology h;
  h.degree = i;
  if (i < 0 || i > A.max_degree()) return h;
  const auto& S = A.space();
  SparseMatrix in = i == 0 ? SparseMatrix(S.dimension(0), 0) : A.differential_matrix(i - 1);
  auto q = complex_cohomology(S.dimension(i), in, A.differential_matrix(i));
  h.dimension = q.dimension();
  for (const auto& r : q.representatives()) h.representatives.push_back(S.to_global(r, i));
  return h;
}

// ---------------------------------------------------------------------------
// Tensor product A ⊗ B: basis a.b, d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db,
// (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'.

inline CDGA tensor_product(const CDGA& A, const CDGA& B) {
  const auto& SA = A.space();
  const auto& SB = B.space();
  auto name = [&](std::size_t a, std::size_t b) { return SA.name(a) + "." + SB.name(b); };
  std::map<int, std::vector<std::string>> by_degree;
  for (std::size_t a = 0; a < A.dimension(); ++a)
    for (std::size_t b = 0; b < B.dimension(); ++b) by_degree[SA.degree(a) + SB.degree(b)].push_back(name(a, b));
  CDGA::Builder builder;
  for (auto& [d, names] : by_degree) builder.basis(d, names);
  builder.unit(name(A.unit(), B.unit()));
  auto terms = [&](const SparseVector& va, const SparseVector& vb, const Rational& c) {
    std::vector<NamedTerm> out;
    for (const auto& [i, x] : va)
      for (const auto& [j, y] : vb) out.emplace_back(name(i, j), c * x * y);
    return out;
  };
  for (std::size_t a = 0; a < A.dimension(); ++a)
    for (std::size_t b = 0; b < B.dimension(); ++b) {
      auto t = terms(A.d(a), unit_vector(b), Rational(1));
      auto u = terms(unit_vector(a), B.d(b), Rational(signs::leibniz(SA.degree(a))));
      t.insert(t.end(), u.begin(), u.end());
      if (!t.empty()) builder.d(name(a, b), t);
    }
  for (std::size_t a = 0; a < A.dimension(); ++a)
    for (std::size_t b = 0; b < B.dimension(); ++b)
      for (std::size_t a2 = 0; a2 < A.dimension(); ++a2)
        for (std::size_t b2 = 0; b2 < B.dimension(); ++b2) {
          if (a == A.unit() && b == B.unit()) continue;
          if (a2 == A.unit() && b2 == B.unit()) continue;
          auto pa = A.multiply(a, a2);
          auto pb = B.multiply(b, b2);
          if (pa.empty() || pb.empty()) continue;
          builder.product(name(a, b), name(a2, b2),
                          terms(pa, pb, Rational(signs::koszul(SB.degree(b), SA.degree(a2)))));
        }
  return builder.build();
}

// ---------------------------------------------------------------------------
// Augmentations

/// Degree-0 algebra map A -> Q, stored as its value on each degree-0 basis
/// element (indexed locally within degree 0).
struct Augmentation {
  std::string name;
  std::vector<Rational> values;

  Rational operator()(const SparseVector& v_global) const {
    Rational r;
    for (const auto& [i, x] : v_global)
      if (i < values.size()) r += x * values[i];
    return r;
  }
  Rational at(std::size_t basis) const { return basis < values.size() ? values[basis] : Rational(0); }
};

inline Augmentation make_augmentation(const CDGA& A, std::string name,
                                      const std::vector<NamedTerm>& values) {
  Augmentation aug{std::move(name), std::vector<Rational>(A.space().dimension(0))};
  for (const auto& [n, v] : values) {
    std::size_t i = A.space().index(n);
    if (A.degree(i) != 0)
      throw InvalidAugmentation("augmentation value on positive-degree element '" + n + "'");
    aug.values[i] = v;
  }
  return aug;
}

/// The augmentation unit -> 1, other degree-0 basis elements -> 0.
inline Augmentation unit_augmentation(const CDGA& A, std::string name = "unit") {
  Augmentation aug{std::move(name), std::vector<Rational>(A.space().dimension(0))};
  aug.values[A.unit()] = Rational(1);
  return aug;
}

inline void require_valid(const CDGA& A, const Augmentation& aug) {
  const auto& S = A.space();
  if (aug.values.size() != S.dimension(0))
    throw InvalidAugmentation("augmentation '" + aug.name + "' has wrong size");
  if (aug.at(A.unit()) != Rational(1))
    throw InvalidAugmentation("augmentation '" + aug.name + "' does not send the unit to 1");
  auto [a0, a1] = S.range(0);
  for (std::size_t a = a0; a < a1; ++a)
    for (std::size_t b = a0; b < a1; ++b)
      if (aug(A.multiply(a, b)) != aug.at(a) * aug.at(b))
        throw InvalidAugmentation("augmentation '" + aug.name + "' is not multiplicative on " +
                                  S.name(a) + "*" + S.name(b));
}

}  // namespace pathring
