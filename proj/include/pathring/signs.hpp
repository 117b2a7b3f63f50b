#pragma once

// All sign conventions used by the library live here.
//
// Graded objects follow the Koszul rule: moving x past y costs (-1)^{|x||y|}.
// Bar words use the desuspension s: A -> sA with |sa| = |a| - 1, and every
// bar sign is the Koszul sign for an odd operator (the differential, or the
// multiplication map b(sa ⊗ sb) = (-1)^{|sa|} s(ab)) passing over the
// shifted letters to its left:
//
//   D[a1|...|an] =  sum_i  -(-1)^{e_i}           [a1|..|d a_i|..|an]
//                 + sum_i   (-1)^{e_i + |s a_i|} [a1|..|a_i a_{i+1}|..|an]
//                 +         eta(a1)              [a2|...|an]
//                 -         (-1)^{e_n}           [a1|...|a_{n-1}] xi(an)
//
// with e_i = |s a_1| + ... + |s a_{i-1}|. These make D^2 = 0 on the
// two-sided bar complex of any graded-commutative dga.

namespace pathring::signs {

/// (-1)^n
constexpr int power_of_minus_one(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Sign acquired when elements of degrees a and b are swapped.
constexpr int koszul(long a, long b) { return power_of_minus_one(a * b); }

constexpr long shifted_degree(long degree) { return degree - 1; }

/// Leibniz: d(xy) = dx·y + leibniz(|x|)·x·dy.
constexpr int leibniz(long degree_x) { return power_of_minus_one(degree_x); }

/// Coefficient of the term where the internal differential hits a letter
/// whose preceding shifted letters have total degree `prefix`.
constexpr int bar_internal(long prefix) { return -power_of_minus_one(prefix); }

/// Coefficient of the term merging letters a_i a_{i+1}, with `prefix` the
/// shifted degree before a_i and `degree_i` the (unshifted) degree of a_i.
constexpr int bar_merge(long prefix, long degree_i) {
  return power_of_minus_one(prefix + shifted_degree(degree_i));
}

/// Coefficient of the left augmentation term eta(a_1)[a_2|...].
constexpr int bar_left_end() { return 1; }

/// Coefficient of the right augmentation term [...|a_{n-1}] xi(a_n), with
/// `prefix` the shifted degree of a_1 ... a_{n-1}.
constexpr int bar_right_end(long prefix) { return -power_of_minus_one(prefix); }

/// Sign of a shuffle permutation of shifted letters: the Koszul sign of
/// moving each right-hand letter past the left-hand letters it overtakes.
/// `crossings` is the sum over such overtakes of |s x|·|s y|.
constexpr int shuffle(long crossings) { return power_of_minus_one(crossings); }

}  // namespace pathring::signs
