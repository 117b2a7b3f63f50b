#pragma once

// Iterated integrals of the logarithmic forms ω_i = dz/(z - a_i) along
// piecewise paths, and parallel transport of unipotent connections.
//
// Words are read earliest-first: I_γ(k_1 ... k_n) integrates ω_{k_1} at the
// smallest time. Then I_{γ1·γ2}(w) = Σ_k I_γ1(w_1..w_k) I_γ2(w_{k+1}..w_n),
// and transport solves dT/dt = Ω(t) T, so T(γ1·γ2) = T(γ2) T(γ1).

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pathring/chen/geometry.hpp"
#include "pathring/errors.hpp"
#include "pathring/words.hpp"

namespace pathring::chen {

struct IntegrationOptions {
  double tol = 1e-10;
  double min_step = 1e-12;
  long max_steps = 20'000'000;
};

template <class Real>
struct Estimate {
  Complex<Real> value;
  double error = 0;  // accumulated step-doubling estimate
};

template <class Real>
using State = std::vector<Complex<Real>>;

namespace detail {

template <class Real>
double to_double(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

/// Classical RK4 step for y' = f(t, y).
template <class Real, class F>
State<Real> rk4(const F& f, const Real& t, const State<Real>& y, const Real& h) {
  const std::size_t n = y.size();
  auto axpy = [n](const State<Real>& a, const Real& c, const State<Real>& b) {
    State<Real> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + c * b[i];
    return out;
  };
  Real half = h / 2;
  State<Real> k1 = f(t, y);
  State<Real> k2 = f(t + half, axpy(y, half, k1));
  State<Real> k3 = f(t + half, axpy(y, half, k2));
  State<Real> k4 = f(t + h, axpy(y, h, k3));
  State<Real> out(n);
  Real sixth = h / 6;
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + sixth * (k1[i] + Real(2) * k2[i] + Real(2) * k3[i] + k4[i]);
  return out;
}

/// Integrates over t in [0, 1] with step doubling; each accepted step keeps
/// its error estimate below tol·h and takes the Richardson-extrapolated value.
template <class Real, class F>
State<Real> integrate_unit(const F& f, State<Real> y, double tol, const IntegrationOptions& opt, double& error,
                           long& steps) {
  Real t(0);
  double h = 1.0 / 32;
  bool finished = false;
  while (!finished) {
    Real remaining = Real(1) - t;
    double rem = to_double<Real>(remaining);
    bool last = h >= rem;
    Real hr = last ? remaining : Real(h);
    double hd = last ? rem : h;
    State<Real> full = rk4<Real>(f, t, y, hr);
    Real hh = hr / 2;
    State<Real> halves = rk4<Real>(f, Real(t + hh), rk4<Real>(f, t, y, hh), hh);
    double err = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      err = std::max(err, to_double<Real>((halves[i] - full[i]).abs()) / 15.0);
    double allowed = tol * hd;
    if (++steps > opt.max_steps) throw ToleranceNotMet("step budget exhausted");
    if (err <= allowed || hd <= opt.min_step) {
      if (err > allowed) throw ToleranceNotMet("step size fell below " + std::to_string(opt.min_step));
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = halves[i] + Real(Real(1) / 15) * (halves[i] - full[i]);
      error += err;
      t += hr;
      finished = last;
      double grow = err == 0 ? 4.0 : std::min(4.0, 0.9 * std::pow(allowed / err, 0.2));
      h = hd * std::max(grow, 0.2);
    } else {
      h = std::max(opt.min_step, hd * std::max(0.1, 0.9 * std::pow(allowed / err, 0.2)));
    }
  }
  return y;
}

/// Prefix trie over a set of words; node 0 is the empty word.
struct WordTrie {
  std::vector<std::size_t> parent{0};
  std::vector<Letter> letter{0};
  std::map<Word, std::size_t> node{{Word{}, 0}};

  std::size_t insert(const Word& w) {
    Word prefix;
    std::size_t cur = 0;
    for (Letter l : w) {
      prefix.push_back(l);
      auto it = node.find(prefix);
      if (it == node.end()) {
        parent.push_back(cur);
        letter.push_back(l);
        it = node.emplace(prefix, parent.size() - 1).first;
      }
      cur = it->second;
    }
    return cur;
  }
  std::size_t size() const { return parent.size(); }
};

template <class Real>
std::vector<Complex<Real>> pullbacks(const std::vector<Complex<Real>>& a, const Segment::Compiled<Real>& s,
                                     const Real& t) {
  Complex<Real> z, dz;
  s.eval(t, z, dz);
  std::vector<Complex<Real>> f(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) f[k] = dz / (z - a[k]);
  return f;
}

template <class Real>
std::vector<Complex<Real>> punctures_as(const PuncturedLine& X) {
  std::vector<Complex<Real>> a;
  for (const auto& p : X.punctures) a.push_back(p.as<Real>());
  return a;
}

}  // namespace detail

/// I_γ(w) for every word in `words`, computed together by the first-order
/// recursion F'_{w·k} = F_w f_k along each segment.
template <class Real>
std::vector<Estimate<Real>> iterated_integrals(const PuncturedLine& X, const Path& path, const std::vector<Word>& words,
                                               const IntegrationOptions& opt = {}) {
  if (!(opt.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  require_clearance(X, path);
  detail::WordTrie trie;
  std::vector<std::size_t> target;
  for (const auto& w : words) {
    for (Letter l : w)
      if (l >= X.form_count()) throw std::invalid_argument("word uses form " + std::to_string(l) + " out of range");
    target.push_back(trie.insert(w));
  }
  const auto a = detail::punctures_as<Real>(X);
  State<Real> y(trie.size(), Complex<Real>(Real(0)));
  y[0] = Complex<Real>(Real(1));
  double error = 0;
  long steps = 0;
  const double seg_tol = opt.tol / static_cast<double>(path.segments().size());
  for (const auto& seg : path.segments()) {
    if (seg.kind == Segment::Kind::Line && seg.start() == seg.end()) continue;
    const auto geom = seg.template compiled<Real>();
    auto rhs = [&](const Real& t, const State<Real>& s) {
      auto f = detail::pullbacks<Real>(a, geom, t);
      State<Real> d(s.size(), Complex<Real>(Real(0)));
      for (std::size_t i = 1; i < s.size(); ++i) d[i] = s[trie.parent[i]] * f[trie.letter[i]];
      return d;
    };
    y = detail::integrate_unit<Real>(rhs, std::move(y), seg_tol, opt, error, steps);
  }
  std::vector<Estimate<Real>> out;
  for (std::size_t n : target) out.push_back({y[n], error});
  return out;
}

template <class Real>
Estimate<Real> iterated_integral(const PuncturedLine& X, const Path& path, const Word& w,
                                 const IntegrationOptions& opt = {}) {
  return iterated_integrals<Real>(X, path, {w}, opt).front();
}

// ---------------------------------------------------------------------------
// Pairing with H^0 classes

/// Rational combination of words in the form indices.
using H0Class = std::map<Word, Rational>;

template <class Real>
Estimate<Real> pair(const PuncturedLine& X, const Path& path, const H0Class& c, const IntegrationOptions& opt = {}) {
  std::vector<Word> words;
  for (const auto& [w, x] : c) words.push_back(w);
  auto vals = iterated_integrals<Real>(X, path, words, opt);
  Estimate<Real> out{Complex<Real>(Real(0)), 0};
  std::size_t i = 0;
  for (const auto& [w, x] : c) {
    Real cr = from_rational<Real>(x);
    out.value += cr * vals[i].value;
    out.error += std::abs(x.to_double()) * vals[i].error;
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unipotent connections

/// Complex rational coefficient.
struct ExactComplex {
  Rational re;
  Rational im;
  template <class Real>
  Complex<Real> as() const {
    return Complex<Real>(from_rational<Real>(re), from_rational<Real>(im));
  }
};

/// Ω = Σ_{i<j} E_ij Σ_k c_ijk ω_k, strictly upper triangular.
struct UnipotentConnection {
  std::size_t rank = 0;
  /// entries[{i, j}] = {form index -> coefficient}
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, ExactComplex>> entries;

  void set(std::size_t i, std::size_t j, std::size_t form, ExactComplex c) {
    if (i >= rank || j >= rank) throw std::invalid_argument("connection entry outside the matrix");
    if (i >= j) throw std::invalid_argument("connection must be strictly upper triangular");
    entries[{i, j}][form] = c;
  }
};

template <class Real>
using Matrix = std::vector<std::vector<Complex<Real>>>;

template <class Real>
struct TransportResult {
  Matrix<Real> value;
  double error = 0;
};

namespace detail {

template <class Real>
Matrix<Real> identity(std::size_t r) {
  Matrix<Real> m(r, std::vector<Complex<Real>>(r, Complex<Real>(Real(0))));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = Complex<Real>(Real(1));
  return m;
}

inline void check_forms(const PuncturedLine& X, const UnipotentConnection& C) {
  for (const auto& [ij, forms] : C.entries)
    for (const auto& [k, c] : forms)
      if (k >= X.form_count()) throw std::invalid_argument("connection uses form " + std::to_string(k) + " out of range");
}

}  // namespace detail

/// Finite Dyson sum: T_ij = Σ over chains i = k_0 < ... < k_n = j of the
/// iterated integral with Ω_{k_{n-1} k_n} earliest and Ω_{k_0 k_1} latest.
template <class Real>
TransportResult<Real> transport_dyson(const PuncturedLine& X, const UnipotentConnection& C, const Path& path,
                                      const IntegrationOptions& opt = {}) {
  detail::check_forms(X, C);
  const std::size_t r = C.rank;
  // word -> coefficient, per matrix entry
  std::map<std::pair<std::size_t, std::size_t>, std::map<Word, Complex<Real>>> expansion;
  std::map<Word, bool> needed;
  for (std::size_t i = 0; i < r; ++i) {
    // chains from i, built by appending later columns; the word is prepended
    // with each new factor since later matrix factors are integrated earlier.
    std::function<void(std::size_t, Word, Complex<Real>)> walk = [&](std::size_t k, Word w, Complex<Real> c) {
      for (std::size_t j = k + 1; j < r; ++j) {
        auto it = C.entries.find({k, j});
        if (it == C.entries.end()) continue;
        for (const auto& [form, coeff] : it->second) {
          Word v;
          v.push_back(static_cast<Letter>(form));
          v.insert(v.end(), w.begin(), w.end());
          Complex<Real> cc = c * coeff.template as<Real>();
          expansion[{i, j}][v] += cc;
          needed[v] = true;
          walk(j, v, cc);
        }
      }
    };
    walk(i, Word{}, Complex<Real>(Real(1)));
  }
  std::vector<Word> words;
  for (const auto& [w, unused] : needed) words.push_back(w);
  auto vals = words.empty() ? std::vector<Estimate<Real>>{} : iterated_integrals<Real>(X, path, words, opt);
  std::map<Word, Estimate<Real>> lookup;
  for (std::size_t i = 0; i < words.size(); ++i) lookup[words[i]] = vals[i];
  if (words.empty()) require_clearance(X, path);
  TransportResult<Real> out{detail::identity<Real>(r), 0};
  for (const auto& [ij, terms] : expansion)
    for (const auto& [w, c] : terms) {
      out.value[ij.first][ij.second] += c * lookup.at(w).value;
      out.error += (c.abs() < Real(1) ? 1.0 : detail::to_double<Real>(c.abs())) * lookup.at(w).error;
    }
  return out;
}

/// Solves dT/dt = Ω(t) T, T(0) = I, segment by segment.
template <class Real>
TransportResult<Real> transport_ode(const PuncturedLine& X, const UnipotentConnection& C, const Path& path,
                                    const IntegrationOptions& opt = {}) {
  if (!(opt.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  detail::check_forms(X, C);
  require_clearance(X, path);
  const std::size_t r = C.rank;
  const auto a = detail::punctures_as<Real>(X);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Complex<Real>>> terms;
  for (const auto& [ij, forms] : C.entries)
    for (const auto& [k, c] : forms) terms.emplace_back(ij.first, ij.second, k, c.template as<Real>());
  auto id = detail::identity<Real>(r);
  State<Real> y;
  for (const auto& row : id) y.insert(y.end(), row.begin(), row.end());
  double error = 0;
  long steps = 0;
  const double seg_tol = opt.tol / static_cast<double>(path.segments().size());
  for (const auto& seg : path.segments()) {
    if (seg.kind == Segment::Kind::Line && seg.start() == seg.end()) continue;
    const auto geom = seg.template compiled<Real>();
    auto rhs = [&](const Real& t, const State<Real>& s) {
      auto f = detail::pullbacks<Real>(a, geom, t);
      State<Real> d(s.size(), Complex<Real>(Real(0)));
      for (const auto& [i, j, k, c] : terms) {
        Complex<Real> w = c * f[k];
        for (std::size_t col = 0; col < r; ++col) d[i * r + col] += w * s[j * r + col];
      }
      return d;
    };
    y = detail::integrate_unit<Real>(rhs, std::move(y), seg_tol, opt, error, steps);
  }
  TransportResult<Real> out{detail::identity<Real>(r), error};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.value[i][j] = y[i * r + j];
  return out;
}

// ---------------------------------------------------------------------------
// Canonical K-form

struct KFormVerdict {
  bool exists = false;
  /// Basis of V: the constant frame e_0, ..., e_{r-1} when it exists.
  std::vector<std::vector<int>> frame;
  /// Entries (i, j, form) lying outside the splitting.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> obstructions;
};

/// For a trivialized bundle: the constant frame is a K-form on which ∇ is
/// K-linear with values in the chosen forms exactly when every entry of Ω
/// lies in their span.
inline KFormVerdict canonical_k_form(const UnipotentConnection& C, const std::vector<std::size_t>& splitting) {
  KFormVerdict v;
  for (const auto& [ij, forms] : C.entries)
    for (const auto& [k, c] : forms) {
      if (c.re.is_zero() && c.im.is_zero()) continue;
      if (std::find(splitting.begin(), splitting.end(), k) == splitting.end())
        v.obstructions.emplace_back(ij.first, ij.second, k);
    }
  v.exists = v.obstructions.empty();
  if (v.exists) {
    v.frame.assign(C.rank, std::vector<int>(C.rank, 0));
    for (std::size_t i = 0; i < C.rank; ++i) v.frame[i][i] = 1;
  }
  return v;
}

}  // namespace pathring::chen
