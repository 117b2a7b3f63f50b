#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pathring/chen/complex.hpp"
#include "pathring/errors.hpp"

namespace pathring::chen {

/// C minus finitely many punctures a_i, with forms ω_i = dz / (z - a_i).
struct PuncturedLine {
  std::vector<ExactPoint> punctures;

  explicit PuncturedLine(std::vector<ExactPoint> pts = {}) : punctures(std::move(pts)) {
    for (std::size_t i = 0; i < punctures.size(); ++i)
      for (std::size_t j = i + 1; j < punctures.size(); ++j)
        if (punctures[i] == punctures[j])
          throw InvalidPath("punctures " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  }

  std::size_t form_count() const { return punctures.size(); }

  /// Minimum clearance a path must keep: 1e-3 of the smallest puncture
  /// separation, or 1e-3 with fewer than two punctures.
  double delta() const {
    double m = 1.0;
    bool any = false;
    for (std::size_t i = 0; i < punctures.size(); ++i)
      for (std::size_t j = i + 1; j < punctures.size(); ++j) {
        double d = (punctures[i].as<double>() - punctures[j].as<double>()).abs();
        m = any ? std::min(m, d) : d;
        any = true;
      }
    return 1e-3 * m;
  }
};

struct Segment {
  enum class Kind { Line, Arc, Bezier };
  Kind kind = Kind::Line;
  /// Line: {from, to}. Arc: {from, to}. Bezier: four control points.
  std::vector<ExactPoint> points;
  ExactPoint center;  // arcs only
  bool ccw = true;    // arcs only
  int turns = 0;      // arcs only: extra full turns

  static Segment line(ExactPoint a, ExactPoint b) { return Segment{Kind::Line, {a, b}, {}, true, 0}; }
  static Segment arc(ExactPoint c, ExactPoint from, ExactPoint to, bool ccw, int turns = 0) {
    if (from == c || to == c) throw InvalidPath("arc endpoint coincides with its center");
    if (turns < 0) throw InvalidPath("negative turn count");
    return Segment{Kind::Arc, {from, to}, c, ccw, turns};
  }
  static Segment bezier(ExactPoint p0, ExactPoint p1, ExactPoint p2, ExactPoint p3) {
    return Segment{Kind::Bezier, {p0, p1, p2, p3}, {}, true, 0};
  }

  const ExactPoint& start() const { return points.front(); }
  const ExactPoint& end() const { return points.back(); }

  Segment reversed() const {
    Segment s = *this;
    std::reverse(s.points.begin(), s.points.end());
    if (kind == Kind::Arc) s.ccw = !ccw;
    return s;
  }

  friend bool operator==(const Segment&, const Segment&) = default;

  template <class Real>
  struct Compiled;
  template <class Real>
  Compiled<Real> compiled() const;

  template <class Real>
  Real sweep() const {
    using std::atan;
    const Real two_pi = 8 * atan(Real(1));
    auto c = center.as<Real>();
    Real t0 = (points[0].as<Real>() - c).arg();
    Real t1 = (points[1].as<Real>() - c).arg();
    Real d = t1 - t0;
    if (ccw) {
      while (d <= 0) d += two_pi;
      while (d > two_pi) d -= two_pi;
      d += two_pi * turns;
    } else {
      while (d >= 0) d -= two_pi;
      while (d < -two_pi) d += two_pi;
      d -= two_pi * turns;
    }
    return d;
  }

  /// Position and velocity at parameter t in [0, 1].
  template <class Real>
  void eval(const Real& t, Complex<Real>& z, Complex<Real>& dz) const;

  /// Upper bound on |z'(t)|.
  double speed_bound() const {
    switch (kind) {
      case Kind::Line:
        return (points[1].as<double>() - points[0].as<double>()).abs();
      case Kind::Arc: {
        auto c = center.as<double>();
        double r0 = (points[0].as<double>() - c).abs(), r1 = (points[1].as<double>() - c).abs();
        return std::abs(r1 - r0) + std::max(r0, r1) * std::abs(sweep<double>());
      }
      case Kind::Bezier: {
        double m = 0;
        for (int k = 0; k < 3; ++k) m = std::max(m, (points[k + 1].as<double>() - points[k].as<double>()).abs());
        return 3 * m;
      }
    }
    return 0;
  }

  /// Lower bound on the distance from a to the image of the segment.
  double clearance(const ExactPoint& a) const;
};

/// A segment with its control data converted to Real once.
template <class Real>
struct Segment::Compiled {
  Kind kind;
  Complex<Real> p[4];
  Complex<Real> center;
  Real r0, r1, theta0, sweep;

  void eval(const Real& t, Complex<Real>& z, Complex<Real>& dz) const {
    switch (kind) {
      case Kind::Line:
        dz = p[1] - p[0];
        z = p[0] + t * dz;
        return;
      case Kind::Arc: {
        Real th = theta0 + t * sweep;
        Real r = r0 + t * (r1 - r0);
        auto e = polar(Real(1), th);
        z = center + r * e;
        dz = Real(r1 - r0) * e + Complex<Real>(Real(0), Real(r * sweep)) * e;
        return;
      }
      case Kind::Bezier: {
        Real s = Real(1) - t;
        z = Real(s * s * s) * p[0] + Real(3 * s * s * t) * p[1] + Real(3 * s * t * t) * p[2] + Real(t * t * t) * p[3];
        dz = Real(3 * s * s) * (p[1] - p[0]) + Real(6 * s * t) * (p[2] - p[1]) + Real(3 * t * t) * (p[3] - p[2]);
        return;
      }
    }
  }
};

template <class Real>
Segment::Compiled<Real> Segment::compiled() const {
  Compiled<Real> g{kind, {}, {}, Real(0), Real(0), Real(0), Real(0)};
  for (std::size_t i = 0; i < points.size(); ++i) g.p[i] = points[i].as<Real>();
  if (kind == Kind::Arc) {
    g.center = center.as<Real>();
    g.r0 = (g.p[0] - g.center).abs();
    g.r1 = (g.p[1] - g.center).abs();
    g.theta0 = (g.p[0] - g.center).arg();
    g.sweep = sweep<Real>();
  }
  return g;
}

template <class Real>
void Segment::eval(const Real& t, Complex<Real>& z, Complex<Real>& dz) const {
  compiled<Real>().eval(t, z, dz);
}

inline double Segment::clearance(const ExactPoint& a) const {
  auto x = a.as<double>();
  if (kind == Kind::Line) {
    auto p = points[0].as<double>(), q = points[1].as<double>();
    auto v = q - p;
    double len2 = v.norm();
    double t = len2 == 0 ? 0 : std::clamp(((x - p).re * v.re + (x - p).im * v.im) / len2, 0.0, 1.0);
    return (x - (p + t * v)).abs();
  }
  const int n = 4096;
  double best = std::numeric_limits<double>::infinity();
  Complex<double> z, dz;
  const auto g = compiled<double>();
  for (int i = 0; i <= n; ++i) {
    g.eval(static_cast<double>(i) / n, z, dz);
    best = std::min(best, (z - x).abs());
  }
  return best - speed_bound() / (2.0 * n);
}

/// Piecewise path; consecutive segments share endpoints exactly.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Segment> segs) : segments_(std::move(segs)) {
    if (segments_.empty()) throw InvalidPath("path has no segments");
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
      if (!(segments_[i].end() == segments_[i + 1].start()))
        throw InvalidPath("segment " + std::to_string(i) + " ends at " + segments_[i].end().str() +
                          " but segment " + std::to_string(i + 1) + " starts at " +
                          segments_[i + 1].start().str());
  }

  static Path line(ExactPoint a, ExactPoint b) { return Path({Segment::line(a, b)}); }
  static Path constant(ExactPoint p) { return Path({Segment::line(p, p)}); }
  /// Straight polyline through the given points.
  static Path polyline(const std::vector<ExactPoint>& pts) {
    if (pts.size() < 2) throw InvalidPath("polyline needs two points");
    std::vector<Segment> s;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) s.push_back(Segment::line(pts[i], pts[i + 1]));
    return Path(std::move(s));
  }

  const std::vector<Segment>& segments() const { return segments_; }
  const ExactPoint& start() const { return segments_.front().start(); }
  const ExactPoint& end() const { return segments_.back().end(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Segment> segments_;
};

inline Path compose_paths(const Path& first, const Path& second) {
  if (!(first.end() == second.start()))
    throw EndpointMismatch("first path ends at " + first.end().str() + ", second starts at " +
                           second.start().str());
  std::vector<Segment> s = first.segments();
  s.insert(s.end(), second.segments().begin(), second.segments().end());
  return Path(std::move(s));
}

inline Path reverse_path(const Path& p) {
  std::vector<Segment> s;
  for (auto it = p.segments().rbegin(); it != p.segments().rend(); ++it) s.push_back(it->reversed());
  return Path(std::move(s));
}

/// Smallest lower bound on the distance from the path to any puncture.
inline double path_clearance(const PuncturedLine& X, const Path& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : p.segments())
    for (const auto& a : X.punctures) best = std::min(best, s.clearance(a));
  return best;
}

inline double require_clearance(const PuncturedLine& X, const Path& p) {
  double c = path_clearance(X, p);
  if (c < X.delta())
    throw PathTooClose("path comes within " + std::to_string(c) + " of a puncture (minimum " +
                       std::to_string(X.delta()) + ")");
  return c;
}

}  // namespace pathring::chen
