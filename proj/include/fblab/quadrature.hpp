#ifndef FBLAB_QUADRATURE_HPP
#define FBLAB_QUADRATURE_HPP

#include <array>
#include <memory>
#include <vector>

#include "fblab/errors.hpp"
#include "fblab/grid.hpp"
#include "fblab/linalg.hpp"

namespace fblab {

inline constexpr int kSphereDesignSize = 336;
extern const std::array<std::array<double, 3>, kSphereDesignSize> kSphereDesign;

inline double unit_ball_volume(int d) {
  return d == 2 ? 3.14159265358979323846 : 4.0 * 3.14159265358979323846 / 3.0;
}
inline double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

// Reference rule on the unit ball (or the reference annulus A_{3,4}): a
// Cartesian product grid of cell centers with cells straddling the boundary
// subdivided a few levels, the deepest level weighted by a plane-cut estimate
// of the covered fraction. Mapped affinely onto any window, so integrals of
// rescaled fields match their unrescaled counterparts sample-for-sample.
struct PointRule {
  int d = 2;
  std::vector<Point> points;
  std::vector<double> weights;
  double total_weight = 0.0;
};

// Quadrature resolution knobs. m_ball = samples per axis per unit radius for
// the ball rule; m_sph = angular samples on the circle (d=2). The d=3 sphere
// rule is the fixed design table.
struct Quadrature {
  int m_ball = 48;
  int m_sph = 720;
  int refine_depth = 4;

  static Quadrature defaults(int d) {
    Quadrature q;
    if (d == 3) {
      q.m_ball = 12;
      q.refine_depth = 4;
    }
    return q;
  }
};

// Shared, cached reference rules (thread-safe construction).
std::shared_ptr<const PointRule> unit_ball_rule(int d, const Quadrature& q);
std::shared_ptr<const PointRule> annulus_rule(int d, const Quadrature& q); // radii [3,4]
std::shared_ptr<const PointRule> sphere_rule(int d, const Quadrature& q); // |x| = 1

// Integral over B_r(center) of f; sampler is f(point)->double in the same
// coordinates as the window. Linear in f for a fixed rule.
template <typename F>
double ball_integral(F&& f, const BallWindow& w, const Quadrature& q, int d) {
  const auto rule = unit_ball_rule(d, q);
  const double r = w.radius;
  double rd = 1.0;
  for (int i = 0; i < d; ++i) rd *= r;
  double s = 0.0;
  Point p;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    for (int ax = 0; ax < d; ++ax) p[ax] = w.center[ax] + r * rule->points[i][ax];
    for (int ax = d; ax < 3; ++ax) p[ax] = 0.0;
    s += rule->weights[i] * f(p);
  }
  return s * rd;
}

// Integral over the sphere bounding the window, d(H^{d-1}).
template <typename F>
double sphere_integral(F&& f, const BallWindow& w, const Quadrature& q, int d) {
  const auto rule = sphere_rule(d, q);
  const double r = w.radius;
  double rs = 1.0;
  for (int i = 0; i < d - 1; ++i) rs *= r;
  double s = 0.0;
  Point p;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    for (int ax = 0; ax < d; ++ax) p[ax] = w.center[ax] + r * rule->points[i][ax];
    for (int ax = d; ax < 3; ++ax) p[ax] = 0.0;
    s += rule->weights[i] * f(p);
  }
  return s * rs;
}

// Integral over the annulus A_{3r,4r}(center).
template <typename F>
double annulus_integral(F&& f, const Point& center, double r, const Quadrature& q, int d) {
  const auto rule = annulus_rule(d, q);
  double rd = 1.0;
  for (int i = 0; i < d; ++i) rd *= r;
  double s = 0.0;
  Point p;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    for (int ax = 0; ax < d; ++ax) p[ax] = center[ax] + r * rule->points[i][ax];
    for (int ax = d; ax < 3; ++ax) p[ax] = 0.0;
    s += rule->weights[i] * f(p);
  }
  return s * rd;
}

// Calibration gate: quadrature measure of the unit ball against omega_d.
// Throws ResolutionError when the relative error exceeds 1e-3.
void check_quadrature_calibration(int d, const Quadrature& q);

} // namespace fblab

#endif
