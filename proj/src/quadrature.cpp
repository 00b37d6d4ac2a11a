#include "fblab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace fblab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Signed "outside" distance of a point to the region: negative inside.
// Ball: |x| - 1. Annulus: max(|x|-4, 3-|x|).
double region_phi(const Point& c, int d, bool annulus) {
  const double r = norm(c, d);
  return annulus ? std::max(r - 4.0, 3.0 - r) : r - 1.0;
}

// Distance from the cell (center c, half-side hs) to the region boundary is
// at least |phi| - hs*sqrt(d); classify conservatively on that margin.
int classify(const Point& c, double hs, int d, bool annulus) {
  const double phi = region_phi(c, d, annulus);
  const double reach = hs * std::sqrt(static_cast<double>(d));
  if (phi <= -reach) return -1; // fully inside
  if (phi >= reach) return 1;   // fully outside
  return 0;                     // straddles
}

void subdivide(const Point& c, double hs, int level, int d, bool annulus, PointRule& rule) {
  const int cls = classify(c, hs, d, annulus);
  double vol = 1.0;
  for (int i = 0; i < d; ++i) vol *= 2.0 * hs;
  if (cls == 1) return;
  if (cls == -1) {
    rule.points.push_back(c);
    rule.weights.push_back(vol);
    return;
  }
  if (level == 0) {
    // Plane-cut fraction: treat the boundary as locally flat with unit
    // normal; the covered fraction of a box of side 2*hs is clamped linear
    // in the signed center distance.
    const double phi = region_phi(c, d, annulus);
    const double f = std::clamp(0.5 - phi / (2.0 * hs), 0.0, 1.0);
    if (f > 0.0) {
      rule.points.push_back(c);
      rule.weights.push_back(vol * f);
    }
    return;
  }
  const double child_hs = 0.5 * hs;
  const int children = 1 << d;
  for (int child = 0; child < children; ++child) {
    Point cc = c;
    for (int ax = 0; ax < d; ++ax)
      cc[ax] += ((child >> ax) & 1) ? child_hs : -child_hs;
    subdivide(cc, child_hs, level - 1, d, annulus, rule);
  }
}

std::shared_ptr<const PointRule> build_cartesian_rule(int d, int m, int depth, bool annulus) {
  auto rule = std::make_shared<PointRule>();
  rule->d = d;
  const double delta = 1.0 / m;
  const double hs = 0.5 * delta;
  const int halfspan = annulus ? 4 * m : m;
  std::array<int, 3> idx{0, 0, 0};
  // lexicographic scan over cells of [-R, R]^d, R = 1 or 4
  const int lo = -halfspan, hi = halfspan; // cell i covers [i*delta, (i+1)*delta)
  std::array<int, 3> i{lo, lo, lo};
  while (true) {
    Point c{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) c[ax] = (i[ax] + 0.5) * delta;
    subdivide(c, hs, depth, d, annulus, *rule);
    int ax = 0;
    for (; ax < d; ++ax) {
      if (++i[ax] < hi) break;
      i[ax] = lo;
    }
    if (ax == d) break;
  }
  (void)idx;
  double tw = 0.0;
  for (double w : rule->weights) tw += w;
  rule->total_weight = tw;
  return rule;
}

std::shared_ptr<const PointRule> build_sphere_rule(int d, int m_sph) {
  auto rule = std::make_shared<PointRule>();
  rule->d = d;
  if (d == 2) {
    const double w = 2.0 * kPi / m_sph;
    for (int i = 0; i < m_sph; ++i) {
      const double th = 2.0 * kPi * (i + 0.5) / m_sph;
      rule->points.push_back({std::cos(th), std::sin(th), 0.0});
      rule->weights.push_back(w);
    }
  } else {
    const double w = 4.0 * kPi / kSphereDesignSize;
    for (const auto& p : kSphereDesign) {
      rule->points.push_back({p[0], p[1], p[2]});
      rule->weights.push_back(w);
    }
  }
  double tw = 0.0;
  for (double w : rule->weights) tw += w;
  rule->total_weight = tw;
  return rule;
}

std::mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const PointRule>> g_cache;

std::shared_ptr<const PointRule> cached(const std::string& key,
                                        std::shared_ptr<const PointRule> (*make)(int, const Quadrature&),
                                        int d, const Quadrature& q) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(key);
  if (it != g_cache.end()) return it->second;
  auto rule = make(d, q);
  g_cache.emplace(key, rule);
  return rule;
}

std::shared_ptr<const PointRule> make_ball(int d, const Quadrature& q) {
  return build_cartesian_rule(d, q.m_ball, q.refine_depth, false);
}
std::shared_ptr<const PointRule> make_annulus(int d, const Quadrature& q) {
  return build_cartesian_rule(d, q.m_ball, q.refine_depth, true);
}
std::shared_ptr<const PointRule> make_sphere(int d, const Quadrature& q) {
  return build_sphere_rule(d, q.m_sph);
}

} // namespace

std::shared_ptr<const PointRule> unit_ball_rule(int d, const Quadrature& q) {
  if (d != 2 && d != 3) throw InvalidParameterError("unit_ball_rule: d must be 2 or 3");
  const std::string key = "ball/" + std::to_string(d) + "/" + std::to_string(q.m_ball) + "/" +
                          std::to_string(q.refine_depth);
  return cached(key, make_ball, d, q);
}

std::shared_ptr<const PointRule> annulus_rule(int d, const Quadrature& q) {
  if (d != 2 && d != 3) throw InvalidParameterError("annulus_rule: d must be 2 or 3");
  const std::string key = "ann/" + std::to_string(d) + "/" + std::to_string(q.m_ball) + "/" +
                          std::to_string(q.refine_depth);
  return cached(key, make_annulus, d, q);
}

std::shared_ptr<const PointRule> sphere_rule(int d, const Quadrature& q) {
  if (d != 2 && d != 3) throw InvalidParameterError("sphere_rule: d must be 2 or 3");
  const std::string key = "sph/" + std::to_string(d) + "/" + std::to_string(q.m_sph);
  return cached(key, make_sphere, d, q);
}

void check_quadrature_calibration(int d, const Quadrature& q) {
  const auto ball = unit_ball_rule(d, q);
  const double wd = unit_ball_volume(d);
  if (std::abs(ball->total_weight - wd) > 1e-3 * wd)
    throw ResolutionError("quadrature calibration gate failed: ball rule measure off by more than 1e-3");
  const auto sph = sphere_rule(d, q);
  const double sd = unit_sphere_area(d);
  if (std::abs(sph->total_weight - sd) > 1e-3 * sd)
    throw ResolutionError("quadrature calibration gate failed: sphere rule measure off by more than 1e-3");
}

} // namespace fblab
