#include "fblab/monotonicity.hpp"

#include <cmath>

#include "fblab/errors.hpp"

namespace fblab {

namespace {

void require_window(const FieldView& u, const Point& x0, double r, double floor_cells) {
  if (!(r > 0.0)) throw WindowError("analysis window: radius must be positive");
  if (r < floor_cells * u.native_spacing())
    throw ResolutionError("analysis window: radius below the resolution floor");
  if (!u.window_fits(x0, r, 2.0))
    throw WindowError("analysis window: ball plus margin leaves the domain");
}

} // namespace

std::vector<double> dyadic_radii(double r0, double floor_r) {
  std::vector<double> radii;
  for (double r = r0; r >= floor_r * (1.0 - 1e-12); r *= 0.5) radii.push_back(r);
  return radii;
}

RescaledView rescale(const FieldView& base, const Point& x0, double r) {
  return RescaledView(base, x0, r);
}

double weiss_energy(const FieldView& u, const Point& x0, double r, const EnergyParams& p,
                    const Quadrature& q, double floor_cells) {
  require_window(u, x0, r, floor_cells);
  const RescaledView v(u, x0, r);
  const int d = u.dim();
  const int k = u.k();
  const double tau = v.support_threshold();
  std::vector<double> grad(static_cast<size_t>(k) * d), val(static_cast<size_t>(k));
  const BallWindow unit(Point{0, 0, 0}, 1.0);

  const double dirichlet = ball_integral(
      [&](const Point& x) {
        v.gradient_into(x, grad);
        double s = 0.0;
        for (double g : grad) s += g * g;
        return s;
      },
      unit, q, d);

  const double boundary = sphere_integral(
      [&](const Point& x) {
        v.value_into(x, val);
        double s = 0.0;
        for (double w : val) s += w * w;
        return s;
      },
      unit, q, d);

  const double measure = ball_integral(
      [&](const Point& x) {
        v.value_into(x, val);
        double s = 0.0;
        for (double w : val) s += w * w;
        return s > tau * tau ? 1.0 : 0.0;
      },
      unit, q, d);

  return dirichlet - boundary + p.lambda * measure;
}

double weiss_derivative_bound(const FieldView& u, const Point& x0, double r,
                              const Quadrature& q, double floor_cells) {
  require_window(u, x0, r, floor_cells);
  const RescaledView v(u, x0, r);
  const int d = u.dim();
  const int k = u.k();
  std::vector<double> grad(static_cast<size_t>(k) * d), val(static_cast<size_t>(k));
  const BallWindow unit(Point{0, 0, 0}, 1.0);
  return sphere_integral(
      [&](const Point& x) {
        v.gradient_into(x, grad);
        v.value_into(x, val);
        double s = 0.0;
        for (int c = 0; c < k; ++c) {
          double radial = 0.0;
          for (int ax = 0; ax < d; ++ax) radial += x[ax] * grad[static_cast<size_t>(c) * d + ax];
          const double diff = radial - val[static_cast<size_t>(c)];
          s += diff * diff;
        }
        return s;
      },
      unit, q, d);
}

WeissProfile weiss_profile(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                           const EnergyParams& p, const Quadrature& q, double floor_cells) {
  WeissProfile prof;
  prof.x0 = x0;
  for (double r : radii) {
    prof.radii.push_back(r);
    prof.phi.push_back(weiss_energy(u, x0, r, p, q, floor_cells));
    prof.bound.push_back(weiss_derivative_bound(u, x0, r, q, floor_cells));
  }
  return prof;
}

std::vector<WeissViolation> weiss_monotonicity_check(const WeissProfile& profile, double delta) {
  const size_t m = profile.radii.size();
  if (m < 2) throw InvalidParameterError("weiss_monotonicity_check: need at least two radii");
  std::vector<WeissViolation> out;
  for (size_t i = 1; i < m; ++i) {
    const double r_big = profile.radii[i - 1];
    const double r_small = profile.radii[i];
    if (!(r_small < r_big))
      throw InvalidParameterError("weiss_monotonicity_check: radii must decrease");
    WeissViolation v;
    v.index = static_cast<int>(i);
    if (profile.phi[i] > profile.phi[i - 1] + delta) {
      v.non_decrease = true;
      v.amount = profile.phi[i] - profile.phi[i - 1];
    }
    const double quotient = (profile.phi[i - 1] - profile.phi[i]) / (r_big - r_small);
    const double avg_bound = 0.5 * (profile.bound[i - 1] + profile.bound[i]);
    if (quotient < avg_bound - delta) {
      v.derivative = true;
      v.amount = std::max(v.amount, avg_bound - quotient);
    }
    if (v.non_decrease || v.derivative) out.push_back(v);
  }
  return out;
}

double acf_functional(const FieldView& u, const std::vector<double>& sigma, const Point& x0,
                      double r, const Quadrature& q, double floor_cells) {
  require_window(u, x0, r, floor_cells);
  const int d = u.dim();
  const int k = u.k();
  if (static_cast<int>(sigma.size()) != k)
    throw InvalidParameterError("acf_functional: sigma size must match k");
  std::vector<double> grad(static_cast<size_t>(k) * d), val(static_cast<size_t>(k));

  const double excise = (d == 3) ? 2.0 * u.native_spacing() : 0.0;

  double pos = 0.0, neg = 0.0;
  const BallWindow w(x0, r);
  auto directional = [&](const Point& x, double& signed_value) {
    u.value_into(x, val);
    u.gradient_into(x, grad);
    signed_value = 0.0;
    for (int c = 0; c < k; ++c) signed_value += sigma[static_cast<size_t>(c)] * val[static_cast<size_t>(c)];
    double e = 0.0;
    for (int ax = 0; ax < d; ++ax) {
      double g = 0.0;
      for (int c = 0; c < k; ++c) g += sigma[static_cast<size_t>(c)] * grad[static_cast<size_t>(c) * d + ax];
      e += g * g;
    }
    return e;
  };

  const auto rule = unit_ball_rule(d, q);
  double rd = 1.0;
  for (int i = 0; i < d; ++i) rd *= r;
  Point x;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    double dist = 0.0;
    for (int ax = 0; ax < d; ++ax) {
      x[ax] = x0[ax] + r * rule->points[i][ax];
      const double dx = x[ax] - x0[ax];
      dist += dx * dx;
    }
    for (int ax = d; ax < 3; ++ax) x[ax] = 0.0;
    dist = std::sqrt(dist);
    if (d == 3 && dist < excise) continue;
    double sv = 0.0;
    const double e = directional(x, sv);
    const double weight = (d == 2) ? 1.0 : 1.0 / std::max(dist, 1e-300);
    const double contrib = rule->weights[i] * rd * e * weight;
    if (sv > 0.0)
      pos += contrib;
    else if (sv < 0.0)
      neg += contrib;
  }

  if (d == 3 && excise > 0.0 && excise < r) {
    // analytic contribution of the excised ball, integrand frozen at its
    // sphere mean: int_{B_eps} w = 2 pi eps^2
    const BallWindow ew(x0, excise);
    double mean_pos = 0.0, mean_neg = 0.0;
    const double area = unit_sphere_area(3) * excise * excise;
    mean_pos = sphere_integral(
                   [&](const Point& p) {
                     double sv = 0.0;
                     const double e = directional(p, sv);
                     return sv > 0.0 ? e : 0.0;
                   },
                   ew, q, 3) /
               area;
    mean_neg = sphere_integral(
                   [&](const Point& p) {
                     double sv = 0.0;
                     const double e = directional(p, sv);
                     return sv < 0.0 ? e : 0.0;
                   },
                   ew, q, 3) /
               area;
    const double analytic = 2.0 * 3.14159265358979323846 * excise * excise;
    pos += mean_pos * analytic;
    neg += mean_neg * analytic;
  }

  return pos * neg / (r * r * r * r);
}

double density(const FieldView& u, const Point& x0, double r, const Quadrature& q) {
  if (!(r > 0.0)) throw WindowError("density: radius must be positive");
  if (!u.window_fits(x0, r, 2.0))
    throw WindowError("density: ball plus margin leaves the domain");
  const int d = u.dim();
  const int k = u.k();
  const double tau = u.support_threshold();
  std::vector<double> val(static_cast<size_t>(k));
  const auto rule = unit_ball_rule(d, q);
  double inside = 0.0;
  Point x;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    for (int ax = 0; ax < d; ++ax) x[ax] = x0[ax] + r * rule->points[i][ax];
    for (int ax = d; ax < 3; ++ax) x[ax] = 0.0;
    u.value_into(x, val);
    double n2 = 0.0;
    for (double v : val) n2 += v * v;
    if (n2 > tau * tau) inside += rule->weights[i];
  }
  return inside / rule->total_weight;
}

std::string point_class_name(PointClassKind k) {
  switch (k) {
    case PointClassKind::Regular: return "Regular";
    case PointClassKind::OnePhaseSingular: return "OnePhaseSingular";
    case PointClassKind::TwoPhaseSingular: return "TwoPhaseSingular";
    default: return "Inconclusive";
  }
}

PointClass classify_point(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                          double tau_class, const EnergyParams& p, const Quadrature& q,
                          double floor_cells) {
  if (radii.size() < 2)
    throw InvalidParameterError("classify_point: need at least two radii");
  PointClass out;
  out.radii = radii;
  for (double r : radii) {
    out.densities.push_back(density(u, x0, r, q));
    out.phis.push_back(weiss_energy(u, x0, r, p, q, floor_cells));
  }
  const size_t m = radii.size();
  const double rho_prev = out.densities[m - 2];
  const double rho_last = out.densities[m - 1];
  // non-Cauchy density sequence: extrapolation not trustworthy
  if (std::abs(rho_last - rho_prev) > 0.5 * tau_class + 0.05) {
    out.conclusive = false;
    out.kind = PointClassKind::Inconclusive;
    return out;
  }
  // density error is O(r): Richardson with the halved pair
  out.density_limit = std::clamp(2.0 * rho_last - rho_prev, 0.0, 1.0);
  // Weiss error from the smeared gradient layer is O(h/r): extrapolate in 1/r
  out.phi_limit = 2.0 * out.phis[m - 2] - out.phis[m - 1];
  const double lwd = p.lambda * unit_ball_volume(u.dim());
  out.phi_over_lwd = out.phi_limit / lwd;
  out.cross_check_ok = std::abs(out.phi_limit - lwd * out.density_limit) <= 0.05 * lwd;

  const double rho0 = out.density_limit;
  if (std::abs(rho0 - 0.5) <= tau_class) {
    out.kind = PointClassKind::Regular;
    out.conclusive = true;
  } else if (rho0 >= 1.0 - tau_class) {
    out.kind = PointClassKind::TwoPhaseSingular;
    out.conclusive = true;
  } else if (rho0 > 0.5 && rho0 < 1.0) {
    out.kind = PointClassKind::OnePhaseSingular;
    out.conclusive = true;
  } else {
    out.kind = PointClassKind::Inconclusive;
    out.conclusive = false;
  }
  return out;
}

} // namespace fblab
