#include "fblab/blowup.hpp"

#include <cmath>

#include "fblab/errors.hpp"

namespace fblab {

namespace {

void require_window(const FieldView& u, const Point& x0, double r, double floor_cells) {
  if (!(r > 0.0)) throw WindowError("blowup window: radius must be positive");
  if (r < floor_cells * u.native_spacing())
    throw ResolutionError("blowup window: radius below the resolution floor");
  if (!u.window_fits(x0, r, 2.0))
    throw WindowError("blowup window: ball plus margin leaves the domain");
}

struct FitInternals {
  Mat A;
  double residual_unnormalized = 0.0; // int |U - U(x0) - A y|^2 over B_r
  std::vector<double> offset;
};

FitInternals fit_linear(const FieldView& u, const Point& x0, double r, const Quadrature& q) {
  const int d = u.dim();
  const int k = u.k();
  const auto rule = unit_ball_rule(d, q);
  double rd = 1.0;
  for (int i = 0; i < d; ++i) rd *= r;

  FitInternals fit;
  fit.offset.assign(static_cast<size_t>(k), 0.0);
  u.value_into(x0, fit.offset);

  SymMat gram(d);
  Mat rhs(k, d);
  std::vector<double> val(static_cast<size_t>(k));
  Point x;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    const double w = rule->weights[i] * rd;
    double y[3];
    for (int ax = 0; ax < d; ++ax) {
      y[ax] = r * rule->points[i][ax];
      x[ax] = x0[ax] + y[ax];
    }
    for (int ax = d; ax < 3; ++ax) x[ax] = 0.0;
    u.value_into(x, val);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b <= a; ++b) gram(a, b) += w * y[a] * y[b];
    for (int c = 0; c < k; ++c) {
      const double uv = val[static_cast<size_t>(c)] - fit.offset[static_cast<size_t>(c)];
      for (int ax = 0; ax < d; ++ax) rhs(c, ax) += w * uv * y[ax];
    }
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) gram(a, b) = gram(b, a);

  fit.A = Mat(k, d);
  for (int c = 0; c < k; ++c) {
    std::array<double, 3> b{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) b[ax] = rhs(c, ax);
    const auto row = solve_spd(gram, b);
    for (int ax = 0; ax < d; ++ax) fit.A(c, ax) = row[ax];
  }

  for (size_t i = 0; i < rule->points.size(); ++i) {
    const double w = rule->weights[i] * rd;
    double y[3];
    for (int ax = 0; ax < d; ++ax) {
      y[ax] = r * rule->points[i][ax];
      x[ax] = x0[ax] + y[ax];
    }
    for (int ax = d; ax < 3; ++ax) x[ax] = 0.0;
    u.value_into(x, val);
    double e = 0.0;
    for (int c = 0; c < k; ++c) {
      double model = 0.0;
      for (int ax = 0; ax < d; ++ax) model += fit.A(c, ax) * y[ax];
      const double diff = val[static_cast<size_t>(c)] - fit.offset[static_cast<size_t>(c)] - model;
      e += diff * diff;
    }
    fit.residual_unnormalized += w * e;
  }
  return fit;
}

double residual_against(const FieldView& u, const Point& x0, double r, const Mat& a,
                        const std::vector<double>& offset, const Quadrature& q) {
  const int d = u.dim();
  const int k = u.k();
  const auto rule = unit_ball_rule(d, q);
  double rd = 1.0;
  for (int i = 0; i < d; ++i) rd *= r;
  std::vector<double> val(static_cast<size_t>(k));
  double total = 0.0;
  Point x;
  for (size_t i = 0; i < rule->points.size(); ++i) {
    const double w = rule->weights[i] * rd;
    double y[3];
    for (int ax = 0; ax < d; ++ax) {
      y[ax] = r * rule->points[i][ax];
      x[ax] = x0[ax] + y[ax];
    }
    for (int ax = d; ax < 3; ++ax) x[ax] = 0.0;
    u.value_into(x, val);
    double e = 0.0;
    for (int c = 0; c < k; ++c) {
      double model = 0.0;
      for (int ax = 0; ax < d; ++ax) model += a(c, ax) * y[ax];
      const double diff = val[static_cast<size_t>(c)] - offset[static_cast<size_t>(c)] - model;
      e += diff * diff;
    }
    total += w * e;
  }
  return total;
}

} // namespace

BlowupFit fit_linear_blowup(const FieldView& u, const Point& x0, double r, const Quadrature& q,
                            double floor_cells) {
  require_window(u, x0, r, floor_cells);
  const FitInternals fit = fit_linear(u, x0, r, q);

  BlowupFit out;
  out.A = fit.A;
  out.residual = fit.residual_unnormalized / std::pow(r, u.dim() + 2);
  double off = 0.0;
  for (double v : fit.offset) off += v * v;
  out.offset_norm = std::sqrt(off);
  out.nonboundary = out.offset_norm > 10.0 * u.native_spacing();
  const Svd s = svd_kd(fit.A);
  out.singular = s.singular;
  return out;
}

int rank_estimate(const Mat& a, double tol_rank) {
  if (!(tol_rank > 0.0 && tol_rank < 1.0))
    throw InvalidParameterError("rank_estimate: tol_rank must lie in (0,1)");
  const Svd s = svd_kd(a);
  const double top = s.singular[0];
  if (top <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < a.cols; ++i)
    if (s.singular[i] >= tol_rank * top) ++r;
  return r;
}

BlowupTrace blowup_trace(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                         const std::vector<std::vector<double>>& sigmas, const Quadrature& q,
                         double floor_cells) {
  BlowupTrace trace;
  trace.x0 = x0;
  trace.sigmas = sigmas;
  for (double r : radii) {
    BlowupFit fit = fit_linear_blowup(u, x0, r, q, floor_cells);
    std::vector<double> norms;
    for (const auto& sigma : sigmas) {
      double n2 = 0.0;
      for (int ax = 0; ax < fit.A.cols; ++ax) {
        double t = 0.0;
        for (int c = 0; c < fit.A.rows; ++c) t += sigma[static_cast<size_t>(c)] * fit.A(c, ax);
        n2 += t * t;
      }
      norms.push_back(std::sqrt(n2));
    }
    trace.radii.push_back(r);
    trace.fits.push_back(std::move(fit));
    trace.sigma_norms.push_back(std::move(norms));
  }
  return trace;
}

double blowup_consistency_check(const BlowupTrace& trace, double floor_value) {
  if (trace.radii.size() < 3)
    throw InvalidParameterError("blowup_consistency_check: need at least three radii");
  double worst = 0.0;
  const size_t nr = trace.radii.size();
  const size_t ns = trace.sigmas.size();
  for (size_t s = 0; s < ns; ++s) {
    for (size_t a = 0; a < nr; ++a) {
      for (size_t b = a + 1; b < nr; ++b) {
        const double va = trace.sigma_norms[a][s];
        const double vb = trace.sigma_norms[b][s];
        const double rel = std::abs(va - vb) / std::max({va, vb, floor_value});
        worst = std::max(worst, rel);
      }
    }
  }
  return worst;
}

SymmetryTest symmetric_test(const FieldView& u, const Point& x, double r,
                            const SymmetryParams& params, const Quadrature& q,
                            double floor_cells) {
  const int d = u.dim();
  const int k = u.k();
  SymmetryTest out;
  const int target_rank = d - params.j;
  if (target_rank > std::min(k, d) || target_rank < 0) {
    out.feasible = false;
    out.symmetric = false;
    out.distance = std::numeric_limits<double>::infinity();
    out.A = Mat(k, d);
    return out;
  }
  require_window(u, x, r, floor_cells);
  const double ne = params.norm_exponent < 0 ? static_cast<double>(d + 2) : params.norm_exponent;

  const FitInternals fit = fit_linear(u, x, r, q);
  const Svd s = svd_kd(fit.A);
  out.A = svd_truncate(fit.A, s, target_rank);
  const double dist_un = residual_against(u, x, r, out.A, fit.offset, q);
  out.distance = dist_un / std::pow(r, ne);
  out.symmetric = out.distance < params.eps;
  return out;
}

bool stratum_membership(const FieldView& u, const Point& x, double eps, int j,
                        const std::vector<double>& schedule, const Quadrature& q,
                        double norm_exponent, double floor_cells) {
  if (schedule.empty())
    throw InvalidParameterError("stratum_membership: empty radius schedule");
  SymmetryParams params;
  params.j = j + 1;
  params.eps = eps;
  params.norm_exponent = norm_exponent;
  for (double r : schedule) {
    const SymmetryTest t = symmetric_test(u, x, r, params, q, floor_cells);
    if (t.symmetric) return false;
  }
  return true;
}

} // namespace fblab
