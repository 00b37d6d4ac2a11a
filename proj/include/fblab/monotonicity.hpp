#ifndef FBLAB_MONOTONICITY_HPP
#define FBLAB_MONOTONICITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fblab/energy.hpp"
#include "fblab/field_view.hpp"
#include "fblab/quadrature.hpp"

namespace fblab {

// Default resolution floor for window-based analyses, in grid cells per
// window radius.
inline constexpr double kRadiusFloorCells = 8.0;

// Dyadic schedule r0, r0/2, ... down to (and including) floor_r, decreasing.
std::vector<double> dyadic_radii(double r0, double floor_r);

RescaledView rescale(const FieldView& base, const Point& x0, double r);

// Boundary-adjusted energy of the rescaling on the unit ball:
//   int_B1 |grad U_{x0,r}|^2 - int_dB1 |U_{x0,r}|^2 + lambda |{|U_{x0,r}|>0} cap B1|.
// Monotone non-decreasing in r for minimizers; constant on 1-homogeneous
// fields centered at x0.
double weiss_energy(const FieldView& u, const Point& x0, double r, const EnergyParams& p,
                    const Quadrature& q, double floor_cells = kRadiusFloorCells);

// Surface term bounding the Weiss derivative from below:
//   sum_l int_dB1 |x . grad u_{l,x0,r} - u_{l,x0,r}|^2.
double weiss_derivative_bound(const FieldView& u, const Point& x0, double r,
                              const Quadrature& q, double floor_cells = kRadiusFloorCells);

struct WeissProfile {
  Point x0{0, 0, 0};
  std::vector<double> radii; // strictly decreasing
  std::vector<double> phi;
  std::vector<double> bound;
};

WeissProfile weiss_profile(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                           const EnergyParams& p, const Quadrature& q,
                           double floor_cells = kRadiusFloorCells);

struct WeissViolation {
  int index = 0;             // pair (index-1, index) of the profile
  bool non_decrease = false; // phi increased as the radius shrank
  bool derivative = false;   // difference quotient fell below the bound
  double amount = 0.0;
};

// Flags monotonicity violations beyond delta and difference quotients below
// the averaged derivative bound minus delta. Needs at least two radii.
std::vector<WeissViolation> weiss_monotonicity_check(const WeissProfile& profile, double delta);

// Product functional of the positive/negative parts of sigma . U:
//   r^-4 (int_{B_r cap {s>0}} |grad s|^2 w) (int_{B_r cap {s<0}} |grad s|^2 w),
// weight w = |x-x0|^{2-d}. In d=3 the singularity is excised on a 2h ball and
// replaced by the analytic contribution with the integrand frozen at its
// mean over the excision sphere.
double acf_functional(const FieldView& u, const std::vector<double>& sigma, const Point& x0,
                      double r, const Quadrature& q, double floor_cells = kRadiusFloorCells);

struct ACFProfile {
  std::vector<double> sigma;
  std::string label;
  std::vector<double> radii;
  std::vector<double> psi;
};

// Volume fraction of the positivity set in B_r(x0), in [0,1] exactly
// (normalized by the quadrature measure of the window).
double density(const FieldView& u, const Point& x0, double r, const Quadrature& q);

enum class PointClassKind { Regular, OnePhaseSingular, TwoPhaseSingular, Inconclusive };

struct PointClass {
  PointClassKind kind = PointClassKind::Inconclusive;
  double density_limit = 0.0;   // extrapolated Lebesgue density
  double phi_limit = 0.0;       // extrapolated Weiss energy at 0+
  double phi_over_lwd = 0.0;    // phi_limit / (lambda * omega_d)
  bool conclusive = false;
  bool cross_check_ok = false;  // |phi_limit - lambda w_d density| <= 5% lambda w_d
  std::vector<double> radii;
  std::vector<double> densities;
  std::vector<double> phis;
};

std::string point_class_name(PointClassKind k);

// Density trichotomy at a free-boundary point: Richardson-extrapolates the
// density in r and the Weiss energy in 1/r over the dyadic schedule, then
// thresholds at tau_class. Reports both the volume and the energy route.
PointClass classify_point(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                          double tau_class, const EnergyParams& p, const Quadrature& q,
                          double floor_cells = kRadiusFloorCells);

} // namespace fblab

#endif
