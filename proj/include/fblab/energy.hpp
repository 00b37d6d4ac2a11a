#ifndef FBLAB_ENERGY_HPP
#define FBLAB_ENERGY_HPP

#include <vector>

#include "fblab/field_view.hpp"
#include "fblab/grid.hpp"
#include "fblab/quadrature.hpp"

namespace fblab {

struct EnergyParams {
  double lambda = 1.0;     // energy density of the positivity set
  double eps_smooth = 0.0; // relaxed-indicator width, used by smoothed_energy
  double tau0 = -1.0;      // positivity threshold; < 0 selects 1e-12*max|U|

  EnergyParams() = default;
  EnergyParams(double lam, double eps, double tau) : lambda(lam), eps_smooth(eps), tau0(tau) {}
};

double resolve_tau0(const VectorField& u, const EnergyParams& p);

// Sum over cells meeting the region of |grad U|^2 h^d, with the exact
// multilinear patch gradient evaluated at the cell center. Exact on affine
// fields. A cell meets the region when any of its corners does.
double dirichlet_energy(const VectorField& u, const NodeRegion& region);

// h^d times the number of region cells with some corner above tau0.
double phase_volume(const VectorField& u, const NodeRegion& region, const EnergyParams& p);

// dirichlet_energy + lambda * phase_volume.
double total_energy(const VectorField& u, const NodeRegion& region, const EnergyParams& p);

// Relaxed functional: Dirichlet part plus lambda * sum_cells
// min(|Uc|^2/eps^2, 1) h^d with Uc the cell-center value. Returns the energy
// and its first variation per node per component (same layout as values).
struct SmoothedEnergy {
  double energy = 0.0;
  std::vector<double> variation;
};
SmoothedEnergy smoothed_energy(const VectorField& u, const NodeRegion& region,
                               const EnergyParams& p);

// Quadrature route to the energy of an arbitrary view over a ball window;
// realizes the change-of-variables identity J(U_{x0,r}; B_1) r^d = J(U; B_r).
double ball_energy(const FieldView& view, const BallWindow& w, const EnergyParams& p,
                   const Quadrature& q);

} // namespace fblab

#endif
