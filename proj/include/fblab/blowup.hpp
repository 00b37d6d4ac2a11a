#ifndef FBLAB_BLOWUP_HPP
#define FBLAB_BLOWUP_HPP

#include <vector>

#include "fblab/field_view.hpp"
#include "fblab/linalg.hpp"
#include "fblab/monotonicity.hpp"
#include "fblab/quadrature.hpp"

namespace fblab {

// Least-squares linear model of U - U(x0) over B_r(x0). With isotropic ball
// moments the continuum solution is A_li = (d+2)/(w_d r^{d+2}) int u_l y_i;
// here the weighted quadrature Gram replaces the analytic moments so exact
// linear inputs are recovered to machine precision.
struct BlowupFit {
  Mat A;                          // k x d
  double residual = 0.0;          // (1/r^{d+2}) int_{B_r} |U - U(x0) - A y|^2
  std::array<double, 3> singular{}; // descending
  double offset_norm = 0.0;       // |U(x0)| subtracted before fitting
  bool nonboundary = false;       // offset larger than 10 grid cells
};

BlowupFit fit_linear_blowup(const FieldView& u, const Point& x0, double r, const Quadrature& q,
                            double floor_cells = kRadiusFloorCells);

// Count of singular values within tol_rank of the largest; 0 for the zero matrix.
int rank_estimate(const Mat& a, double tol_rank);

struct BlowupTrace {
  Point x0{0, 0, 0};
  std::vector<double> radii;                    // strictly decreasing
  std::vector<BlowupFit> fits;                  // per radius
  std::vector<std::vector<double>> sigma_norms; // [radius][probe] |A_r^t sigma|
  std::vector<std::vector<double>> sigmas;      // probe vectors in R^k
};

BlowupTrace blowup_trace(const FieldView& u, const Point& x0, const std::vector<double>& radii,
                         const std::vector<std::vector<double>>& sigmas, const Quadrature& q,
                         double floor_cells = kRadiusFloorCells);

// Worst relative variation of |A_r^t sigma| across radius pairs and probes.
double blowup_consistency_check(const BlowupTrace& trace, double floor_value = 1e-9);

struct SymmetryParams {
  int j = 1;                 // requested symmetry count; candidate rank is d - j
  double eps = 1e-2;         // normalized squared-distance threshold
  double norm_exponent = -1; // power of r in the normalization; < 0 selects d+2
};

struct SymmetryTest {
  bool symmetric = false;
  bool feasible = true; // d - j <= min(k, d)
  Mat A;                // rank-constrained best linear model
  double distance = 0.0;
};

// (j, eps)-symmetry probe: distance of U - U(x) on B_r(x) to the best linear
// model of rank d-j, normalized by r^norm_exponent. The constrained model is
// the SVD truncation of the unconstrained fit (valid because the ball-moment
// Gram is isotropic up to quadrature error).
SymmetryTest symmetric_test(const FieldView& u, const Point& x, double r,
                            const SymmetryParams& params, const Quadrature& q,
                            double floor_cells = kRadiusFloorCells);

// x in S^j_eps: U is not (j+1, eps)-symmetric in B_r(x) at every schedule radius.
bool stratum_membership(const FieldView& u, const Point& x, double eps, int j,
                        const std::vector<double>& schedule, const Quadrature& q,
                        double norm_exponent = -1, double floor_cells = kRadiusFloorCells);

} // namespace fblab

#endif
