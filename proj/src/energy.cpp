#include "fblab/energy.hpp"

#include <cmath>

#include "fblab/errors.hpp"

namespace fblab {

namespace {

// Corner node indices of a cell, in bit order (bit ax set = high side on ax).
void cell_corners(const GridSpec& spec, const std::array<int, 3>& cell,
                  std::array<long, 8>& out) {
  const int corners = 1 << spec.d;
  for (int corner = 0; corner < corners; ++corner) {
    std::array<int, 3> idx = cell;
    for (int ax = 0; ax < spec.d; ++ax) idx[ax] += (corner >> ax) & 1;
    out[static_cast<size_t>(corner)] = spec.node_index(idx);
  }
}

bool cell_in_region(const NodeRegion& region, const std::array<long, 8>& corners, int ncorners) {
  for (int c = 0; c < ncorners; ++c)
    if (region.in(corners[static_cast<size_t>(c)])) return true;
  return false;
}

// Multilinear patch gradient at the cell center for one component:
// difference of high/low corner averages along each axis over h.
void cell_gradient(const VectorField& u, const std::array<long, 8>& corners, int comp,
                   double* g) {
  const GridSpec& spec = u.spec;
  const int ncorners = 1 << spec.d;
  const double inv = 1.0 / ((ncorners / 2) * spec.h());
  for (int ax = 0; ax < spec.d; ++ax) {
    double diff = 0.0;
    for (int corner = 0; corner < ncorners; ++corner) {
      const double v = u.at(corners[static_cast<size_t>(corner)], comp);
      diff += ((corner >> ax) & 1) ? v : -v;
    }
    g[ax] = diff * inv;
  }
}

template <typename PerCell>
void for_each_region_cell(const GridSpec& spec, const NodeRegion& region, PerCell&& f) {
  const int ncorners = 1 << spec.d;
  std::array<long, 8> corners{};
  std::array<int, 3> cell{0, 0, 0};
  const long ncells = spec.cell_count();
  for (long ci = 0; ci < ncells; ++ci) {
    cell = spec.cell_unpack(ci);
    cell_corners(spec, cell, corners);
    if (!cell_in_region(region, corners, ncorners)) continue;
    f(corners);
  }
}

} // namespace

double resolve_tau0(const VectorField& u, const EnergyParams& p) {
  return p.tau0 < 0.0 ? default_tau0(u) : p.tau0;
}

double dirichlet_energy(const VectorField& u, const NodeRegion& region) {
  const GridSpec& spec = u.spec;
  const double hd = std::pow(spec.h(), spec.d);
  double g[3];
  double total = 0.0;
  for_each_region_cell(spec, region, [&](const std::array<long, 8>& corners) {
    double e = 0.0;
    for (int comp = 0; comp < u.k; ++comp) {
      cell_gradient(u, corners, comp, g);
      for (int ax = 0; ax < spec.d; ++ax) e += g[ax] * g[ax];
    }
    total += e * hd;
  });
  return total;
}

double phase_volume(const VectorField& u, const NodeRegion& region, const EnergyParams& p) {
  const GridSpec& spec = u.spec;
  const double tau0 = resolve_tau0(u, p);
  const double hd = std::pow(spec.h(), spec.d);
  const int ncorners = 1 << spec.d;
  long count = 0;
  for_each_region_cell(spec, region, [&](const std::array<long, 8>& corners) {
    for (int c = 0; c < ncorners; ++c) {
      if (u.norm_at(corners[static_cast<size_t>(c)]) > tau0) {
        ++count;
        return;
      }
    }
  });
  return hd * static_cast<double>(count);
}

double total_energy(const VectorField& u, const NodeRegion& region, const EnergyParams& p) {
  return dirichlet_energy(u, region) + p.lambda * phase_volume(u, region, p);
}

SmoothedEnergy smoothed_energy(const VectorField& u, const NodeRegion& region,
                               const EnergyParams& p) {
  if (!(p.eps_smooth > 0.0))
    throw InvalidParameterError("smoothed_energy: eps_smooth must be positive");
  const GridSpec& spec = u.spec;
  const double hd = std::pow(spec.h(), spec.d);
  const int ncorners = 1 << spec.d;
  const double grad_scale = 1.0 / ((ncorners / 2) * spec.h());
  const double eps2 = p.eps_smooth * p.eps_smooth;

  SmoothedEnergy out;
  out.variation.assign(u.values.size(), 0.0);
  double g[3];
  std::vector<double> center(static_cast<size_t>(u.k));

  for_each_region_cell(spec, region, [&](const std::array<long, 8>& corners) {
    // Dirichlet part and its variation
    for (int comp = 0; comp < u.k; ++comp) {
      cell_gradient(u, corners, comp, g);
      double e = 0.0;
      for (int ax = 0; ax < spec.d; ++ax) e += g[ax] * g[ax];
      out.energy += e * hd;
      for (int corner = 0; corner < ncorners; ++corner) {
        const long node = corners[static_cast<size_t>(corner)];
        double dv = 0.0;
        for (int ax = 0; ax < spec.d; ++ax) {
          const double sign = ((corner >> ax) & 1) ? 1.0 : -1.0;
          dv += 2.0 * g[ax] * sign * grad_scale;
        }
        out.variation[static_cast<size_t>(node) * u.k + comp] += dv * hd;
      }
    }
    // relaxed indicator on the cell-center value
    double norm2 = 0.0;
    for (int comp = 0; comp < u.k; ++comp) {
      double s = 0.0;
      for (int corner = 0; corner < ncorners; ++corner)
        s += u.at(corners[static_cast<size_t>(corner)], comp);
      center[static_cast<size_t>(comp)] = s / ncorners;
      norm2 += center[static_cast<size_t>(comp)] * center[static_cast<size_t>(comp)];
    }
    if (norm2 >= eps2) {
      out.energy += p.lambda * hd;
    } else {
      out.energy += p.lambda * hd * norm2 / eps2;
      const double coef = p.lambda * hd * 2.0 / (eps2 * ncorners);
      for (int corner = 0; corner < ncorners; ++corner) {
        const long node = corners[static_cast<size_t>(corner)];
        for (int comp = 0; comp < u.k; ++comp)
          out.variation[static_cast<size_t>(node) * u.k + comp] +=
              coef * center[static_cast<size_t>(comp)];
      }
    }
  });
  return out;
}

double ball_energy(const FieldView& view, const BallWindow& w, const EnergyParams& p,
                   const Quadrature& q) {
  const int d = view.dim();
  const int k = view.k();
  std::vector<double> grad(static_cast<size_t>(k) * d);
  std::vector<double> val(static_cast<size_t>(k));
  const double tau = view.support_threshold();
  return ball_integral(
      [&](const Point& x) {
        view.gradient_into(x, grad);
        double e = 0.0;
        for (double gv : grad) e += gv * gv;
        view.value_into(x, val);
        double n2 = 0.0;
        for (double v : val) n2 += v * v;
        if (n2 > tau * tau) e += p.lambda;
        return e;
      },
      w, q, d);
}

} // namespace fblab
