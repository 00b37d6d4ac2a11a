#ifndef FBLAB_GRID_HPP
#define FBLAB_GRID_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fblab/errors.hpp"
#include "fblab/linalg.hpp"

namespace fblab {

// Uniform node-centered grid on the cube [-extent, extent]^d. n is odd so the
// origin is a node and coordinates are exact integer multiples of h.
struct GridSpec {
  int d = 2;        // spatial dimension, 2 or 3
  int n = 33;       // nodes per axis, odd, >= 33
  double extent = 1.0;

  GridSpec() = default;
  GridSpec(int dim, int nodes, double ext);

  double h() const { return 2.0 * extent / (n - 1); }
  long node_count() const {
    long c = 1;
    for (int i = 0; i < d; ++i) c *= n;
    return c;
  }
  // coordinate of node index i along one axis; exact at the origin
  double coord(int i) const { return (i - (n - 1) / 2) * h(); }

  long node_index(const std::array<int, 3>& idx) const {
    long s = idx[d - 1];
    for (int ax = d - 2; ax >= 0; --ax) s = s * n + idx[ax];
    return s;
  }
  std::array<int, 3> node_unpack(long node) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) {
      idx[ax] = static_cast<int>(node % n);
      node /= n;
    }
    return idx;
  }
  Point node_point(long node) const {
    const auto idx = node_unpack(node);
    Point p{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) p[ax] = coord(idx[ax]);
    return p;
  }
  bool is_boundary_node(long node) const {
    const auto idx = node_unpack(node);
    for (int ax = 0; ax < d; ++ax)
      if (idx[ax] == 0 || idx[ax] == n - 1) return true;
    return false;
  }
  bool contains(const Point& p) const {
    for (int ax = 0; ax < d; ++ax)
      if (p[ax] < -extent || p[ax] > extent) return false;
    return true;
  }
  long cell_count() const {
    long c = 1;
    for (int i = 0; i < d; ++i) c *= (n - 1);
    return c;
  }
  long cell_index(const std::array<int, 3>& idx) const {
    long s = idx[d - 1];
    for (int ax = d - 2; ax >= 0; --ax) s = s * (n - 1) + idx[ax];
    return s;
  }
  std::array<int, 3> cell_unpack(long cell) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) {
      idx[ax] = static_cast<int>(cell % (n - 1));
      cell /= (n - 1);
    }
    return idx;
  }

  bool operator==(const GridSpec& o) const {
    return d == o.d && n == o.n && extent == o.extent;
  }
};

// k-component sampled field. Storage is node-major, component-minor with
// axis 0 fastest, matching the on-disk layout.
struct VectorField {
  GridSpec spec;
  int k = 1;
  std::vector<double> values; // size node_count()*k

  VectorField() = default;
  VectorField(const GridSpec& s, int comps);

  double& at(long node, int comp) { return values[static_cast<size_t>(node) * k + comp]; }
  double at(long node, int comp) const { return values[static_cast<size_t>(node) * k + comp]; }

  double norm_at(long node) const {
    double s = 0.0;
    for (int c = 0; c < k; ++c) {
      const double v = at(node, c);
      s += v * v;
    }
    return std::sqrt(s);
  }
  double max_norm() const;

  // Fill from an analytic function of the node position.
  void sample(const std::function<void(const Point&, std::span<double>)>& f);

  void check_finite() const; // throws InvalidParameterError on NaN/Inf
};

// Positivity threshold under which a floating-point |U| counts as zero.
double default_tau0(const VectorField& u);

struct PhaseSet {
  GridSpec spec;
  std::vector<std::uint8_t> mask; // 1 = member of the positivity set

  PhaseSet() = default;
  explicit PhaseSet(const GridSpec& s) : spec(s), mask(static_cast<size_t>(s.node_count()), 0) {}

  bool in(long node) const { return mask[static_cast<size_t>(node)] != 0; }
  void set(long node, bool v) { mask[static_cast<size_t>(node)] = v ? 1 : 0; }
  long count() const;
};

// Phase set derived from a field: node is in iff |U(node)| > tau0.
PhaseSet derive_phase(const VectorField& u, double tau0);

// Analysis window B_r(x0). Needs one stencil margin (2h) inside the cube.
struct BallWindow {
  Point center{0, 0, 0};
  double radius = 0.0;

  BallWindow(const GridSpec& spec, const Point& x0, double r);
  BallWindow(const Point& x0, double r) : center(x0), radius(r) {}
};

bool window_fits(const GridSpec& spec, const Point& x0, double r, double margin);

// Node subset used by the energy module.
struct NodeRegion {
  GridSpec spec;
  std::vector<std::uint8_t> mask;

  explicit NodeRegion(const GridSpec& s) : spec(s), mask(static_cast<size_t>(s.node_count()), 0) {}
  bool in(long node) const { return mask[static_cast<size_t>(node)] != 0; }
  long count() const;

  static NodeRegion all(const GridSpec& s);
  static NodeRegion ball(const GridSpec& s, const Point& center, double radius);
};

// Multilinear interpolation of the stored node values. Exact per cell on
// multilinear data; throws OutOfDomainError outside the cube.
void interpolate_into(const VectorField& u, const Point& p, std::span<double> out);
std::vector<double> interpolate(const VectorField& u, const Point& p);

// Componentwise central differences of interpolated values with step h.
// Result is k x d row-major. Requires distance >= h from the cube boundary.
void gradient_at_into(const VectorField& u, const Point& p, std::span<double> out);
Mat gradient_at(const VectorField& u, const Point& p);

// Free-boundary detection: nodes outside the phase with at least one
// face-neighbor inside. Lexicographic node order.
std::vector<long> free_boundary_nodes(const VectorField& u, double tau0);

// Deterministic thinning to at most max_count entries by stride.
std::vector<long> thin_nodes(const std::vector<long>& nodes, long max_count);

} // namespace fblab

#endif
