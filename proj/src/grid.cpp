#include "fblab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace fblab {

GridSpec::GridSpec(int dim, int nodes, double ext) : d(dim), n(nodes), extent(ext) {
  if (d != 2 && d != 3) throw InvalidParameterError("GridSpec: d must be 2 or 3");
  if (n < 33 || n % 2 == 0) throw InvalidParameterError("GridSpec: n must be odd and >= 33");
  if (!(extent > 0.0)) throw InvalidParameterError("GridSpec: extent must be positive");
  const long cap = (d == 2) ? 513 : 65;
  if (n > cap) throw InvalidParameterError("GridSpec: n exceeds the supported grid size");
}

VectorField::VectorField(const GridSpec& s, int comps) : spec(s), k(comps) {
  if (k < 1) throw InvalidParameterError("VectorField: k must be >= 1");
  values.assign(static_cast<size_t>(spec.node_count()) * k, 0.0);
}

double VectorField::max_norm() const {
  double m = 0.0;
  const long nn = spec.node_count();
  for (long node = 0; node < nn; ++node) m = std::max(m, norm_at(node));
  return m;
}

void VectorField::sample(const std::function<void(const Point&, std::span<double>)>& f) {
  const long nn = spec.node_count();
  std::vector<double> buf(static_cast<size_t>(k));
  for (long node = 0; node < nn; ++node) {
    f(spec.node_point(node), buf);
    for (int c = 0; c < k; ++c) at(node, c) = buf[static_cast<size_t>(c)];
  }
}

void VectorField::check_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidParameterError("VectorField: non-finite value");
}

double default_tau0(const VectorField& u) { return 1e-12 * u.max_norm(); }

long PhaseSet::count() const {
  long c = 0;
  for (auto m : mask) c += m;
  return c;
}

PhaseSet derive_phase(const VectorField& u, double tau0) {
  PhaseSet p(u.spec);
  const long nn = u.spec.node_count();
  for (long node = 0; node < nn; ++node) p.set(node, u.norm_at(node) > tau0);
  return p;
}

bool window_fits(const GridSpec& spec, const Point& x0, double r, double margin) {
  for (int ax = 0; ax < spec.d; ++ax)
    if (std::abs(x0[ax]) + r + margin > spec.extent) return false;
  return true;
}

BallWindow::BallWindow(const GridSpec& spec, const Point& x0, double r) : center(x0), radius(r) {
  if (!(r > 0.0)) throw WindowError("BallWindow: radius must be positive");
  if (!window_fits(spec, x0, r, 2.0 * spec.h()))
    throw WindowError("BallWindow: ball plus stencil margin leaves the grid cube");
}

long NodeRegion::count() const {
  long c = 0;
  for (auto m : mask) c += m;
  return c;
}

NodeRegion NodeRegion::all(const GridSpec& s) {
  NodeRegion r(s);
  std::fill(r.mask.begin(), r.mask.end(), 1);
  return r;
}

NodeRegion NodeRegion::ball(const GridSpec& s, const Point& center, double radius) {
  NodeRegion r(s);
  const long nn = s.node_count();
  for (long node = 0; node < nn; ++node) {
    const Point p = s.node_point(node);
    if (norm(sub(p, center, s.d), s.d) <= radius) r.mask[static_cast<size_t>(node)] = 1;
  }
  return r;
}

namespace {

struct CellLocation {
  std::array<int, 3> base{0, 0, 0};
  std::array<double, 3> frac{0, 0, 0};
};

CellLocation locate(const GridSpec& spec, const Point& p) {
  if (!spec.contains(p)) throw OutOfDomainError("interpolate: point outside the grid cube");
  CellLocation loc;
  const double h = spec.h();
  for (int ax = 0; ax < spec.d; ++ax) {
    double s = (p[ax] + spec.extent) / h;
    int i = static_cast<int>(std::floor(s));
    i = std::clamp(i, 0, spec.n - 2);
    loc.base[ax] = i;
    loc.frac[ax] = s - i;
  }
  return loc;
}

} // namespace

void interpolate_into(const VectorField& u, const Point& p, std::span<double> out) {
  const GridSpec& spec = u.spec;
  const CellLocation loc = locate(spec, p);
  const int corners = 1 << spec.d;
  for (int c = 0; c < u.k; ++c) out[static_cast<size_t>(c)] = 0.0;
  std::array<int, 3> idx{0, 0, 0};
  for (int corner = 0; corner < corners; ++corner) {
    double w = 1.0;
    for (int ax = 0; ax < spec.d; ++ax) {
      const int bit = (corner >> ax) & 1;
      idx[ax] = loc.base[ax] + bit;
      w *= bit ? loc.frac[ax] : (1.0 - loc.frac[ax]);
    }
    if (w == 0.0) continue;
    const long node = spec.node_index(idx);
    for (int c = 0; c < u.k; ++c) out[static_cast<size_t>(c)] += w * u.at(node, c);
  }
}

std::vector<double> interpolate(const VectorField& u, const Point& p) {
  std::vector<double> out(static_cast<size_t>(u.k));
  interpolate_into(u, p, out);
  return out;
}

void gradient_at_into(const VectorField& u, const Point& p, std::span<double> out) {
  const GridSpec& spec = u.spec;
  const double h = spec.h();
  for (int ax = 0; ax < spec.d; ++ax)
    if (std::abs(p[ax]) > spec.extent - h + 1e-12 * h)
      throw StencilError("gradient_at: point closer than h to the cube boundary");
  std::vector<double> plus(static_cast<size_t>(u.k)), minus(static_cast<size_t>(u.k));
  for (int ax = 0; ax < spec.d; ++ax) {
    Point q = p;
    q[ax] = p[ax] + h;
    interpolate_into(u, q, plus);
    q[ax] = p[ax] - h;
    interpolate_into(u, q, minus);
    const double inv = 1.0 / (2.0 * h);
    for (int c = 0; c < u.k; ++c)
      out[static_cast<size_t>(c) * spec.d + ax] = (plus[static_cast<size_t>(c)] - minus[static_cast<size_t>(c)]) * inv;
  }
}

Mat gradient_at(const VectorField& u, const Point& p) {
  Mat g(u.k, u.spec.d);
  gradient_at_into(u, p, g.a);
  return g;
}

std::vector<long> free_boundary_nodes(const VectorField& u, double tau0) {
  const GridSpec& spec = u.spec;
  const PhaseSet phase = derive_phase(u, tau0);
  std::vector<long> out;
  const long nn = spec.node_count();
  for (long node = 0; node < nn; ++node) {
    if (phase.in(node)) continue;
    const auto idx = spec.node_unpack(node);
    bool positive_neighbor = false;
    for (int ax = 0; ax < spec.d && !positive_neighbor; ++ax) {
      for (int dir = -1; dir <= 1 && !positive_neighbor; dir += 2) {
        auto j = idx;
        j[ax] += dir;
        if (j[ax] < 0 || j[ax] >= spec.n) continue;
        if (phase.in(spec.node_index(j))) positive_neighbor = true;
      }
    }
    if (positive_neighbor) out.push_back(node);
  }
  return out;
}

std::vector<long> thin_nodes(const std::vector<long>& nodes, long max_count) {
  if (static_cast<long>(nodes.size()) <= max_count) return nodes;
  std::vector<long> out;
  const long n = static_cast<long>(nodes.size());
  // ceil stride keeps the subset within max_count while spanning the list
  const long stride = (n + max_count - 1) / max_count;
  for (long i = 0; i < n; i += stride) out.push_back(nodes[static_cast<size_t>(i)]);
  return out;
}

} // namespace fblab
