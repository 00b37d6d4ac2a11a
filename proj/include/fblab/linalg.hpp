#ifndef FBLAB_LINALG_HPP
#define FBLAB_LINALG_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace fblab {

// Spatial points live in at most 3 dimensions; unused trailing entries are 0.
using Point = std::array<double, 3>;

inline Point make_point(double x, double y = 0.0, double z = 0.0) { return {x, y, z}; }

inline double dot(const Point& a, const Point& b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Point& a, int d) { return std::sqrt(dot(a, a, d)); }

inline Point axpy(double a, const Point& x, const Point& y, int d) {
  Point r{0.0, 0.0, 0.0};
  for (int i = 0; i < d; ++i) r[i] = a * x[i] + y[i];
  return r;
}

inline Point sub(const Point& a, const Point& b, int d) {
  Point r{0.0, 0.0, 0.0};
  for (int i = 0; i < d; ++i) r[i] = a[i] - b[i];
  return r;
}

// Dense row-major k x d matrix with small k (field components) and d <= 3.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  double frobenius_sq() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
  }
};

// Symmetric d x d matrix, d <= 3, stored dense.
struct SymMat {
  int d = 0;
  std::array<double, 9> a{};

  explicit SymMat(int dim = 0) : d(dim) { a.fill(0.0); }
  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * 3 + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * 3 + j]; }
  double trace() const {
    double t = 0.0;
    for (int i = 0; i < d; ++i) t += (*this)(i, i);
    return t;
  }
};

struct EigenSym {
  int d = 0;
  std::array<double, 3> values{};        // descending
  std::array<Point, 3> vectors{};        // orthonormal, vectors[i] pairs values[i]
};

// Cyclic Jacobi eigensolver for symmetric d x d, d <= 3. Deterministic:
// eigenvalues sorted descending, ties broken by ordering eigenvectors
// lexicographically with the first nonzero entry made positive.
EigenSym eigen_sym(const SymMat& m);

// Singular value decomposition of a k x d matrix (d <= 3) through the
// eigen-decomposition of A^T A. Returns singular values descending with the
// matching right singular vectors; left vectors are recovered as A v / s.
struct Svd {
  int rank_cols = 0;                      // = cols of A
  std::array<double, 3> singular{};       // descending, >= 0
  std::array<Point, 3> right{};           // orthonormal in R^d
};
Svd svd_kd(const Mat& a);

// Rank-m truncation A_m = sum_{i<m} s_i (A v_i) v_i^T built from svd_kd.
Mat svd_truncate(const Mat& a, const Svd& s, int keep);

// Solve the SPD system G x = b for d <= 3 (Cholesky; throws on non-SPD).
std::array<double, 3> solve_spd(const SymMat& g, const std::array<double, 3>& b);

} // namespace fblab

#endif
