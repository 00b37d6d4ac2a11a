#include "fblab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "fblab/errors.hpp"

namespace fblab {

namespace {

// Lexicographic comparison used for deterministic eigenvector tie-breaks.
bool lex_less(const Point& a, const Point& b, int d) {
  for (int i = 0; i < d; ++i) {
    if (a[i] < b[i] - 1e-14) return true;
    if (a[i] > b[i] + 1e-14) return false;
  }
  return false;
}

void fix_sign(Point& v, int d) {
  for (int i = 0; i < d; ++i) {
    if (std::abs(v[i]) > 1e-14) {
      if (v[i] < 0.0)
        for (int j = 0; j < d; ++j) v[j] = -v[j];
      return;
    }
  }
}

} // namespace

EigenSym eigen_sym(const SymMat& m) {
  const int d = m.d;
  double a[3][3] = {{0}};
  double v[3][3] = {{0}};
  for (int i = 0; i < d; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < d; ++j) a[i][j] = m(i, j);
  }

  // Cyclic Jacobi sweeps; converges quadratically for these tiny systems.
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < d; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < d; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (int i = 0; i < d; ++i) {
          const double vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  EigenSym e;
  e.d = d;
  std::array<int, 3> order{0, 1, 2};
  std::array<double, 3> vals{};
  std::array<Point, 3> vecs{};
  for (int i = 0; i < d; ++i) {
    vals[i] = a[i][i];
    for (int j = 0; j < d; ++j) vecs[i][j] = v[j][i];
    fix_sign(vecs[i], d);
  }
  std::sort(order.begin(), order.begin() + d, [&](int i, int j) {
    if (vals[i] != vals[j]) return vals[i] > vals[j];
    return lex_less(vecs[i], vecs[j], d);
  });
  for (int i = 0; i < d; ++i) {
    e.values[i] = vals[order[i]];
    e.vectors[i] = vecs[order[i]];
  }
  return e;
}

Svd svd_kd(const Mat& a) {
  const int d = a.cols;
  SymMat g(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int r = 0; r < a.rows; ++r) s += a(r, i) * a(r, j);
      g(i, j) = s;
    }
  EigenSym e = eigen_sym(g);
  Svd out;
  out.rank_cols = d;
  for (int i = 0; i < d; ++i) {
    out.singular[i] = std::sqrt(std::max(0.0, e.values[i]));
    out.right[i] = e.vectors[i];
  }
  return out;
}

Mat svd_truncate(const Mat& a, const Svd& s, int keep) {
  Mat out(a.rows, a.cols);
  keep = std::min(keep, a.cols);
  for (int m = 0; m < keep; ++m) {
    // u_m s_m = A v_m
    std::vector<double> av(static_cast<size_t>(a.rows), 0.0);
    for (int r = 0; r < a.rows; ++r) {
      double t = 0.0;
      for (int c = 0; c < a.cols; ++c) t += a(r, c) * s.right[m][c];
      av[static_cast<size_t>(r)] = t;
    }
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) out(r, c) += av[static_cast<size_t>(r)] * s.right[m][c];
  }
  return out;
}

std::array<double, 3> solve_spd(const SymMat& g, const std::array<double, 3>& b) {
  const int d = g.d;
  double l[3][3] = {{0}};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) throw InvalidParameterError("solve_spd: matrix not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  std::array<double, 3> y{}, x{};
  for (int i = 0; i < d; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l[i][k] * y[k];
    y[i] = s / l[i][i];
  }
  for (int i = d - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < d; ++k) s -= l[k][i] * x[k];
    x[i] = s / l[i][i];
  }
  return x;
}

} // namespace fblab
