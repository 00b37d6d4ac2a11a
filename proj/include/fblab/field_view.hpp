#ifndef FBLAB_FIELD_VIEW_HPP
#define FBLAB_FIELD_VIEW_HPP

#include <span>
#include <vector>

#include "fblab/grid.hpp"
#include "fblab/linalg.hpp"

namespace fblab {

// Read-only evaluation interface shared by stored fields and their lazy
// rescalings U_{x0,r}(x) = U(x0 + r x)/r. Views do not own the underlying
// field; keep the base alive for the view's lifetime.
class FieldView {
 public:
  virtual ~FieldView() = default;

  virtual int k() const = 0;
  virtual int dim() const = 0;

  virtual void value_into(const Point& p, std::span<double> out) const = 0;
  // k x d row-major; gradients of the rescaling are the base gradients at
  // the mapped point.
  virtual void gradient_into(const Point& p, std::span<double> out) const = 0;

  // |value| threshold below which the field counts as zero at this view's
  // scale (base tau0 divided by the accumulated rescaling factor).
  virtual double support_threshold() const = 0;

  // Grid spacing expressed in this view's coordinates.
  virtual double native_spacing() const = 0;

  // Whether B_r(center) plus margin_cells grid cells fits the base domain.
  virtual bool window_fits(const Point& center, double r, double margin_cells) const = 0;

  double value_norm(const Point& p) const {
    std::vector<double> buf(static_cast<size_t>(k()));
    value_into(p, buf);
    double s = 0.0;
    for (double v : buf) s += v * v;
    return std::sqrt(s);
  }
  bool positive_at(const Point& p, std::span<double> scratch) const {
    value_into(p, scratch);
    double s = 0.0;
    for (int c = 0; c < k(); ++c) s += scratch[static_cast<size_t>(c)] * scratch[static_cast<size_t>(c)];
    return std::sqrt(s) > support_threshold();
  }
};

class GridFieldView : public FieldView {
 public:
  // tau0 < 0 selects the default 1e-12 * max|U|.
  explicit GridFieldView(const VectorField& field, double tau0 = -1.0);

  int k() const override { return field_.k; }
  int dim() const override { return field_.spec.d; }
  void value_into(const Point& p, std::span<double> out) const override;
  void gradient_into(const Point& p, std::span<double> out) const override;
  double support_threshold() const override { return tau0_; }
  double native_spacing() const override { return field_.spec.h(); }
  bool window_fits(const Point& center, double r, double margin_cells) const override;

  const VectorField& field() const { return field_; }

 private:
  const VectorField& field_;
  double tau0_;
};

class RescaledView : public FieldView {
 public:
  RescaledView(const FieldView& base, const Point& x0, double r);

  int k() const override { return base_.k(); }
  int dim() const override { return base_.dim(); }
  void value_into(const Point& p, std::span<double> out) const override;
  void gradient_into(const Point& p, std::span<double> out) const override;
  double support_threshold() const override { return base_.support_threshold() / r_; }
  double native_spacing() const override { return base_.native_spacing() / r_; }
  bool window_fits(const Point& center, double r, double margin_cells) const override;

  Point map(const Point& p) const {
    Point q{0, 0, 0};
    for (int ax = 0; ax < base_.dim(); ++ax) q[ax] = x0_[ax] + r_ * p[ax];
    return q;
  }

 private:
  const FieldView& base_;
  Point x0_;
  double r_;
};

} // namespace fblab

#endif
