#include "fblab/field_view.hpp"

#include "fblab/errors.hpp"

namespace fblab {

GridFieldView::GridFieldView(const VectorField& field, double tau0)
    : field_(field), tau0_(tau0 < 0.0 ? default_tau0(field) : tau0) {}

void GridFieldView::value_into(const Point& p, std::span<double> out) const {
  interpolate_into(field_, p, out);
}

void GridFieldView::gradient_into(const Point& p, std::span<double> out) const {
  gradient_at_into(field_, p, out);
}

bool GridFieldView::window_fits(const Point& center, double r, double margin_cells) const {
  return fblab::window_fits(field_.spec, center, r, margin_cells * field_.spec.h());
}

RescaledView::RescaledView(const FieldView& base, const Point& x0, double r)
    : base_(base), x0_(x0), r_(r) {
  if (!(r > 0.0)) throw WindowError("rescale: radius must be positive");
  if (!base.window_fits(x0, r, 2.0))
    throw WindowError("rescale: window B_r(x0) plus stencil margin leaves the domain");
}

void RescaledView::value_into(const Point& p, std::span<double> out) const {
  base_.value_into(map(p), out);
  const double inv = 1.0 / r_;
  for (int c = 0; c < base_.k(); ++c) out[static_cast<size_t>(c)] *= inv;
}

void RescaledView::gradient_into(const Point& p, std::span<double> out) const {
  base_.gradient_into(map(p), out);
}

bool RescaledView::window_fits(const Point& center, double r, double margin_cells) const {
  return base_.window_fits(map(center), r_ * r, margin_cells);
}

} // namespace fblab
