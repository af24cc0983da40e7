#pragma once

#include <vector>

#include "bwave/context.hpp"
#include "bwave/modal.hpp"
#include "bwave/quadrature.hpp"
#include "bwave/sources.hpp"

namespace bwave {

/// u = (f_h - f_m) / (2 kappa^2) at one point, with f_h = -int Phi_H f and
/// f_m = -int Phi_M f.
struct FieldSample {
  Point point{};
  cplx u;
  cplx f_h;
  cplx f_m;
};

/// Field, radial derivative, Laplacian and radial derivative of the
/// Laplacian outside the support.
struct ExteriorValues {
  FieldSample sample;
  cplx du_dr;
  cplx lap_u;
  cplx dlap_u_dr;
};

/// Radiating solution outside the support ball, evaluated from the modal
/// coefficients. Uses Delta f_h = -kappa^2 f_h and Delta f_m = kappa^2 f_m,
/// so the Laplacian needs no differentiation.
class ExteriorExpansion {
 public:
  ExteriorExpansion(const WaveContext& ctx, ModalCoefficients coeffs, double support_radius);

  /// Projects src with truncation N (default_truncation when N < 0).
  static ExteriorExpansion from_source(const SourceField& src, int N = -1);

  /// Requires |x| >= support radius.
  FieldSample sample(const Point& x) const;
  ExteriorValues values(const Point& x) const;

  const ModalCoefficients& coefficients() const { return coeffs_; }
  const WaveContext& context() const { return ctx_; }
  double support_radius() const { return support_; }

 private:
  WaveContext ctx_;
  ModalCoefficients coeffs_;
  double support_;
};

enum class FieldPath {
  Modal,   ///< exterior multipole series
  Direct,  ///< quadrature of the kernels against the sampled source
};

/// Field at x, |x| >= support radius (strictly greater for Direct).
FieldSample eval_field(const SourceField& src, const Point& x, FieldPath path = FieldPath::Modal,
                       int N = -1);

/// Near-field data on the boundary sphere or circle.
struct BoundaryTrace {
  BoundaryGrid grid;
  std::vector<cplx> u;
  std::vector<cplx> du_dnu;
  std::vector<cplx> lap_u;
  std::vector<cplx> dlap_u_dnu;
};

/// Traces on a grid of radius >= the support radius. A source supported on
/// the whole ball is accepted; the trace is then the exterior limit.
BoundaryTrace boundary_trace(const ExteriorExpansion& expansion, const BoundaryGrid& grid);
BoundaryTrace boundary_trace(const SourceField& src, const BoundaryGrid& grid, int N = -1);

struct FarFieldSample {
  Point direction{};
  cplx u_inf;
};

/// u_inf(d) = f^(kappa d).
FarFieldSample far_field(const ModalCoefficients& coeffs, const Point& direction);
FarFieldSample far_field(const SourceField& src, const Point& direction, int N = -1);

/// Far-field pattern read off a field value at large |x|:
/// -8 kappa^2 u e^{-i kappa |x|} (pi |x|)^{(d-1)/2} / mu_d.
cplx far_field_estimate(const WaveContext& ctx, const FieldSample& s);

}  // namespace bwave
