#pragma once

#include <vector>

#include "bwave/context.hpp"
#include "bwave/fields.hpp"
#include "bwave/modal.hpp"
#include "bwave/sources.hpp"

namespace bwave {

/// f^ and f-check on the circle or sphere |xi| = |s| = kappa. Only
/// directions are ever passed in, so off-shell frequencies cannot be
/// requested.
struct SpectralSample {
  Point direction{};
  cplx f_hat;
  cplx f_check;
};

struct SpectralConfig {
  double s_max = 0.0;  ///< bound kappa + K on the domain of f-check; 0 means 2 kappa
  int direction_count = 64;
};

/// 2D: equispaced angles. 3D: floor(sqrt(count)) Gauss latitudes times
/// count / that many azimuths, as in the angular quadrature.
std::vector<Point> direction_grid(int dimension, int count);

/// f^ from the modal series.
std::vector<SpectralSample> fourier_on_circle(const ModalCoefficients& c,
                                              const std::vector<Point>& directions);

/// f-check from the modal series. Throws OverflowError when kappa R > 700.
std::vector<SpectralSample> laplace_on_circle(const ModalCoefficients& c,
                                              const std::vector<Point>& directions);

/// Both transforms.
std::vector<SpectralSample> spectral_samples(const ModalCoefficients& c,
                                             const std::vector<Point>& directions);

/// f^ by direct quadrature of f(x) e^{-i kappa d.x}.
std::vector<cplx> fourier_on_circle_direct(const SourceField& src,
                                           const std::vector<Point>& directions);

/// f-check by direct quadrature of f(x) e^{-kappa d.x}.
std::vector<cplx> laplace_on_circle_direct(const SourceField& src,
                                           const std::vector<Point>& directions);

/// U^(xi) = -int [d_nu Delta u - kappa^2 d_nu u + (i xi.nu)(Delta u - kappa^2 u)]
/// e^{-i xi.y} ds, xi = kappa d.
std::vector<cplx> u_hat_from_trace(const WaveContext& ctx, const BoundaryTrace& trace,
                                   const std::vector<Point>& directions);

/// V-check(s) = -int [d_nu Delta u + kappa^2 d_nu u + (s.nu)(Delta u + kappa^2 u)]
/// e^{-s.y} ds, s = kappa d.
std::vector<cplx> v_check_from_trace(const WaveContext& ctx, const BoundaryTrace& trace,
                                     const std::vector<Point>& directions);

/// max over probes of |int J_0(kappa|x-y|) f dy| + |int Phi_M(x,y) f dy|
/// (j_0 in 3D), through the modal expansions. Probe radii must exceed R.
double nullspace_residual(const ExteriorExpansion& expansion, const std::vector<double>& probe_radii,
                          int directions_per_radius = 16);
double nullspace_residual(const SourceField& src, const std::vector<double>& probe_radii,
                          int N = -1);

struct VerdictConfig {
  int truncation = -1;  ///< < 0 selects default_truncation
  double tolerance = 1e-6;
  std::vector<double> probe_factors{1.05, 1.5, 3.0};  ///< probe radii in units of R
  int probe_directions = 16;
  int direction_count = 64;
  bool stability_check = true;  ///< repeat the modal residual at N + 8
};

struct NonradiatingVerdict {
  double residual_modal = 0.0;     ///< max (|alpha| + |beta|) / norm_f
  double residual_spectral = 0.0;  ///< max (|f^| + |f-check|) / norm_f
  double residual_field = 0.0;     ///< max exterior |u| / interior_scale
  double interior_scale = 0.0;
  double norm_f = 0.0;
  double tolerance = 0.0;
  int N = 0;
  bool is_nonradiating = false;
};

/// Largest Cauchy-Schwarz bound ||G(x, .)||_{L2(B_R)} * norm_f over the
/// probe radii; an upper bound for |u(x)| at those radii.
double interior_reference(const WaveContext& ctx, const std::vector<double>& probe_radii,
                          double norm_f);

/// Runs the modal, spectral and exterior-field tests. A zero source is
/// reported as nonradiating with all residuals 0. Throws
/// InconsistencyError when one family is below tolerance while another is
/// above 100 x tolerance, or when the modal residual crosses the tolerance
/// between N and N + 8.
NonradiatingVerdict verdict(const SourceField& src, const VerdictConfig& config = {});

}  // namespace bwave
