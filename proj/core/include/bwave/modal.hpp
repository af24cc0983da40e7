#pragma once

#include <vector>

#include "bwave/context.hpp"
#include "bwave/sources.hpp"

namespace bwave {

/// alpha_n = int f_n J_n(kappa r) r dr, beta_n = int f_n J_n(i kappa r) r dr
/// (2D), and the spherical analogues with j_n and r^2 dr (3D).
///
/// beta is also kept without its phase i^n as `beta_real_phase`:
/// B_n = int f_n I_n(kappa r) r dr, resp. int f_n^m i_n(kappa r) r^2 dr with
/// i_n the modified spherical Bessel function, so that beta = i^n B.
struct ModalCoefficients {
  int dimension = 2;
  int N = 0;
  double norm_f = 0.0;
  std::vector<cplx> alpha;
  std::vector<cplx> beta;
  std::vector<cplx> beta_real_phase;

  std::size_t slot(int n, int m = 0) const;
  std::size_t size() const { return alpha.size(); }
  cplx alpha_at(int n, int m = 0) const { return alpha[slot(n, m)]; }
  cplx beta_at(int n, int m = 0) const { return beta[slot(n, m)]; }

  /// Degree n of slot s.
  int degree(std::size_t s) const;
  /// Order m of slot s (0 in 2D).
  int order(std::size_t s) const;
};

/// Spectral truncation default 2 ceil(kappa R) + 16.
int default_truncation(const WaveContext& ctx);

/// Coefficients up to N. Throws OverflowError if kappa R exceeds the range
/// of I_n.
ModalCoefficients modal_coefficients(const SourceField& src, int N);

/// f^(kappa d) = int f e^{-i kappa d.x} dx from the alpha coefficients:
/// 2 pi sum (-i)^n alpha_n e^{i n arg d} (2D), 4 pi sum (-i)^n alpha_n^m Y_n^m(d) (3D).
cplx transform_from_alpha(const ModalCoefficients& c, const Point& direction);

/// f-check(kappa d) = int f e^{-kappa d.x} dx from the beta coefficients:
/// 2 pi sum i^n beta_n e^{i n arg d} (2D), 4 pi sum i^n beta_n^m Y_n^m(d) (3D).
cplx transform_from_beta(const ModalCoefficients& c, const Point& direction);

}  // namespace bwave
