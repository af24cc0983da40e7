#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace bwave {

using cplx = std::complex<double>;

/// Point or direction in R^2 or R^3. Two-dimensional problems leave the
/// third component at zero.
using Point = std::array<double, 3>;

inline double dot(const Point& a, const Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point operator-(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Point operator+(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point operator*(double s, const Point& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

/// Polar angle (2D) of x measured counter-clockwise from (1, 0).
inline double polar_angle(const Point& x) { return std::atan2(x[1], x[0]); }

/// Spherical angles (theta in [0, pi], phi in (-pi, pi]) of x != 0.
struct SphericalAngles {
  double theta;
  double phi;
};

SphericalAngles spherical_angles(const Point& x);

/// Unit vector with the given spherical angles.
Point unit_vector(double theta, double phi);

/// Dimension, wavenumber and support-ball radius shared by every operation.
class WaveContext {
 public:
  /// Throws ParameterError unless dimension is 2 or 3 and kappa, radius are
  /// positive and finite.
  WaveContext(int dimension, double kappa, double radius);

  /// Context whose wavenumber puts kappa * radius on the k-th positive zero
  /// of J_0 (2D) or j_0 (3D), k >= 1.
  static WaveContext at_bessel_root(int dimension, double radius, int root_index);

  int dimension() const noexcept { return dimension_; }
  double kappa() const noexcept { return kappa_; }
  double radius() const noexcept { return radius_; }

  bool operator==(const WaveContext&) const = default;

 private:
  int dimension_;
  double kappa_;
  double radius_;
};

/// Far-field normalisation mu_d: sqrt(2/kappa) e^{i pi/4} in 2D, 1 in 3D.
struct FarFieldConvention {
  cplx mu;

  static FarFieldConvention for_context(const WaveContext& ctx);
};

}  // namespace bwave
