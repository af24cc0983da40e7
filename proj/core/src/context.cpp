#include "bwave/context.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "bwave/errors.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

SphericalAngles spherical_angles(const Point& x) {
  const double r = norm(x);
  if (r == 0.0) return {0.0, 0.0};
  const double c = std::clamp(x[2] / r, -1.0, 1.0);
  return {std::acos(c), std::atan2(x[1], x[0])};
}

Point unit_vector(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

WaveContext::WaveContext(int dimension, double kappa, double radius)
    : dimension_(dimension), kappa_(kappa), radius_(radius) {
  if (dimension != 2 && dimension != 3)
    throw ParameterError("dimension must be 2 or 3, got " + std::to_string(dimension));
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw ParameterError("kappa must be positive and finite");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ParameterError("R must be positive and finite");
}

WaveContext WaveContext::at_bessel_root(int dimension, double radius, int root_index) {
  if (root_index < 1) throw ParameterError("root_index must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ParameterError("R must be positive and finite");
  const double root = dimension == 3 ? root_index * std::numbers::pi
                                     : specfun::bessel_j0_zero(root_index);
  return WaveContext(dimension, root / radius, radius);
}

FarFieldConvention FarFieldConvention::for_context(const WaveContext& ctx) {
  if (ctx.dimension() == 3) return {cplx(1.0, 0.0)};
  return {std::sqrt(2.0 / ctx.kappa()) * std::polar(1.0, std::numbers::pi / 4.0)};
}

}  // namespace bwave
