#pragma once

#include <functional>
#include <vector>

#include "bwave/context.hpp"

namespace bwave {

/// Orders used when a source is sampled for integration.
struct QuadratureOptions {
  int radial_order = 64;    ///< Gauss-Legendre points per radial panel
  int angular_count = 256;  ///< 2D: equispaced angles
  int polar_count = 32;     ///< 3D: Gauss points in cos(theta)
  int azimuth_count = 64;   ///< 3D: equispaced azimuths

  bool operator==(const QuadratureOptions&) const = default;
};

/// n-point Gauss-Legendre nodes (increasing) and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Legendre rule in r. Weights integrate dr; callers add r or r^2.
/// A rule may consist of several panels, each carrying `order` points.
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> panel_ends;  ///< upper end of each panel

  std::size_t panels() const { return panel_ends.size(); }
  /// The p-th panel as a single-panel rule.
  RadialRule panel(std::size_t p) const;

  std::size_t size() const { return nodes.size(); }
};

/// order >= 2 points on [0, R].
RadialRule radial_rule(const WaveContext& ctx, int order);

/// order >= 2 points on [a, b].
RadialRule radial_rule(double a, double b, int order);

/// One Gauss panel per interval [0, b_0], [b_0, b_1], ... Breakpoints must
/// be positive and increasing.
RadialRule composite_radial_rule(const std::vector<double>& breakpoints, int order);

/// Angular rule: 2D equispaced trapezoid, 3D Gauss in cos(theta) times
/// equispaced phi.
struct AngularRule {
  int dimension = 2;
  std::vector<double> polar;          ///< theta nodes (3D only)
  std::vector<double> polar_weights;  ///< weights in cos(theta) (3D only)
  std::vector<double> azimuth;        ///< equispaced angles in [0, 2 pi)
  double azimuth_weight = 0.0;        ///< 2 pi / azimuth.size()

  std::size_t size() const {
    return dimension == 2 ? azimuth.size() : polar.size() * azimuth.size();
  }
  /// Unit vector and weight of flat index i (polar-major in 3D).
  Point direction(std::size_t i) const;
  double weight(std::size_t i) const;
};

AngularRule angular_rule_2d(int count);
AngularRule angular_rule_3d(int polar_count, int azimuth_count);
AngularRule angular_rule(int dimension, const QuadratureOptions& opts);

/// Points on the sphere or circle of radius R with outward normals.
struct BoundaryGrid {
  int dimension = 2;
  double radius = 0.0;
  AngularRule angular;
  std::vector<Point> points;
  std::vector<Point> normals;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// 2D: `resolution` equispaced points. 3D: resolution/2 Gauss latitudes
/// times `resolution` azimuths. resolution >= 8.
BoundaryGrid boundary_grid(const WaveContext& ctx, int resolution);

/// Tensor-product rule over a ball of radius `radius` (<= anything), with
/// the Jacobian r dr dtheta or r^2 dr dOmega folded into the weights.
struct ProductGrid {
  int dimension = 2;
  RadialRule radial;
  AngularRule angular;

  std::size_t size() const { return radial.size() * angular.size(); }
  /// Flat index is i_radial * angular.size() + i_angular.
  Point point(std::size_t i) const;
  double weight(std::size_t i) const;

  bool same_nodes(const ProductGrid& other) const;
};

ProductGrid product_grid(int dimension, const RadialRule& radial, const AngularRule& angular);

using PointFunction = std::function<cplx(const Point&)>;

/// Integral of g over B_R in 2D.
cplx disk_integrate(const WaveContext& ctx, const PointFunction& g, int radial_order,
                    int angular_count);

/// Integral of g over B_R in 3D.
cplx ball_integrate(const WaveContext& ctx, const PointFunction& g, int radial_order,
                    int polar_count, int azimuth_count);

/// Sum of w_i g(x_i) over a grid, accumulated in index order.
cplx integrate(const ProductGrid& grid, const PointFunction& g);

/// Barycentric Lagrange interpolation through the nodes of a single-panel
/// Gauss-Legendre rule.
class BarycentricInterpolant {
 public:
  explicit BarycentricInterpolant(const RadialRule& rule);

  /// Interpolates values given at the nodes. Exact at the nodes.
  cplx operator()(const std::vector<cplx>& values, double r) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> bweights_;
};

}  // namespace bwave
