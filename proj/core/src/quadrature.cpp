#include "bwave/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bwave/errors.hpp"

namespace bwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw ParameterError("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

RadialRule radial_rule(double a, double b, int order) {
  if (order < 2) throw ParameterError("radial rule order must be >= 2");
  if (!(b > a)) throw ParameterError("radial rule needs a non-empty interval");
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  RadialRule rule;
  rule.order = order;
  rule.lower = a;
  rule.upper = b;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + half * x[i];
    rule.weights[i] = half * w[i];
  }
  rule.panel_ends = {b};
  return rule;
}

RadialRule radial_rule(const WaveContext& ctx, int order) {
  return radial_rule(0.0, ctx.radius(), order);
}

RadialRule composite_radial_rule(const std::vector<double>& breakpoints, int order) {
  if (breakpoints.empty()) throw ParameterError("composite rule needs a breakpoint");
  RadialRule out;
  out.order = order;
  double a = 0.0;
  for (double b : breakpoints) {
    const RadialRule panel = radial_rule(a, b, order);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
    a = b;
  }
  out.upper = a;
  out.panel_ends = breakpoints;
  return out;
}

RadialRule RadialRule::panel(std::size_t p) const {
  RadialRule r;
  r.order = order;
  r.lower = p == 0 ? lower : panel_ends[p - 1];
  r.upper = panel_ends[p];
  const auto first = static_cast<long>(p * order), last = first + order;
  r.nodes.assign(nodes.begin() + first, nodes.begin() + last);
  r.weights.assign(weights.begin() + first, weights.begin() + last);
  r.panel_ends = {r.upper};
  return r;
}

Point AngularRule::direction(std::size_t i) const {
  if (dimension == 2) {
    const double t = azimuth[i];
    return {std::cos(t), std::sin(t), 0.0};
  }
  const std::size_t na = azimuth.size();
  return unit_vector(polar[i / na], azimuth[i % na]);
}

double AngularRule::weight(std::size_t i) const {
  if (dimension == 2) return azimuth_weight;
  return polar_weights[i / azimuth.size()] * azimuth_weight;
}

AngularRule angular_rule_2d(int count) {
  if (count < 1) throw ParameterError("angular_count must be positive");
  AngularRule rule;
  rule.dimension = 2;
  rule.azimuth.resize(count);
  for (int j = 0; j < count; ++j) rule.azimuth[j] = kTwoPi * j / count;
  rule.azimuth_weight = kTwoPi / count;
  return rule;
}

AngularRule angular_rule_3d(int polar_count, int azimuth_count) {
  if (polar_count < 1 || azimuth_count < 1)
    throw ParameterError("polar_count and azimuth_count must be positive");
  AngularRule rule = angular_rule_2d(azimuth_count);
  rule.dimension = 3;
  std::vector<double> x;
  gauss_legendre(polar_count, x, rule.polar_weights);
  // Increasing theta means decreasing cos(theta).
  rule.polar.resize(polar_count);
  for (int i = 0; i < polar_count; ++i) rule.polar[i] = std::acos(x[polar_count - 1 - i]);
  return rule;
}

AngularRule angular_rule(int dimension, const QuadratureOptions& opts) {
  return dimension == 2 ? angular_rule_2d(opts.angular_count)
                        : angular_rule_3d(opts.polar_count, opts.azimuth_count);
}

BoundaryGrid boundary_grid(const WaveContext& ctx, int resolution) {
  if (resolution < 8) throw ParameterError("resolution must be >= 8");
  BoundaryGrid g;
  g.dimension = ctx.dimension();
  g.radius = ctx.radius();
  g.angular = ctx.dimension() == 2 ? angular_rule_2d(resolution)
                                   : angular_rule_3d(resolution / 2, resolution);
  const double jac = ctx.dimension() == 2 ? ctx.radius() : ctx.radius() * ctx.radius();
  const std::size_t n = g.angular.size();
  g.points.resize(n);
  g.normals.resize(n);
  g.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.normals[i] = g.angular.direction(i);
    g.points[i] = ctx.radius() * g.normals[i];
    g.weights[i] = g.angular.weight(i) * jac;
  }
  return g;
}

Point ProductGrid::point(std::size_t i) const {
  const std::size_t na = angular.size();
  return radial.nodes[i / na] * angular.direction(i % na);
}

double ProductGrid::weight(std::size_t i) const {
  const std::size_t na = angular.size();
  const double r = radial.nodes[i / na];
  const double jac = dimension == 2 ? r : r * r;
  return radial.weights[i / na] * jac * angular.weight(i % na);
}

bool ProductGrid::same_nodes(const ProductGrid& o) const {
  return dimension == o.dimension && radial.nodes == o.radial.nodes &&
         angular.azimuth == o.angular.azimuth && angular.polar == o.angular.polar;
}

ProductGrid product_grid(int dimension, const RadialRule& radial, const AngularRule& angular) {
  if (angular.dimension != dimension)
    throw ParameterError("angular rule dimension does not match");
  return ProductGrid{dimension, radial, angular};
}

cplx integrate(const ProductGrid& grid, const PointFunction& g) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) sum += grid.weight(i) * g(grid.point(i));
  return sum;
}

cplx disk_integrate(const WaveContext& ctx, const PointFunction& g, int radial_order,
                    int angular_count) {
  if (ctx.dimension() != 2) throw ParameterError("disk_integrate needs a 2D context");
  return integrate(product_grid(2, radial_rule(ctx, radial_order), angular_rule_2d(angular_count)),
                   g);
}

cplx ball_integrate(const WaveContext& ctx, const PointFunction& g, int radial_order,
                    int polar_count, int azimuth_count) {
  if (ctx.dimension() != 3) throw ParameterError("ball_integrate needs a 3D context");
  return integrate(
      product_grid(3, radial_rule(ctx, radial_order), angular_rule_3d(polar_count, azimuth_count)),
      g);
}

BarycentricInterpolant::BarycentricInterpolant(const RadialRule& rule)
    : nodes_(rule.nodes), bweights_(rule.nodes.size()) {
  if (static_cast<int>(rule.nodes.size()) != rule.order)
    throw ParameterError("barycentric interpolation needs a single-panel rule");
  const double a = rule.lower, b = rule.upper;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double x = (2.0 * nodes_[j] - (a + b)) / (b - a);
    const double lam = 2.0 * rule.weights[j] / (b - a);
    bweights_[j] = ((j & 1) ? -1.0 : 1.0) * std::sqrt((1.0 - x * x) * lam);
  }
}

cplx BarycentricInterpolant::operator()(const std::vector<cplx>& values, double r) const {
  cplx num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double d = r - nodes_[j];
    if (d == 0.0) return values[j];
    const double c = bweights_[j] / d;
    num += c * values[j];
    den += c;
  }
  return num / den;
}

}  // namespace bwave
