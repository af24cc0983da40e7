#include "bwave/sources.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "bwave/errors.hpp"
#include "bwave/specfun.hpp"

namespace bwave {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const QuadratureOptions& o) {
  if (o.radial_order < 2) throw ParameterError("radial_order must be >= 2");
  if (o.angular_count < 1 || o.polar_count < 1 || o.azimuth_count < 1)
    throw ParameterError("angular quadrature counts must be positive");
}

QuadratureOptions merge(const QuadratureOptions& a, const QuadratureOptions& b) {
  return {std::max(a.radial_order, b.radial_order), std::max(a.angular_count, b.angular_count),
          std::max(a.polar_count, b.polar_count), std::max(a.azimuth_count, b.azimuth_count)};
}

}  // namespace

std::size_t ModeTable::slot(ModeIndex k) const {
  return dimension == 2 ? static_cast<std::size_t>(k.n + N)
                        : static_cast<std::size_t>(specfun::sph_index(k.n, k.m));
}

std::size_t ModeTable::slot_count() const {
  return dimension == 2 ? static_cast<std::size_t>(2 * N + 1)
                        : static_cast<std::size_t>((N + 1) * (N + 1));
}

bool ModeTable::contains(ModeIndex k) const {
  if (dimension == 2) return std::abs(k.n) <= N;
  return k.n >= 0 && k.n <= N && std::abs(k.m) <= k.n;
}

ModeTable project_samples(int N, const ProductGrid& grid, const std::vector<cplx>& values) {
  if (N < 0) throw ParameterError("truncation must be non-negative");
  if (values.size() != grid.size()) throw ParameterError("sample count does not match the grid");
  ModeTable t;
  t.dimension = grid.dimension;
  t.N = N;
  t.rule = grid.radial;
  const std::size_t nr = grid.radial.size();
  t.values.assign(t.slot_count(), std::vector<cplx>(nr, 0.0));
  const auto& az = grid.angular.azimuth;
  const std::size_t na = az.size();
  // twiddle[(m + N) * na + q] = e^{-i m phi_q}
  std::vector<cplx> twiddle((2 * N + 1) * na);
  for (int m = -N; m <= N; ++m)
    for (std::size_t q = 0; q < na; ++q)
      twiddle[(m + N) * na + q] = std::polar(1.0, -m * az[q]);

  if (grid.dimension == 2) {
    const double w = 1.0 / static_cast<double>(na);
    for (std::size_t i = 0; i < nr; ++i) {
      const cplx* row = values.data() + i * na;
      for (int n = -N; n <= N; ++n) {
        cplx s = 0.0;
        const cplx* tw = twiddle.data() + (n + N) * na;
        for (std::size_t q = 0; q < na; ++q) s += row[q] * tw[q];
        t.values[n + N][i] = s * w;
      }
    }
    return t;
  }

  const std::size_t np = grid.angular.polar.size();
  std::vector<std::vector<cplx>> legendre(np);
  for (std::size_t p = 0; p < np; ++p)
    legendre[p] = specfun::sph_harmonics(N, grid.angular.polar[p], 0.0);
  std::vector<cplx> fm(2 * N + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t p = 0; p < np; ++p) {
      const cplx* row = values.data() + (i * np + p) * na;
      for (int m = -N; m <= N; ++m) {
        cplx s = 0.0;
        const cplx* tw = twiddle.data() + (m + N) * na;
        for (std::size_t q = 0; q < na; ++q) s += row[q] * tw[q];
        fm[m + N] = s * grid.angular.azimuth_weight;
      }
      const double wp = grid.angular.polar_weights[p];
      for (int n = 0; n <= N; ++n)
        for (int m = -n; m <= n; ++m) {
          const int k = specfun::sph_index(n, m);
          t.values[k][i] += wp * std::conj(legendre[p][k]) * fm[m + N];
        }
    }
  }
  return t;
}

// ---- SourceField -----------------------------------------------------------

struct SourceField::Term {
  SourceKind kind = SourceKind::Callable;
  int dimension = 2;
  double support = 0.0;
  QuadratureOptions opts;
  PointFunction f;
  std::map<ModeIndex, RadialProfile> profiles;
  int max_degree = 0;
  ProductGrid grid;
  std::vector<cplx> values;

  ProductGrid native_grid() const {
    if (kind == SourceKind::Grid) return grid;
    return product_grid(dimension, radial_rule(0.0, support, opts.radial_order),
                        angular_rule(dimension, opts));
  }

  cplx eval(const Point& x) const {
    const double r = norm(x);
    if (r >= support) return 0.0;
    switch (kind) {
      case SourceKind::Callable:
        return f(x);
      case SourceKind::Modal: {
        cplx s = 0.0;
        if (dimension == 2) {
          const double th = polar_angle(x);
          for (const auto& [k, p] : profiles) s += p(r) * std::polar(1.0, k.n * th);
          return s;
        }
        const auto a = spherical_angles(x);
        const auto y = specfun::sph_harmonics(max_degree, a.theta, a.phi);
        for (const auto& [k, p] : profiles) s += p(r) * y[specfun::sph_index(k.n, k.m)];
        return s;
      }
      case SourceKind::Grid:
        break;
    }
    throw PreconditionError("grid sources are only defined at their quadrature nodes");
  }

  std::vector<cplx> sample(const ProductGrid& g) const {
    if (kind == SourceKind::Grid && g.same_nodes(grid)) return values;
    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = eval(g.point(i));
    return v;
  }

  ModeTable modes(int N) const {
    if (kind == SourceKind::Modal) {
      ModeTable t;
      t.dimension = dimension;
      t.N = N;
      t.rule = radial_rule(0.0, support, opts.radial_order);
      t.values.assign(t.slot_count(), std::vector<cplx>(t.rule.size(), 0.0));
      for (const auto& [k, p] : profiles) {
        if (!t.contains(k)) continue;
        auto& row = t.values[t.slot(k)];
        for (std::size_t i = 0; i < t.rule.size(); ++i) row[i] = p(t.rule.nodes[i]);
      }
      return t;
    }
    const ProductGrid g = native_grid();
    return project_samples(N, g, kind == SourceKind::Grid ? values : sample(g));
  }
};

SourceField SourceField::callable(const WaveContext& ctx, PointFunction f, double support_radius,
                                  QuadratureOptions opts) {
  validate(opts);
  if (!(support_radius > 0.0) || support_radius > ctx.radius() * (1.0 + 1e-14))
    throw SupportError("support radius must lie in (0, R]");
  auto t = std::make_shared<Term>();
  t->kind = SourceKind::Callable;
  t->dimension = ctx.dimension();
  t->support = std::min(support_radius, ctx.radius());
  t->opts = opts;
  t->f = std::move(f);
  SourceField s(ctx);
  s.terms_.push_back({1.0, std::move(t)});
  return s;
}

SourceField SourceField::modal(const WaveContext& ctx, std::map<ModeIndex, RadialProfile> profiles,
                               double support_radius, QuadratureOptions opts) {
  validate(opts);
  if (!(support_radius > 0.0) || support_radius > ctx.radius() * (1.0 + 1e-14))
    throw SupportError("support radius must lie in (0, R]");
  auto t = std::make_shared<Term>();
  t->kind = SourceKind::Modal;
  t->dimension = ctx.dimension();
  t->support = std::min(support_radius, ctx.radius());
  t->opts = opts;
  for (const auto& [k, p] : profiles) {
    if (ctx.dimension() == 2 && k.m != 0)
      throw IndexError("2D modes carry only the order n (m must be 0)");
    if (ctx.dimension() == 3 && (k.n < 0 || std::abs(k.m) > k.n))
      throw IndexError("3D modes need 0 <= |m| <= n");
    t->max_degree = std::max(t->max_degree, std::abs(k.n));
  }
  t->profiles = std::move(profiles);
  SourceField s(ctx);
  s.terms_.push_back({1.0, std::move(t)});
  return s;
}

SourceField SourceField::sampled(const WaveContext& ctx, ProductGrid grid, std::vector<cplx> values) {
  if (grid.dimension != ctx.dimension()) throw ParameterError("grid dimension does not match");
  if (values.size() != grid.size()) throw ParameterError("sample count does not match the grid");
  if (grid.radial.upper > ctx.radius() * (1.0 + 1e-14))
    throw SupportError("grid extends beyond the ball B_R");
  auto t = std::make_shared<Term>();
  t->kind = SourceKind::Grid;
  t->dimension = ctx.dimension();
  t->support = grid.radial.upper;
  t->opts.radial_order = grid.radial.order;
  t->grid = std::move(grid);
  t->values = std::move(values);
  SourceField s(ctx);
  s.terms_.push_back({1.0, std::move(t)});
  return s;
}

SourceField SourceField::zero(const WaveContext& ctx) { return SourceField(ctx); }

SourceKind SourceField::kind() const {
  bool all_modal = true;
  for (const auto& e : terms_) {
    if (e.term->kind == SourceKind::Grid) return SourceKind::Grid;
    if (e.term->kind != SourceKind::Modal) all_modal = false;
  }
  return all_modal ? SourceKind::Modal : SourceKind::Callable;
}

double SourceField::support_radius() const {
  double r = 0.0;
  for (const auto& e : terms_) r = std::max(r, e.term->support);
  return r;
}

cplx SourceField::operator()(const Point& x) const {
  cplx s = 0.0;
  for (const auto& e : terms_) s += e.coefficient * e.term->eval(x);
  return s;
}

SourceField SourceField::operator+(const SourceField& other) const {
  if (!(ctx_ == other.ctx_)) throw ParameterError("cannot add sources with different contexts");
  SourceField s = *this;
  s.terms_.insert(s.terms_.end(), other.terms_.begin(), other.terms_.end());
  return s;
}

SourceField SourceField::operator-(const SourceField& other) const {
  return *this + cplx(-1.0) * other;
}

SourceField operator*(cplx c, const SourceField& f) {
  SourceField s = f;
  for (auto& e : s.terms_) e.coefficient *= c;
  return s;
}

std::vector<SourceField::TermModes> SourceField::mode_tables(int N) const {
  if (N < 0) throw ParameterError("truncation must be non-negative");
  std::vector<TermModes> out;
  out.reserve(terms_.size());
  for (const auto& e : terms_) out.push_back({e.coefficient, e.term->modes(N)});
  return out;
}

SourceField SourceField::project_modes(int N) const {
  SourceField out(ctx_);
  for (const auto& e : terms_) {
    const Term& src = *e.term;
    auto t = std::make_shared<Term>();
    t->kind = SourceKind::Modal;
    t->dimension = src.dimension;
    t->support = src.support;
    t->opts = src.opts;
    if (src.kind == SourceKind::Modal) {
      for (const auto& [k, p] : src.profiles)
        if (std::abs(k.n) <= N) t->profiles.emplace(k, p);
    } else {
      const auto table = std::make_shared<const ModeTable>(src.modes(N));
      auto panels = std::make_shared<std::vector<BarycentricInterpolant>>();
      for (std::size_t p = 0; p < table->rule.panels(); ++p)
        panels->emplace_back(table->rule.panel(p));
      const std::vector<double> ends = table->rule.panel_ends;
      const int order = table->rule.order;
      auto add = [&](ModeIndex k) {
        const std::size_t slot = table->slot(k);
        t->profiles.emplace(k, [table, panels, ends, order, slot](double r) -> cplx {
          std::size_t p = 0;
          while (p + 1 < ends.size() && r > ends[p]) ++p;
          const auto first = table->values[slot].begin() + static_cast<long>(p * order);
          const std::vector<cplx> vals(first, first + order);
          return (*panels)[p](vals, r);
        });
      };
      if (src.dimension == 2) {
        for (int n = -N; n <= N; ++n) add({n, 0});
      } else {
        for (int n = 0; n <= N; ++n)
          for (int m = -n; m <= n; ++m) add({n, m});
      }
    }
    for (const auto& [k, p] : t->profiles) t->max_degree = std::max(t->max_degree, std::abs(k.n));
    out.terms_.push_back({e.coefficient, std::move(t)});
  }
  return out;
}

cplx SourceField::integrate(const PointFunction& w) const {
  cplx total = 0.0;
  for (const auto& e : terms_) {
    const ProductGrid g = e.term->native_grid();
    const std::vector<cplx> v = e.term->sample(g);
    cplx s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weight(i) * w(g.point(i)) * v[i];
    total += e.coefficient * s;
  }
  return total;
}

double SourceField::l2_norm() const {
  if (terms_.empty()) return 0.0;

  const Term* grid_term = nullptr;
  bool all_modal = true;
  QuadratureOptions opts = terms_.front().term->opts;
  std::set<double> breaks;
  for (const auto& e : terms_) {
    const Term& t = *e.term;
    if (t.kind == SourceKind::Grid && !grid_term) grid_term = &t;
    if (t.kind != SourceKind::Modal) all_modal = false;
    opts = merge(opts, t.opts);
    breaks.insert(t.support);
  }

  if (grid_term) {
    const ProductGrid& g = grid_term->grid;
    std::vector<cplx> sum(g.size(), 0.0);
    for (const auto& e : terms_) {
      const Term& t = *e.term;
      if (t.kind == SourceKind::Grid && !t.grid.same_nodes(g))
        throw ParameterError("grid sources on different grids cannot be combined");
      if (t.support > g.radial.upper * (1.0 + 1e-14))
        throw SupportError("a term extends beyond the grid of a sampled source");
      const auto v = t.sample(g);
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] += e.coefficient * v[i];
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) acc += g.weight(i) * std::norm(sum[i]);
    return std::sqrt(acc);
  }

  const RadialRule rule =
      composite_radial_rule(std::vector<double>(breaks.begin(), breaks.end()), opts.radial_order);

  if (all_modal) {
    // Parseval over the union of the terms' modes.
    std::map<ModeIndex, std::vector<cplx>> modes;
    for (const auto& e : terms_)
      for (const auto& [k, p] : e.term->profiles) {
        auto& row = modes[k];
        row.resize(rule.size(), 0.0);
        for (std::size_t i = 0; i < rule.size(); ++i)
          if (rule.nodes[i] < e.term->support) row[i] += e.coefficient * p(rule.nodes[i]);
      }
    const bool two = ctx_.dimension() == 2;
    double acc = 0.0;
    for (const auto& [k, row] : modes)
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double r = rule.nodes[i];
        acc += rule.weights[i] * (two ? 2.0 * kPi * r : r * r) * std::norm(row[i]);
      }
    return std::sqrt(acc);
  }

  const ProductGrid g = product_grid(ctx_.dimension(), rule, angular_rule(ctx_.dimension(), opts));
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.weight(i) * std::norm((*this)(g.point(i)));
  return std::sqrt(acc);
}

int SourceField::band_limit() const {
  int b = 0;
  for (const auto& e : terms_) {
    if (e.term->kind != SourceKind::Modal) return -1;
    b = std::max(b, e.term->max_degree);
  }
  return b;
}

// ---- constructions ---------------------------------------------------------

namespace {

struct MollifierDerivatives {
  double e0, e2, e3, e4;  // E, E'', E''', E'''' at tau
};

// E(tau) = exp(-1/(1 - tau)); E^(k) = P_k(v) E with v = 1/(1 - tau).
MollifierDerivatives mollifier(double tau) {
  if (tau >= 1.0) return {0.0, 0.0, 0.0, 0.0};
  const double v = 1.0 / (1.0 - tau);
  if (v > 700.0) return {0.0, 0.0, 0.0, 0.0};
  const double e = std::exp(-v);
  const double v2 = v * v, v3 = v2 * v, v4 = v3 * v, v5 = v4 * v, v6 = v5 * v;
  const double p2 = v4 - 2.0 * v3;
  const double p3 = -v6 + 6.0 * v5 - 6.0 * v4;
  const double p4 = v6 * v2 - 12.0 * v6 * v + 36.0 * v6 - 24.0 * v5;
  return {e, p2 * e, p3 * e, p4 * e};
}

double resolve_rho(const WaveContext& ctx, const BumpSpec& spec) {
  return spec.rho > 0.0 ? spec.rho : 0.8 * ctx.radius();
}

double nearest_j0_zero_gap(double z) {
  const int k0 = std::max(1, static_cast<int>(std::lround(z / kPi + 0.25)));
  double best = HUGE_VAL;
  for (int k = std::max(1, k0 - 1); k <= k0 + 1; ++k)
    best = std::min(best, std::abs(z - specfun::bessel_j0_zero(k)));
  return best;
}

void require_root(const WaveContext& ctx) {
  const double mis = root_mismatch(ctx);
  if (mis > 1e-12)
    throw ParameterError(std::string("kappa * R = ") + std::to_string(ctx.kappa() * ctx.radius()) +
                         " is not a zero of " + (ctx.dimension() == 2 ? "J_0" : "j_0") +
                         " (relative mismatch " + std::to_string(mis) + ")");
}

// Gauss rule on [0, R] fine enough for the normalising integrals.
RadialRule denominator_rule(const WaveContext& ctx, const QuadratureOptions& opts) {
  return radial_rule(ctx, std::max(2 * opts.radial_order, 128));
}

}  // namespace

double bump_value(const WaveContext& ctx, const BumpSpec& spec, const Point& x) {
  const double rho = resolve_rho(ctx, spec);
  const Point d = x - spec.center;
  return spec.amplitude * mollifier(dot(d, d) / (rho * rho)).e0;
}

SourceField make_bump_nonradiating(const WaveContext& ctx, const BumpSpec& spec,
                                   QuadratureOptions opts) {
  const double rho = resolve_rho(ctx, spec);
  const double reach = norm(spec.center) + rho;
  if (!(reach < ctx.radius()))
    throw SupportError("bump support |c| + rho = " + std::to_string(reach) +
                       " must stay strictly inside R = " + std::to_string(ctx.radius()));
  const int d = ctx.dimension();
  const double k4 = std::pow(ctx.kappa(), 4);
  const double rho4 = std::pow(rho, 4);
  const double amp = spec.amplitude;
  // For radial g(s) = h(s^2): Delta^2 g = 16 t^2 h'''' + (32 + 16 d) t h''' + 4 d (d + 2) h''.
  auto radial = [=](double s) {
    const double tau = s * s / (rho * rho);
    const auto m = mollifier(tau);
    const double lap2 =
        (16.0 * tau * tau * m.e4 + (32.0 + 16.0 * d) * tau * m.e3 + 4.0 * d * (d + 2.0) * m.e2) /
        rho4;
    return amp * (k4 * m.e0 - lap2);
  };
  // The mollifier is flat but not analytic at its edge, so Gauss rules
  // converge slowly there; raise the orders to reach the 1e-8 floor.
  const bool centred = spec.center == Point{0.0, 0.0, 0.0};
  opts.radial_order = std::max(opts.radial_order, centred ? 128 : 256);
  if (!centred) {
    opts.angular_count = std::max(opts.angular_count, 512);
    opts.polar_count = std::max(opts.polar_count, 64);
    opts.azimuth_count = std::max(opts.azimuth_count, 128);
  }
  if (centred) {
    const double y00 = d == 2 ? 1.0 : std::sqrt(4.0 * kPi);
    return SourceField::modal(ctx, {{ModeIndex{0, 0}, [=](double r) { return cplx(y00 * radial(r)); }}},
                              rho, opts);
  }
  const Point c = spec.center;
  return SourceField::callable(ctx, [=](const Point& x) { return cplx(radial(norm(x - c))); },
                               reach, opts);
}

SourceField make_bump_nonradiating(const WaveContext& ctx, std::function<double(const Point&)> u,
                                   double bump_support, double h, QuadratureOptions opts) {
  if (!(bump_support < ctx.radius()))
    throw SupportError("bump support must stay strictly inside B_R");
  if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
  const int d = ctx.dimension();
  const double k4 = std::pow(ctx.kappa(), 4);
  // Fourth-order five-point second difference along each axis.
  auto lap = [=](const std::function<double(const Point&)>& g, const Point& x) {
    double s = 0.0;
    for (int a = 0; a < d; ++a) {
      Point p1 = x, m1 = x, p2 = x, m2 = x;
      p1[a] += h;
      m1[a] -= h;
      p2[a] += 2.0 * h;
      m2[a] -= 2.0 * h;
      s += (-g(p2) + 16.0 * g(p1) - 30.0 * g(x) + 16.0 * g(m1) - g(m2)) / (12.0 * h * h);
    }
    return s;
  };
  auto f = [=](const Point& x) {
    const std::function<double(const Point&)> inner = [&](const Point& y) { return lap(u, y); };
    return cplx(-(lap(inner, x) - k4 * u(x)));
  };
  return SourceField::callable(ctx, f, bump_support, opts);
}

double root_mismatch(const WaveContext& ctx) {
  const double z = ctx.kappa() * ctx.radius();
  if (ctx.dimension() == 2) return nearest_j0_zero_gap(z) / z;
  const double k = std::max(1.0, std::round(z / kPi));
  return std::abs(z - k * kPi) / z;
}

PotentialValue bessel2d_potential(const WaveContext& ctx, double r) {
  if (ctx.dimension() != 2) throw ParameterError("the J_0 construction is two-dimensional");
  const double k = ctx.kappa();
  const RadialRule rule = denominator_rule(ctx, {});
  double a3 = 0.0, a4 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double j = specfun::bessel_j(0, k * rule.nodes[i]);
    const double w = rule.weights[i] * rule.nodes[i];
    a3 += w * j * j * j;
    a4 += w * j * j * j * j;
  }
  if (r >= ctx.radius()) return {0.0, 0.0};
  const auto j = specfun::bessel_j_seq(1, k * r);
  const double j0 = j[0], j1 = j[1];
  return {j0 * j0 * j0 / a4 - j0 * j0 / a3, -3.0 * k * j0 * j0 * j1 / a4 + 2.0 * k * j0 * j1 / a3};
}

SourceField make_2d_bessel_nonradiating(const WaveContext& ctx, QuadratureOptions opts) {
  if (ctx.dimension() != 2) throw ParameterError("the J_0 construction needs dimension 2");
  require_root(ctx);
  const double k = ctx.kappa();
  const double R = ctx.radius();
  const RadialRule rule = denominator_rule(ctx, opts);
  double a3 = 0.0, a4 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double j = specfun::bessel_j(0, k * rule.nodes[i]);
    const double w = rule.weights[i] * rule.nodes[i];
    a3 += w * j * j * j;
    a4 += w * j * j * j * j;
  }
  const double floor = 1e-12 * R * R;
  if (std::abs(a3) < floor || std::abs(a4) < floor)
    throw DegenerateError("normalising integral of J_0^3 or J_0^4 vanishes");
  const double k2 = k * k;
  // (Delta - kappa^2) J_0^p = kappa^2 [p (p-1) J_0^{p-2} J_1^2 - (p+1) J_0^p]
  auto profile = [=](double r) -> cplx {
    if (r >= R) return 0.0;
    const auto j = specfun::bessel_j_seq(1, k * r);
    const double j0 = j[0], j1 = j[1];
    const double cube = 6.0 * j0 * j1 * j1 - 4.0 * j0 * j0 * j0;
    const double square = 2.0 * j1 * j1 - 3.0 * j0 * j0;
    return k2 * (cube / a4 - square / a3);
  };
  return SourceField::modal(ctx, {{ModeIndex{0, 0}, profile}}, R, opts);
}

SourceField make_3d_bessel_nonradiating(const WaveContext& ctx, int m1, int m2,
                                        QuadratureOptions opts) {
  if (ctx.dimension() != 3) throw ParameterError("the j_0 construction needs dimension 3");
  if (m1 == m2) throw ParameterError("exponents m1 and m2 must differ");
  if (m1 < 3 || m2 < 3) throw ParameterError("exponents m1 and m2 must be >= 3");
  require_root(ctx);
  const double k = ctx.kappa();
  const double R = ctx.radius();
  const RadialRule rule = denominator_rule(ctx, opts);
  double d1 = 0.0, d2 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const double j0 = specfun::sph_bessel_j(0, k * r);
    const double i0 = specfun::sph_bessel_i_scaled_seq(0, k * r)[0] * std::exp(k * r);
    const double w = rule.weights[i] * r * r * i0;
    d1 += w * std::pow(j0, m1);
    d2 += w * std::pow(j0, m2);
  }
  const double floor = 1e-12 * R * R * R;
  if (std::abs(d1) < floor || std::abs(d2) < floor)
    throw DegenerateError("normalising integral of j_0^m j_0(i kappa r) vanishes");
  const double k2 = k * k;
  // (Delta + kappa^2) j_0^p = kappa^2 [p (p-1) j_0^{p-2} j_1^2 - (p-1) j_0^p]
  auto term = [](int p, double j0, double j1) {
    return p * (p - 1.0) * std::pow(j0, p - 2) * j1 * j1 - (p - 1.0) * std::pow(j0, p);
  };
  const double y00 = std::sqrt(4.0 * kPi);
  auto profile = [=](double r) -> cplx {
    if (r >= R) return 0.0;
    const auto j = specfun::sph_bessel_j_seq(1, k * r);
    return y00 * k2 * (term(m1, j[0], j[1]) / d1 - term(m2, j[0], j[1]) / d2);
  };
  return SourceField::modal(ctx, {{ModeIndex{0, 0}, profile}}, R, opts);
}

SourceField make_gaussian(const WaveContext& ctx, const Point& center, double sigma,
                          double amplitude, QuadratureOptions opts) {
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  const double s2 = sigma * sigma;
  return SourceField::callable(
      ctx,
      [=](const Point& x) {
        const Point d = x - center;
        return cplx(amplitude * std::exp(-dot(d, d) / s2));
      },
      ctx.radius(), opts);
}

SourceField make_bessel_mode(const WaveContext& ctx, ModeIndex mode, QuadratureOptions opts) {
  const double k = ctx.kappa();
  if (ctx.dimension() == 2) {
    const int n = mode.n;
    return SourceField::modal(
        ctx, {{ModeIndex{n, 0}, [=](double r) { return cplx(specfun::bessel_j(n, k * r)); }}},
        ctx.radius(), opts);
  }
  if (mode.n < 0 || std::abs(mode.m) > mode.n) throw IndexError("3D mode needs |m| <= n");
  const int n = mode.n;
  return SourceField::modal(
      ctx, {{mode, [=](double r) { return cplx(specfun::sph_bessel_j(n, k * r)); }}},
      ctx.radius(), opts);
}

}  // namespace bwave
