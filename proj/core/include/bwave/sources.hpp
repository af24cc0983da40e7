#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "bwave/context.hpp"
#include "bwave/quadrature.hpp"

namespace bwave {

/// Cylindrical order n (2D, m unused) or spherical degree n and order m (3D).
struct ModeIndex {
  int n = 0;
  int m = 0;

  auto operator<=>(const ModeIndex&) const = default;
};

/// r -> f_n(r) or f_n^m(r) on (0, support].
using RadialProfile = std::function<cplx(double)>;

enum class SourceKind { Callable, Modal, Grid };

/// Angular modes of one source term tabulated at the nodes of a radial rule.
/// 2D slot for order n is n + N; 3D slot for (n, m) is n^2 + n + m.
struct ModeTable {
  int dimension = 2;
  int N = 0;
  RadialRule rule;
  std::vector<std::vector<cplx>> values;

  std::size_t slot(ModeIndex k) const;
  std::size_t slot_count() const;
  bool contains(ModeIndex k) const;
};

/// A compactly supported source f, stored as a linear combination of terms.
/// Each term keeps its own support radius and quadrature, so sums of sources
/// with different supports never integrate across a kink.
///
/// Immutable after construction and cheap to copy.
class SourceField {
 public:
  /// Pointwise evaluator; values for |x| >= support_radius are ignored.
  static SourceField callable(const WaveContext& ctx, PointFunction f, double support_radius,
                              QuadratureOptions opts = {});

  /// f = sum f_n(r) e^{in theta} (2D) or sum f_n^m(r) Y_n^m (3D).
  static SourceField modal(const WaveContext& ctx, std::map<ModeIndex, RadialProfile> profiles,
                           double support_radius, QuadratureOptions opts = {});

  /// Values on the nodes of a product grid; not evaluable off the grid.
  static SourceField sampled(const WaveContext& ctx, ProductGrid grid, std::vector<cplx> values);

  static SourceField zero(const WaveContext& ctx);

  const WaveContext& context() const { return ctx_; }
  SourceKind kind() const;
  double support_radius() const;
  bool is_zero() const { return terms_.empty(); }

  /// f(x). Throws PreconditionError for Grid sources.
  cplx operator()(const Point& x) const;

  SourceField operator+(const SourceField& other) const;
  SourceField operator-(const SourceField& other) const;
  friend SourceField operator*(cplx c, const SourceField& f);

  /// Angular projection onto |n| <= N (2D) or n <= N (3D). The result is a
  /// Modal source whose profiles interpolate the projected node values.
  SourceField project_modes(int N) const;

  /// One mode table per term, paired with the term's coefficient.
  struct TermModes {
    cplx coefficient;
    ModeTable table;
  };
  std::vector<TermModes> mode_tables(int N) const;

  /// Integral of w(x) f(x) over the support, term by term.
  cplx integrate(const PointFunction& w) const;

  /// L2 norm on the union of supports. Does not depend on any truncation.
  double l2_norm() const;

  /// Largest mode present when every term is Modal, otherwise -1.
  int band_limit() const;

 private:
  struct Term;
  struct Entry {
    cplx coefficient;
    std::shared_ptr<const Term> term;
  };

  explicit SourceField(const WaveContext& ctx) : ctx_(ctx) {}

  WaveContext ctx_;
  std::vector<Entry> terms_;
};

/// Projects grid samples onto angular modes up to N.
ModeTable project_samples(int N, const ProductGrid& grid, const std::vector<cplx>& values);

// ---- nonradiating constructions --------------------------------------------

/// The built-in mollifier u(x) = exp(-1 / (1 - |x - c|^2 / rho^2)) scaled by
/// `amplitude`, supported in |x - c| < rho.
struct BumpSpec {
  double rho = 0.0;  ///< 0 selects 0.8 R
  Point center{0.0, 0.0, 0.0};
  double amplitude = 1.0;
};

/// u(x) of the mollifier.
double bump_value(const WaveContext& ctx, const BumpSpec& spec, const Point& x);

/// f = -(Delta^2 - kappa^4) u with u the built-in mollifier, differentiated
/// in closed form. Throws SupportError unless |c| + rho < R.
SourceField make_bump_nonradiating(const WaveContext& ctx, const BumpSpec& spec = {},
                                   QuadratureOptions opts = {});

/// f = -(Delta^2 - kappa^4) u for a user bump, through a nested fourth-order
/// finite-difference Laplacian with step h. Accuracy is limited to roughly
/// h^4 times the sixth derivatives of u.
SourceField make_bump_nonradiating(const WaveContext& ctx, std::function<double(const Point&)> u,
                                   double bump_support, double h, QuadratureOptions opts = {});

/// f_M(r) and f_M'(r) of the 2D Bessel construction.
struct PotentialValue {
  double value;
  double derivative;
};

/// Radially symmetric 2D source (Delta - kappa^2) f_M with
/// f_M = J_0^3(kappa r) / A_4 - J_0^2(kappa r) / A_3,
/// A_k = int_0^R J_0^k(kappa r) r dr. kappa R must be a zero of J_0.
SourceField make_2d_bessel_nonradiating(const WaveContext& ctx, QuadratureOptions opts = {});

PotentialValue bessel2d_potential(const WaveContext& ctx, double r);

/// Radially symmetric 3D source (Delta + kappa^2) g with
/// g = j_0^{m1}(kappa r) / D_1 - j_0^{m2}(kappa r) / D_2,
/// D_i = int_0^R j_0^{m_i}(kappa r) j_0(i kappa r) r^2 dr. kappa R must be a
/// multiple of pi; m1 != m2, both >= 3.
SourceField make_3d_bessel_nonradiating(const WaveContext& ctx, int m1, int m2,
                                        QuadratureOptions opts = {});

/// Distance from kappa R to the nearest zero of J_0 (2D) or j_0 (3D),
/// relative to kappa R.
double root_mismatch(const WaveContext& ctx);

// ---- radiating test sources ------------------------------------------------

/// amplitude * exp(-|x - c|^2 / sigma^2), cut off at |x| = R.
SourceField make_gaussian(const WaveContext& ctx, const Point& center, double sigma,
                          double amplitude = 1.0, QuadratureOptions opts = {});

/// J_n(kappa r) e^{i n theta} (2D) or j_n(kappa r) Y_n^m (3D) on B_R.
SourceField make_bessel_mode(const WaveContext& ctx, ModeIndex mode, QuadratureOptions opts = {});

}  // namespace bwave
