#pragma once

#include <complex>
#include <vector>

#include "bwave/context.hpp"

/// Bessel, Hankel and spherical-harmonic functions for real, non-negative
/// arguments. Imaginary arguments are routed through the modified functions
/// I_n, K_n and their spherical counterparts, never through complex
/// continuation.
///
/// Sequence functions return orders 0..nmax in one pass and are the
/// preferred entry points inside loops. Negative orders are handled by the
/// scalar wrappers via the reflection formulas.
namespace bwave::specfun {

/// A value together with an estimate of how many digits were lost:
/// |z f'(z) / f(z)|, the sensitivity of f to a relative perturbation of the
/// argument. Large near zeros of f.
struct SpecialValue {
  cplx value;
  double condition_estimate;
};

/// i^n for any integer n, exact.
cplx ipow(int n);

// ---- cylindrical functions -------------------------------------------------

/// J_0(z) .. J_nmax(z) by Miller's backward recurrence. z >= 0.
std::vector<double> bessel_j_seq(int nmax, double z);

/// Y_0(z) .. Y_nmax(z), upward recurrence from Y_0, Y_1. z > 0.
std::vector<double> bessel_y_seq(int nmax, double z);

/// H^(1)_0(z) .. H^(1)_nmax(z). z > 0.
std::vector<cplx> hankel1_seq(int nmax, double z);

double bessel_j(int n, double z);
double bessel_y(int n, double z);
cplx hankel1(int n, double z);
cplx hankel2(int n, double z);

SpecialValue bessel_j_value(int n, double z);
SpecialValue bessel_y_value(int n, double z);
SpecialValue hankel1_value(int n, double z);

// ---- modified cylindrical functions ----------------------------------------

/// e^{-t} I_n(t) for n = 0..nmax. t >= 0.
std::vector<double> bessel_i_scaled_seq(int nmax, double t);

/// e^{t} K_n(t) for n = 0..nmax. t > 0.
std::vector<double> bessel_k_scaled_seq(int nmax, double t);

/// I_n(t). Throws OverflowError if the value exceeds the double range.
double bessel_i(int n, double t);
double bessel_k(int n, double t);

/// Largest t with I_n(t) representable as a double.
double bessel_i_overflow_threshold(int n);

/// J_n(it) = i^n I_n(t).
cplx bessel_j_imag(int n, double t);

/// H^(1)_n(it) = (2/pi) i^{-(n+1)} K_n(t).
cplx hankel1_imag(int n, double t);

// ---- spherical functions ---------------------------------------------------

std::vector<double> sph_bessel_j_seq(int nmax, double z);
std::vector<double> sph_bessel_y_seq(int nmax, double z);
std::vector<cplx> sph_hankel1_seq(int nmax, double z);

/// e^{-t} sqrt(pi/(2t)) I_{n+1/2}(t), n = 0..nmax.
std::vector<double> sph_bessel_i_scaled_seq(int nmax, double t);

/// e^{t} sqrt(2/(pi t)) K_{n+1/2}(t), n = 0..nmax.
std::vector<double> sph_bessel_k_scaled_seq(int nmax, double t);

double sph_bessel_j(int n, double z);
double sph_bessel_y(int n, double z);
cplx sph_hankel1(int n, double z);

/// j_n(it) = i^n sqrt(pi/(2t)) I_{n+1/2}(t).
cplx sph_bessel_j_imag(int n, double t);

/// h^(1)_n(it) = -i^{-n} sqrt(2/(pi t)) K_{n+1/2}(t).
cplx sph_hankel1_imag(int n, double t);

// ---- spherical harmonics ---------------------------------------------------

/// Position of Y_n^m in the packed arrays below.
constexpr int sph_index(int n, int m) { return n * n + n + m; }

/// Orthonormal Y_n^m(theta, phi) with the Condon-Shortley phase for all
/// n <= nmax, |m| <= n, packed by sph_index.
std::vector<cplx> sph_harmonics(int nmax, double theta, double phi);

/// Single Y_n^m. Throws IndexError unless 0 <= |m| <= n.
cplx sph_harmonic(int n, int m, double theta, double phi);

// ---- zeros -----------------------------------------------------------------

/// k-th positive zero of J_0, k >= 1.
double bessel_j0_zero(int k);

}  // namespace bwave::specfun
