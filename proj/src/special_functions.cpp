#include "rcholo/special_functions.hpp"

#include <cmath>

namespace rcholo {

namespace {

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_fn: argument must be positive");
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    series += kLanczos[i] / (z + i);
  }
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("beta_fn: arguments must be positive");
  }
  return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y);
}

Complex pochhammer(Complex lambda, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  Complex acc(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    acc *= lambda + static_cast<double>(k);
  }
  return acc;
}

double pochhammer(double lambda, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  double acc = 1.0;
  for (int k = 0; k < n; ++k) {
    acc *= lambda + k;
  }
  return acc;
}

double jacobi_poly(const JacobiParams& p, double v) {
  const double a = p.alpha;
  const double b = p.beta;
  if (p.l == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((a - b) + (a + b + 2.0) * v);
  for (int n = 2; n <= p.l; ++n) {
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * v + a * a - b * b);
    const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_norm_sq(const JacobiParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int l = p.l;
  double lfact = 1.0;
  for (int k = 2; k <= l; ++k) lfact *= k;
  return std::pow(2.0, a + b + 1.0) * gamma_fn(l + a + 1.0) * gamma_fn(l + b + 1.0) /
         (lfact * (2.0 * l + a + b + 1.0) * gamma_fn(l + a + b + 1.0));
}

namespace {

Complex kummer_series(Complex a, Complex b, Complex x) {
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  int quiet = 0;
  for (int n = 0; n < 10000; ++n) {
    term *= (a + static_cast<double>(n)) / (b + static_cast<double>(n)) * x /
            static_cast<double>(n + 1);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw QuadratureError("kummer_1f1: series did not settle within 10000 terms");
}

bool nearly_real(Complex z) { return std::abs(z.imag()) < 1e-14; }

}  // namespace

Complex kummer_1f1(const KummerParams& p, const QuadratureSpec& spec) {
  const bool all_real = nearly_real(p.a) && nearly_real(p.b) && nearly_real(p.x);
  if (std::abs(p.x) <= 30.0) {
    if (all_real && p.x.real() < 0.0) {
      // reflection keeps every series term positive
      return std::exp(p.x) * kummer_series(p.b - p.a, p.b, -p.x);
    }
    return kummer_series(p.a, p.b, p.x);
  }
  const double ar = p.a.real();
  const double br = p.b.real();
  if (nearly_real(p.a) && nearly_real(p.b) && br > ar && ar > 0.0) {
    // Euler integral on (-1,1): measure exponents (a, b - a)
    const Complex x = p.x;
    const Complex integral = quad_segment(
        [&](double v) { return std::exp(-x * (0.5 * v)); }, ar, br - ar, spec);
    return std::exp(0.5 * x) / (beta_fn(ar, br - ar) * std::pow(2.0, br - 1.0)) *
           integral;
  }
  throw QuadratureError("kummer_1f1: argument too large for the series and outside the integral route's domain");
}

double kummer_integral_identity_residual(double alpha, double beta, int l, double x,
                                         const QuadratureSpec& spec) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("kummer_integral_identity_residual: alpha, beta must be positive");
  }
  if (l < 0) {
    throw std::domain_error("kummer_integral_identity_residual: l must be >= 0");
  }
  const JacobiParams poly(l, alpha - 1.0, beta - 1.0);
  const Complex lhs_integral = quad_segment(
      [&](double v) {
        return jacobi_poly(poly, v) * std::exp(Complex(0.0, v * x));
      },
      alpha, beta, spec);

  double lfact = 1.0;
  for (int k = 2; k <= l; ++k) lfact *= k;
  const Complex c = std::pow(2.0, alpha + beta + l - 1.0) * unit_imaginary_power(l) *
                    beta_fn(alpha + l, beta + l) / lfact;
  const Complex rhs = c * std::pow(x, l) * std::exp(Complex(0.0, x)) *
                      kummer_1f1(KummerParams(alpha + l, alpha + beta + 2.0 * l,
                                              Complex(0.0, -2.0 * x)),
                                 spec);

  const double denom = std::abs(lhs_integral) + std::abs(rhs);
  if (denom < 1e-14) return std::abs(lhs_integral - rhs);
  return std::abs(lhs_integral - rhs) / denom;
}

}  // namespace rcholo
