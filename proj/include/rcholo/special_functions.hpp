#pragma once

#include "rcholo/numerics.hpp"

namespace rcholo {

/// Gamma(x) for real x > 0 via a double-precision Lanczos approximation.
double gamma_fn(double x);

/// Beta(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
double beta_fn(double x, double y);

/// Rising factorial (lambda)_n = lambda (lambda+1) ... (lambda+n-1); the
/// empty product (n = 0) is 1.
Complex pochhammer(Complex lambda, int n);
double pochhammer(double lambda, int n);

/// Degree and parameters of a Jacobi polynomial P_l^(alpha,beta) on the
/// classical domain alpha, beta > -1.  The library's own call sites keep the
/// parameters strictly positive; the wider domain is exposed so edge cases
/// near the boundary can still be probed.
struct JacobiParams {
  int l;
  double alpha;
  double beta;

  JacobiParams(int l_, double alpha_, double beta_) : l(l_), alpha(alpha_), beta(beta_) {
    if (l < 0) throw std::domain_error("JacobiParams: degree must be >= 0");
    if (!(alpha > -1.0) || !(beta > -1.0)) {
      throw std::domain_error("JacobiParams: alpha and beta must exceed -1");
    }
  }
};

/// P_l^(alpha,beta)(v) by the standard three-term recurrence.
double jacobi_poly(const JacobiParams& p, double v);

/// Squared norm of P_l^(alpha,beta) against (1-v)^alpha (1+v)^beta dv:
///
///   2^(alpha+beta+1) Gamma(l+alpha+1) Gamma(l+beta+1)
///   -------------------------------------------------
///   l! (2l+alpha+beta+1) Gamma(l+alpha+beta+1)
double jacobi_norm_sq(const JacobiParams& p);

/// Parameters of a confluent hypergeometric evaluation 1F1(a, b; x).
/// b must stay away from the poles 0, -1, -2, ...
struct KummerParams {
  Complex a;
  Complex b;
  Complex x;

  KummerParams(Complex a_, Complex b_, Complex x_) : a(a_), b(b_), x(x_) {
    const double br = b.real();
    if (std::abs(b.imag()) < 1e-14 && br <= 0.0 &&
        std::abs(br - std::round(br)) < 1e-12) {
      throw std::domain_error("KummerParams: b at a non-positive integer");
    }
  }
};

/// 1F1(a, b; x).  The power series is summed until three consecutive terms
/// fall below 1e-16 of the running sum; real negative arguments go through
/// the reflection 1F1(a,b;x) = e^x 1F1(b-a,b;-x) first so every term stays
/// positive.  For large |x| with real b > a > 0 the series is abandoned for
/// the Euler integral on (-1,1) evaluated by quad_segment.
Complex kummer_1f1(const KummerParams& p, const QuadratureSpec& spec = QuadratureSpec{});

/// Relative residual between the two sides of the Jacobi transform of a
/// plane wave: the weighted integral of P_l^(alpha-1,beta-1)(v) e^(i v x)
/// against (1-v)^(alpha-1) (1+v)^(beta-1) dv versus its closed confluent
/// form
///
///   2^(alpha+beta+l-1) i^l B(alpha+l, beta+l) / l! * x^l e^(ix)
///     * 1F1(alpha+l, alpha+beta+2l; -2ix).
///
/// Returns |lhs - rhs| / (|lhs| + |rhs|), or the absolute difference when
/// both sides nearly vanish.  Requires alpha, beta > 0; the closed form is
/// only guaranteed for alpha, beta > 1.
double kummer_integral_identity_residual(double alpha, double beta, int l, double x,
                                         const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace rcholo
