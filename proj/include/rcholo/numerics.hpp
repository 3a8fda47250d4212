#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcholo {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Thrown when a fixed quadrature rule fails its node-doubling stability
/// check or when the truncated-domain tail estimate exceeds the requested
/// tolerance.  Callers that aggregate many checks should catch this and
/// record a failure instead of aborting.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

/// Point of the open upper half-plane.  Construction rejects im <= 0 so that
/// downstream branch powers stay inside their domain of validity.
struct UHPoint {
  double re = 0.0;
  double im = 1.0;

  UHPoint() = default;
  UHPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(im > 0.0)) {
      throw std::domain_error("UHPoint: im must be strictly positive");
    }
  }
  static UHPoint from(Complex z) { return UHPoint(z.real(), z.imag()); }
  Complex value() const { return Complex(re, im); }
};

/// Principal power base^exponent for a base in the open right half-plane.
/// Uses the principal logarithm; rejects Re(base) <= 0 so no branch cut is
/// ever crossed.
Complex principal_power(Complex base, double exponent);

/// Deferred principal power.  Carries the base and a real exponent and
/// evaluates on demand; construction performs the half-plane domain check.
struct BranchPower {
  Complex base;
  double exponent;

  BranchPower(Complex base_, double exponent_) : base(base_), exponent(exponent_) {
    if (!(base.real() > 0.0)) {
      throw std::domain_error("BranchPower: base must lie in the open right half-plane");
    }
  }
  Complex value() const { return principal_power(base, exponent); }
};

/// i^l by exact quadrant rotation.  Never goes through a logarithm, so the
/// result is exact for every integer l (negative included).
Complex unit_imaginary_power(int l);

/// (2i)^l, exact: 2^l times the quadrant rotation.
Complex two_i_power(int l);

/// base^n for integer n by binary exponentiation (n < 0 takes a reciprocal).
Complex int_power(Complex base, int n);

/// |lhs - rhs| / max(|lhs|, |rhs|), falling back to the absolute difference
/// when both magnitudes are below 1e-12.  Shared yardstick for every
/// two-route comparison in the library and the test suites.
double relative_error(Complex lhs, Complex rhs);

/// Node counts, truncation radius and stability tolerance for the fixed
/// quadrature rules.  plane_angular_nodes counts the horizontal direction of
/// the half-plane grid, plane_radial_nodes the vertical one.
struct QuadratureSpec {
  int segment_nodes = 64;
  int halfline_nodes = 160;
  int plane_radial_nodes = 96;
  int plane_angular_nodes = 160;
  double truncation = 60.0;
  double target_tol = 1e-8;

  /// Rejects node counts < 2, truncation <= 0 and target_tol <= 0.
  void validate() const;
};

using Integrand1 = std::function<Complex(double)>;
using PlaneIntegrand = std::function<Complex(Complex)>;

/// Gauss rule on (-1,1): abscissae and weights.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached Gauss-Jacobi rule of n points for the measure
///
///   (1-v)^(measure_alpha-1) (1+v)^(measure_beta-1) dv   on (-1,1).
///
/// NOTE the convention: the arguments are the *measure* exponents alpha,
/// beta (both > 0), i.e. the classical Jacobi weight parameters shifted by
/// one.  Every call site in this library passes measure exponents; mixing
/// the two conventions is the easiest mistake to make with these rules.
/// measure_alpha = measure_beta = 1 gives Gauss-Legendre.
const GaussRule& gauss_jacobi_rule(int n, double measure_alpha, double measure_beta);

/// Integral of f against (1-v)^(alpha-1) (1+v)^(beta-1) dv over (-1,1).
/// alpha, beta are measure exponents (> 0), as in gauss_jacobi_rule.
/// Evaluates at segment_nodes and at twice that; throws QuadratureError when
/// the two results differ by more than target_tol (relative once the value
/// exceeds 1).  Pure: identical inputs give bit-identical results.
Complex quad_segment(const Integrand1& f, double alpha, double beta,
                     const QuadratureSpec& spec);

/// Integral of f(t) t^weight_exp dt over (0, infinity), truncated at
/// spec.truncation.  Uses the substitution t = -log(u) onto (0,1) followed by
/// Gauss-Legendre, with the same doubling check as quad_segment.  The
/// integrand must decay fast enough that the truncated tail is negligible at
/// target_tol; weight_exp > -1 keeps the origin integrable.
Complex quad_halfline(const Integrand1& f, double weight_exp,
                      const QuadratureSpec& spec);

/// Integral of f(z) y^(lambda-2) dx dy over the upper half-plane, truncated
/// to [-T, T] x (eps, T] with T = spec.truncation and eps a target_tol-scaled
/// floor.  The vertical direction is mapped by y = e^s to resolve the weight
/// near the boundary; the horizontal one by x = 4 sinh(theta) so nodes
/// concentrate where kernel-type integrands live.  Doubling check as above,
/// plus a boundary tail estimate assuming at worst quadratic decay; either
/// failure throws QuadratureError.
Complex quad_plane(const PlaneIntegrand& f, double lambda,
                   const QuadratureSpec& spec);

/// Default radius for Cauchy-circle differentiation about a point of the
/// upper half-plane: stay well clear of the real axis.
double cauchy_default_radius(Complex center);

/// order-th derivative of a holomorphic f at center, via the trapezoid rule
/// on a circle of the given radius.  Exponentially accurate once the circle
/// avoids singularities; used as the derivative oracle everywhere.
Complex cauchy_derivative(const std::function<Complex(Complex)>& f,
                          Complex center, int order, double radius,
                          int nodes = 64);

/// Samples a two-variable holomorphic function on a torus (circle x circle)
/// once, then serves arbitrary mixed partials at the centre from the cached
/// grid.  Radii follow the same safety rule as cauchy_derivative.
class CauchySampler2 {
 public:
  CauchySampler2(const std::function<Complex(Complex, Complex)>& f,
                 Complex center1, Complex center2, double radius1,
                 double radius2, int nodes = 64);

  /// d^(m+n) f / dz1^m dz2^n at (center1, center2).
  Complex partial(int order1, int order2) const;

 private:
  int nodes_;
  double radius1_, radius2_;
  std::vector<Complex> samples_;  // row-major nodes_ x nodes_
};

}  // namespace rcholo
