#pragma once

#include "rcholo/numerics.hpp"

#include <utility>
#include <vector>

namespace rcholo {

/// Weights (lambda1, lambda2, lambda3) with lambda3 = lambda1 + lambda2 + 2l
/// for a non-negative integer l.  Construction recomputes l from the three
/// weights and rejects triples where it is not a non-negative integer.
struct WeightTriple {
  double lambda1;
  double lambda2;
  double lambda3;
  int l;

  WeightTriple(double l1, double l2, double l3);
  static WeightTriple from_l(double l1, double l2, int l);
};

/// One-variable holomorphic building block on the upper half-plane.
///
///   ShiftedPower:  z -> ((z - conj(w)) / 2i)^(-mu),  w in the half-plane
///   Monomial:      z -> z^degree
///
/// Both kinds have exact derivative rules of every order, so expressions
/// assembled from them can be differentiated without any numerics.
struct HoloAtom {
  enum class Kind { kShiftedPower, kMonomial };

  Kind kind = Kind::kShiftedPower;
  double mu = 1.0;
  Complex w = Complex(0.0, 1.0);
  int degree = 0;

  static HoloAtom shifted_power(double mu, Complex w);
  static HoloAtom monomial(int degree);

  Complex eval(Complex z) const;

  /// d/dz of the atom as (scalar factor, new atom).  The factor is zero for
  /// the derivative of a constant monomial.
  std::pair<Complex, HoloAtom> derived() const;
};

struct HoloTerm {
  Complex coeff;
  HoloAtom atom;
};

/// Finite linear combination of one-variable atoms.
class HoloExpr {
 public:
  HoloExpr() = default;

  /// z -> (lambda-1)/(4 pi) ((z - conj(w))/2i)^(-lambda), the reproducing
  /// kernel section of weight lambda at w.
  static HoloExpr kernel_section(double lambda, UHPoint w);
  static HoloExpr shifted_power(double mu, UHPoint w, Complex coeff = 1.0);
  static HoloExpr monomial(int degree, Complex coeff = 1.0);

  void add_term(Complex coeff, HoloAtom atom);
  const std::vector<HoloTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Complex eval(Complex z) const;
  HoloExpr derivative(int order = 1) const;
  HoloExpr scaled(Complex factor) const;
  HoloExpr operator+(const HoloExpr& other) const;

  std::function<Complex(Complex)> as_function() const;

 private:
  std::vector<HoloTerm> terms_;
};

struct HoloTerm2 {
  Complex coeff;
  HoloAtom a1;
  HoloAtom a2;
};

/// Finite sum of separable products atom(z1) * atom(z2); the two-variable
/// expressions the bracket operators consume.
class HoloExpr2 {
 public:
  HoloExpr2() = default;

  /// Product of two kernel sections: the reproducing kernel of the tensor
  /// space at (w1, w2) with weights (lambda1, lambda2).
  static HoloExpr2 product_kernel_section(double lambda1, double lambda2,
                                          UHPoint w1, UHPoint w2);
  static HoloExpr2 separable(const HoloExpr& f1, const HoloExpr& f2);

  void add_term(Complex coeff, HoloAtom a1, HoloAtom a2);
  const std::vector<HoloTerm2>& terms() const { return terms_; }

  Complex eval(Complex z1, Complex z2) const;

  /// Mixed partial d^(o1+o2) / dz1^o1 dz2^o2, exact on the atom family.
  HoloExpr2 derivative(int order1, int order2) const;
  HoloExpr2 scaled(Complex factor) const;

 private:
  std::vector<HoloTerm2> terms_;
};

/// Weighted Bergman kernel on the upper half-plane,
///
///   K_lambda(z, w) = (lambda-1)/(4 pi) ((z - conj(w)) / 2i)^(-lambda),
///
/// holomorphic in z, conjugate-holomorphic in w.  Inner products throughout
/// the library are linear in the first slot and conjugate-linear in the
/// second, so K reproduces via f(w) = <f, K(., w)>.
Complex bergman_kernel(double lambda, Complex z, Complex w);

/// Kernel of the product space: K_lambda1(z1, w1) K_lambda2(z2, w2).
Complex product_kernel(const WeightTriple& tw, Complex z1, Complex z2,
                       Complex w1, Complex w2);

/// l-th z-derivative of the kernel in closed form:
///
///   (-1)^l (lambda-1)_(l+1) / (4 pi (2i)^l) ((z - conj(w))/2i)^(-(lambda+l)).
Complex kernel_derivative(double lambda, int l, Complex z, Complex w);

/// Relative reproducing kernel attached to a weight triple:
///
///   (w2 - w1)^l ((w1 - conj(z))/2i)^(-(lambda1+l)) ((w2 - conj(z))/2i)^(-(lambda2+l)).
///
/// Holomorphic in (w1, w2), conjugate-holomorphic in z.
Complex relative_kernel(const WeightTriple& tw, Complex z, Complex w1, Complex w2);

/// Preimage of the kernel section under the half-line transform:
///
///   t -> 2^(lambda-1) / (2 pi Gamma(lambda-1)) t^(lambda-1) e^(-i t conj(z)).
Complex kernel_inverse_laplace(double lambda, Complex z, double t);

/// Two-variable version: the product of the one-variable preimages.
Complex kernel_inverse_laplace2(double lambda1, double lambda2, Complex w1,
                                Complex w2, double x, double y);

/// Closed form of the conjugated bracket of a product-kernel section,
///
///   (lambda1-1)_(l+1) (lambda2-1)_(l+1) / ((4 pi)^2 l! 2^(2l))
///     * ((w1 - conj(z))/2i)^(-(lambda1+l)) ((w2 - conj(z))/2i)^(-(lambda2+l))
///     * (w2 - w1)^l,
///
/// which is also C(lambda1, lambda2) times the relative kernel.
Complex rc_of_product_kernel(const WeightTriple& tw, Complex z, Complex w1,
                             Complex w2);

}  // namespace rcholo
