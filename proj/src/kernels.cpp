#include "rcholo/kernels.hpp"

#include "rcholo/special_functions.hpp"

#include <cmath>

namespace rcholo {

WeightTriple::WeightTriple(double l1, double l2, double l3)
    : lambda1(l1), lambda2(l2), lambda3(l3) {
  if (!(l1 > 1.0) || !(l2 > 1.0) || !(l3 > 1.0)) {
    throw std::domain_error("WeightTriple: weights must exceed 1");
  }
  const double raw = 0.5 * (l3 - l1 - l2);
  const long rounded = std::lround(raw);
  if (rounded < 0 || std::abs(raw - static_cast<double>(rounded)) > 1e-9) {
    throw std::domain_error("WeightTriple: (lambda3 - lambda1 - lambda2)/2 must be a non-negative integer");
  }
  l = static_cast<int>(rounded);
}

WeightTriple WeightTriple::from_l(double l1, double l2, int l) {
  return WeightTriple(l1, l2, l1 + l2 + 2.0 * l);
}

namespace {

// (z - conj(w)) / 2i without any branch ambiguity; the real part is
// (Im z + Im w)/2, positive whenever both points sit in the upper half-plane.
inline Complex shifted_base(Complex z, Complex w) {
  return (z - std::conj(w)) * Complex(0.0, -0.5);
}

}  // namespace

HoloAtom HoloAtom::shifted_power(double mu, Complex w) {
  HoloAtom a;
  a.kind = Kind::kShiftedPower;
  a.mu = mu;
  a.w = w;
  return a;
}

HoloAtom HoloAtom::monomial(int degree) {
  if (degree < 0) throw std::domain_error("HoloAtom: monomial degree must be >= 0");
  HoloAtom a;
  a.kind = Kind::kMonomial;
  a.degree = degree;
  return a;
}

Complex HoloAtom::eval(Complex z) const {
  switch (kind) {
    case Kind::kShiftedPower:
      return principal_power(shifted_base(z, w), -mu);
    case Kind::kMonomial:
      return int_power(z, degree);
  }
  throw std::logic_error("HoloAtom: unknown kind");
}

std::pair<Complex, HoloAtom> HoloAtom::derived() const {
  switch (kind) {
    case Kind::kShiftedPower:
      // d/dz base^(-mu) = -mu base^(-mu-1) * (1/2i)
      return {Complex(0.0, 0.5) * mu, shifted_power(mu + 1.0, w)};
    case Kind::kMonomial:
      if (degree == 0) return {Complex(0.0, 0.0), *this};
      return {Complex(degree, 0.0), monomial(degree - 1)};
  }
  throw std::logic_error("HoloAtom: unknown kind");
}

HoloExpr HoloExpr::kernel_section(double lambda, UHPoint w) {
  if (!(lambda > 1.0)) {
    throw std::domain_error("kernel_section: weight must exceed 1");
  }
  HoloExpr e;
  e.add_term(Complex((lambda - 1.0) / (4.0 * kPi), 0.0),
             HoloAtom::shifted_power(lambda, w.value()));
  return e;
}

HoloExpr HoloExpr::shifted_power(double mu, UHPoint w, Complex coeff) {
  HoloExpr e;
  e.add_term(coeff, HoloAtom::shifted_power(mu, w.value()));
  return e;
}

HoloExpr HoloExpr::monomial(int degree, Complex coeff) {
  HoloExpr e;
  e.add_term(coeff, HoloAtom::monomial(degree));
  return e;
}

void HoloExpr::add_term(Complex coeff, HoloAtom atom) {
  terms_.push_back({coeff, atom});
}

Complex HoloExpr::eval(Complex z) const {
  Complex acc(0.0, 0.0);
  for (const auto& t : terms_) acc += t.coeff * t.atom.eval(z);
  return acc;
}

HoloExpr HoloExpr::derivative(int order) const {
  if (order < 0) throw std::domain_error("HoloExpr: derivative order must be >= 0");
  HoloExpr cur = *this;
  for (int k = 0; k < order; ++k) {
    HoloExpr next;
    for (const auto& t : cur.terms_) {
      auto [factor, atom] = t.atom.derived();
      const Complex c = t.coeff * factor;
      if (c != Complex(0.0, 0.0)) next.add_term(c, atom);
    }
    cur = std::move(next);
  }
  return cur;
}

HoloExpr HoloExpr::scaled(Complex factor) const {
  HoloExpr e;
  for (const auto& t : terms_) e.add_term(factor * t.coeff, t.atom);
  return e;
}

HoloExpr HoloExpr::operator+(const HoloExpr& other) const {
  HoloExpr e = *this;
  for (const auto& t : other.terms_) e.add_term(t.coeff, t.atom);
  return e;
}

std::function<Complex(Complex)> HoloExpr::as_function() const {
  return [expr = *this](Complex z) { return expr.eval(z); };
}

HoloExpr2 HoloExpr2::product_kernel_section(double lambda1, double lambda2,
                                            UHPoint w1, UHPoint w2) {
  return separable(HoloExpr::kernel_section(lambda1, w1),
                   HoloExpr::kernel_section(lambda2, w2));
}

HoloExpr2 HoloExpr2::separable(const HoloExpr& f1, const HoloExpr& f2) {
  HoloExpr2 e;
  for (const auto& t1 : f1.terms()) {
    for (const auto& t2 : f2.terms()) {
      e.add_term(t1.coeff * t2.coeff, t1.atom, t2.atom);
    }
  }
  return e;
}

void HoloExpr2::add_term(Complex coeff, HoloAtom a1, HoloAtom a2) {
  terms_.push_back({coeff, a1, a2});
}

Complex HoloExpr2::eval(Complex z1, Complex z2) const {
  Complex acc(0.0, 0.0);
  for (const auto& t : terms_) acc += t.coeff * t.a1.eval(z1) * t.a2.eval(z2);
  return acc;
}

HoloExpr2 HoloExpr2::derivative(int order1, int order2) const {
  if (order1 < 0 || order2 < 0) {
    throw std::domain_error("HoloExpr2: derivative orders must be >= 0");
  }
  HoloExpr2 cur = *this;
  for (int k = 0; k < order1; ++k) {
    HoloExpr2 next;
    for (const auto& t : cur.terms_) {
      auto [factor, atom] = t.a1.derived();
      const Complex c = t.coeff * factor;
      if (c != Complex(0.0, 0.0)) next.add_term(c, atom, t.a2);
    }
    cur = std::move(next);
  }
  for (int k = 0; k < order2; ++k) {
    HoloExpr2 next;
    for (const auto& t : cur.terms_) {
      auto [factor, atom] = t.a2.derived();
      const Complex c = t.coeff * factor;
      if (c != Complex(0.0, 0.0)) next.add_term(c, t.a1, atom);
    }
    cur = std::move(next);
  }
  return cur;
}

HoloExpr2 HoloExpr2::scaled(Complex factor) const {
  HoloExpr2 e;
  for (const auto& t : terms_) e.add_term(factor * t.coeff, t.a1, t.a2);
  return e;
}

Complex bergman_kernel(double lambda, Complex z, Complex w) {
  if (!(lambda > 1.0)) {
    throw std::domain_error("bergman_kernel: weight must exceed 1");
  }
  return (lambda - 1.0) / (4.0 * kPi) *
         principal_power(shifted_base(z, w), -lambda);
}

Complex product_kernel(const WeightTriple& tw, Complex z1, Complex z2,
                       Complex w1, Complex w2) {
  return bergman_kernel(tw.lambda1, z1, w1) * bergman_kernel(tw.lambda2, z2, w2);
}

Complex kernel_derivative(double lambda, int l, Complex z, Complex w) {
  if (!(lambda > 1.0)) {
    throw std::domain_error("kernel_derivative: weight must exceed 1");
  }
  if (l < 0) throw std::domain_error("kernel_derivative: order must be >= 0");
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  return sign * pochhammer(lambda - 1.0, l + 1) /
         (4.0 * kPi * two_i_power(l)) *
         principal_power(shifted_base(z, w), -(lambda + l));
}

Complex relative_kernel(const WeightTriple& tw, Complex z, Complex w1, Complex w2) {
  return int_power(w2 - w1, tw.l) *
         principal_power(shifted_base(w1, z), -(tw.lambda1 + tw.l)) *
         principal_power(shifted_base(w2, z), -(tw.lambda2 + tw.l));
}

Complex kernel_inverse_laplace(double lambda, Complex z, double t) {
  if (!(lambda > 1.0)) {
    throw std::domain_error("kernel_inverse_laplace: weight must exceed 1");
  }
  if (!(t > 0.0)) {
    throw std::domain_error("kernel_inverse_laplace: t must be positive");
  }
  return std::pow(2.0, lambda - 1.0) / (2.0 * kPi * gamma_fn(lambda - 1.0)) *
         std::pow(t, lambda - 1.0) *
         std::exp(Complex(0.0, -t) * std::conj(z));
}

Complex kernel_inverse_laplace2(double lambda1, double lambda2, Complex w1,
                                Complex w2, double x, double y) {
  return kernel_inverse_laplace(lambda1, w1, x) *
         kernel_inverse_laplace(lambda2, w2, y);
}

Complex rc_of_product_kernel(const WeightTriple& tw, Complex z, Complex w1,
                             Complex w2) {
  double lfact = 1.0;
  for (int k = 2; k <= tw.l; ++k) lfact *= k;
  const double front = pochhammer(tw.lambda1 - 1.0, tw.l + 1) *
                       pochhammer(tw.lambda2 - 1.0, tw.l + 1) /
                       (16.0 * kPi * kPi * lfact * std::pow(4.0, tw.l));
  return front *
         principal_power(shifted_base(w1, z), -(tw.lambda1 + tw.l)) *
         principal_power(shifted_base(w2, z), -(tw.lambda2 + tw.l)) *
         int_power(w2 - w1, tw.l);
}

}  // namespace rcholo
