#include "rcholo/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace rcholo {

Complex principal_power(Complex base, double exponent) {
  if (!(base.real() > 0.0)) {
    throw std::domain_error("principal_power: base must lie in the open right half-plane");
  }
  return std::exp(exponent * std::log(base));
}

Complex unit_imaginary_power(int l) {
  static const Complex table[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  int r = l % 4;
  if (r < 0) r += 4;
  return table[r];
}

Complex two_i_power(int l) {
  return std::pow(2.0, l) * unit_imaginary_power(l);
}

Complex int_power(Complex base, int n) {
  if (n == 0) return Complex(1.0, 0.0);
  bool invert = n < 0;
  unsigned long long e = invert ? -static_cast<long long>(n) : n;
  Complex acc(1.0, 0.0);
  Complex b = base;
  while (e > 0) {
    if (e & 1ull) acc *= b;
    b *= b;
    e >>= 1;
  }
  return invert ? 1.0 / acc : acc;
}

double relative_error(Complex lhs, Complex rhs) {
  const double diff = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 1e-12 ? diff / scale : diff;
}

void QuadratureSpec::validate() const {
  if (segment_nodes < 2 || halfline_nodes < 2 || plane_radial_nodes < 2 ||
      plane_angular_nodes < 2) {
    throw std::domain_error("QuadratureSpec: all node counts must be >= 2");
  }
  if (!(truncation > 0.0)) {
    throw std::domain_error("QuadratureSpec: truncation must be positive");
  }
  if (!(target_tol > 0.0)) {
    throw std::domain_error("QuadratureSpec: target_tol must be positive");
  }
}

namespace {

struct RuleKey {
  int n;
  double a;
  double b;
  bool operator<(const RuleKey& o) const {
    if (n != o.n) return n < o.n;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal matrix
// built from the three-term recurrence of the (a,b) Jacobi polynomials,
// weights come from the first eigenvector components scaled by the total
// mass of the weight.
std::unique_ptr<GaussRule> build_gauss_jacobi(int n, double a, double b) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double diag;
    if (k == 0) {
      diag = (b - a) / (a + b + 2.0);
    } else {
      const double s = 2.0 * k + a + b;
      diag = (b * b - a * a) / (s * (s + 2.0));
    }
    J(k, k) = diag;
  }
  for (int k = 1; k < n; ++k) {
    double off2;
    if (k == 1) {
      off2 = 4.0 * (1.0 + a) * (1.0 + b) /
             ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
    } else {
      const double s = 2.0 * k + a + b;
      off2 = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
             (s * s * (s + 1.0) * (s - 1.0));
    }
    const double off = std::sqrt(off2);
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  if (solver.info() != Eigen::Success) {
    throw QuadratureError("gauss_jacobi_rule: eigenvalue solve failed");
  }

  const double mass = std::pow(2.0, a + b + 1.0) * std::exp(log_beta(a + 1.0, b + 1.0));
  auto rule = std::make_unique<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule->nodes[i] = solver.eigenvalues()(i);
    const double q0 = solver.eigenvectors()(0, i);
    rule->weights[i] = mass * q0 * q0;
  }
  return rule;
}

std::map<RuleKey, std::unique_ptr<GaussRule>>& rule_cache() {
  static std::map<RuleKey, std::unique_ptr<GaussRule>> cache;
  return cache;
}

std::mutex& rule_mutex() {
  static std::mutex m;
  return m;
}

double doubling_scale(Complex refined) {
  return std::max(1.0, std::abs(refined));
}

}  // namespace

const GaussRule& gauss_jacobi_rule(int n, double measure_alpha, double measure_beta) {
  if (n < 1) throw std::domain_error("gauss_jacobi_rule: need at least one node");
  if (!(measure_alpha > 0.0) || !(measure_beta > 0.0)) {
    throw std::domain_error("gauss_jacobi_rule: measure exponents must be positive");
  }
  // classical Jacobi parameters are the measure exponents minus one
  const double a = measure_alpha - 1.0;
  const double b = measure_beta - 1.0;
  const RuleKey key{n, a, b};
  std::lock_guard<std::mutex> lock(rule_mutex());
  auto& cache = rule_cache();
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_gauss_jacobi(n, a, b)).first;
  }
  return *it->second;
}

namespace {

Complex segment_sum(const Integrand1& f, const GaussRule& rule) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

}  // namespace

Complex quad_segment(const Integrand1& f, double alpha, double beta,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("quad_segment: measure exponents must be positive");
  }
  const Complex coarse = segment_sum(f, gauss_jacobi_rule(spec.segment_nodes, alpha, beta));
  const Complex refined = segment_sum(f, gauss_jacobi_rule(2 * spec.segment_nodes, alpha, beta));
  const double delta = std::abs(refined - coarse);
  if (delta > spec.target_tol * doubling_scale(refined)) {
    std::ostringstream msg;
    msg << "quad_segment: doubling " << spec.segment_nodes << " -> "
        << 2 * spec.segment_nodes << " nodes moved the result by " << delta;
    throw QuadratureError(msg.str());
  }
  return refined;
}

namespace {

// One pass of the log-mapped half-line rule: t = -log(u), u on (e^-T, 1).
Complex halfline_sum(const Integrand1& f, double weight_exp, double truncation, int n) {
  const GaussRule& rule = gauss_jacobi_rule(n, 1.0, 1.0);
  const double u_min = std::exp(-truncation);
  const double half = 0.5 * (1.0 - u_min);
  const double mid = 0.5 * (1.0 + u_min);
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = mid + half * rule.nodes[i];
    const double t = -std::log(u);
    const double w = rule.weights[i] * half / u;
    acc += w * std::pow(t, weight_exp) * f(t);
  }
  return acc;
}

}  // namespace

Complex quad_halfline(const Integrand1& f, double weight_exp,
                      const QuadratureSpec& spec) {
  spec.validate();
  if (!(weight_exp > -1.0)) {
    throw std::domain_error("quad_halfline: weight exponent must exceed -1");
  }
  const Complex coarse = halfline_sum(f, weight_exp, spec.truncation, spec.halfline_nodes);
  const Complex refined = halfline_sum(f, weight_exp, spec.truncation, 2 * spec.halfline_nodes);
  const double delta = std::abs(refined - coarse);
  if (delta > spec.target_tol * doubling_scale(refined)) {
    std::ostringstream msg;
    msg << "quad_halfline: doubling " << spec.halfline_nodes << " -> "
        << 2 * spec.halfline_nodes << " nodes moved the result by " << delta;
    throw QuadratureError(msg.str());
  }
  return refined;
}

namespace {

constexpr double kPlaneXScale = 4.0;

struct PlanePass {
  Complex integral;
  double tail_estimate;
};

PlanePass plane_sum(const PlaneIntegrand& f, double lambda, double truncation,
                    double eps, int nx, int ny) {
  const double theta_max = std::asinh(truncation / kPlaneXScale);
  const double s_lo = std::log(eps);
  const double s_hi = std::log(truncation);

  const GaussRule& base = gauss_jacobi_rule(nx, 1.0, 1.0);
  std::vector<double> xs(nx), xw(nx);
  for (int i = 0; i < nx; ++i) {
    const double theta = theta_max * base.nodes[i];
    xs[i] = kPlaneXScale * std::sinh(theta);
    xw[i] = theta_max * base.weights[i] * kPlaneXScale * std::cosh(theta);
  }

  const GaussRule& vert = gauss_jacobi_rule(ny, 1.0, 1.0);
  std::vector<double> ys(ny), yw(ny);
  for (int j = 0; j < ny; ++j) {
    const double s = 0.5 * (s_lo + s_hi) + 0.5 * (s_hi - s_lo) * vert.nodes[j];
    ys[j] = std::exp(s);
    yw[j] = 0.5 * (s_hi - s_lo) * vert.weights[j] * std::exp(s * (lambda - 1.0));
  }

  Complex acc(0.0, 0.0);
  for (int j = 0; j < ny; ++j) {
    Complex row(0.0, 0.0);
    for (int i = 0; i < nx; ++i) {
      row += xw[i] * f(Complex(xs[i], ys[j]));
    }
    acc += yw[j] * row;
  }

  // Tail bound under the slowest kernel-type decay (quadratic): the mass
  // beyond |x| = T is at most T times the boundary magnitude, and likewise
  // above y = T.
  double tail = 0.0;
  for (int j = 0; j < ny; ++j) {
    tail += yw[j] * (std::abs(f(Complex(truncation, ys[j]))) +
                     std::abs(f(Complex(-truncation, ys[j])))) * truncation;
  }
  double top = 0.0;
  for (int i = 0; i < nx; ++i) {
    top += xw[i] * std::abs(f(Complex(xs[i], truncation)));
  }
  tail += top * std::pow(truncation, lambda - 1.0);
  return {acc, tail};
}

}  // namespace

Complex quad_plane(const PlaneIntegrand& f, double lambda,
                   const QuadratureSpec& spec) {
  spec.validate();
  if (!(lambda > 1.0)) {
    throw std::domain_error("quad_plane: weight lambda must exceed 1");
  }
  const double eps = std::clamp(spec.target_tol * 1e-4, 1e-14, 1e-6);
  const PlanePass coarse = plane_sum(f, lambda, spec.truncation, eps,
                                     spec.plane_angular_nodes, spec.plane_radial_nodes);
  const PlanePass refined = plane_sum(f, lambda, spec.truncation, eps,
                                      2 * spec.plane_angular_nodes,
                                      2 * spec.plane_radial_nodes);
  const double delta = std::abs(refined.integral - coarse.integral);
  if (delta > spec.target_tol * doubling_scale(refined.integral)) {
    std::ostringstream msg;
    msg << "quad_plane: doubling the grid moved the result by " << delta;
    throw QuadratureError(msg.str());
  }
  if (refined.tail_estimate > spec.target_tol * doubling_scale(refined.integral)) {
    std::ostringstream msg;
    msg << "quad_plane: truncated tail estimate " << refined.tail_estimate
        << " exceeds target tolerance; integrand decays too slowly";
    throw QuadratureError(msg.str());
  }
  return refined.integral;
}

double cauchy_default_radius(Complex center) {
  return std::min(0.5 * center.imag(), 0.5);
}

Complex cauchy_derivative(const std::function<Complex(Complex)>& f,
                          Complex center, int order, double radius, int nodes) {
  if (order < 0) throw std::domain_error("cauchy_derivative: order must be >= 0");
  if (!(radius > 0.0)) throw std::domain_error("cauchy_derivative: radius must be positive");
  Complex acc(0.0, 0.0);
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * kPi * k / nodes;
    const Complex dir = std::polar(1.0, theta);
    acc += f(center + radius * dir) * std::polar(1.0, -order * theta);
  }
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  return acc * fact / (nodes * std::pow(radius, order));
}

CauchySampler2::CauchySampler2(const std::function<Complex(Complex, Complex)>& f,
                               Complex center1, Complex center2, double radius1,
                               double radius2, int nodes)
    : nodes_(nodes), radius1_(radius1), radius2_(radius2) {
  if (!(radius1 > 0.0) || !(radius2 > 0.0)) {
    throw std::domain_error("CauchySampler2: radii must be positive");
  }
  samples_.resize(static_cast<std::size_t>(nodes) * nodes);
  for (int j = 0; j < nodes; ++j) {
    const Complex z1 = center1 + radius1 * std::polar(1.0, 2.0 * kPi * j / nodes);
    for (int k = 0; k < nodes; ++k) {
      const Complex z2 = center2 + radius2 * std::polar(1.0, 2.0 * kPi * k / nodes);
      samples_[static_cast<std::size_t>(j) * nodes + k] = f(z1, z2);
    }
  }
}

Complex CauchySampler2::partial(int order1, int order2) const {
  Complex acc(0.0, 0.0);
  for (int j = 0; j < nodes_; ++j) {
    const double th1 = 2.0 * kPi * j / nodes_;
    Complex inner(0.0, 0.0);
    for (int k = 0; k < nodes_; ++k) {
      const double th2 = 2.0 * kPi * k / nodes_;
      inner += samples_[static_cast<std::size_t>(j) * nodes_ + k] *
               std::polar(1.0, -order2 * th2);
    }
    acc += inner * std::polar(1.0, -order1 * th1);
  }
  double fact = 1.0;
  for (int j = 2; j <= order1; ++j) fact *= j;
  for (int j = 2; j <= order2; ++j) fact *= j;
  return acc * fact /
         (static_cast<double>(nodes_) * nodes_ * std::pow(radius1_, order1) *
          std::pow(radius2_, order2));
}

}  // namespace rcholo
