#include "dsurv/beta_dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsurv {

namespace {

constexpr double kTiny = 1e-300;
constexpr int kMaxCfIter = 500;

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cont_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int i = 1; i <= kMaxCfIter; ++i) {
    const double fi = i;
    const double i2 = 2.0 * fi;
    double aa = fi * (b - fi) * x / ((qam + i2) * (a + i2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + fi) * (qab + fi) * x / ((a + i2) * (qap + i2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) return h;
  }
  throw std::runtime_error("beta_cdf: continued fraction did not converge");
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_pdf(double w, double a, double b, double log_norm) {
  return std::exp((a - 1.0) * std::log(w) + (b - 1.0) * std::log1p(-w) - log_norm);
}

// Gauss-Kronrod 7-15 nodes and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename F>
void gauss_kronrod_15(const F& f, double a, double b, double* kronrod, double* err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_mid = f(mid);
  double result_k = kWgk[7] * f_mid;
  double result_g = kWg[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    result_k += kWgk[i] * fsum;
    if (i % 2 == 1) result_g += kWg[i / 2] * fsum;
  }
  *kronrod = result_k * half;
  *err = std::fabs((result_k - result_g) * half);
}

template <typename F>
double integrate_adaptive(const F& f, double a, double b, double tol, int depth) {
  double value = 0.0;
  double err = 0.0;
  gauss_kronrod_15(f, a, b, &value, &err);
  if (err <= tol || depth >= 48 || b - a < 1e-14) return value;
  const double mid = 0.5 * (a + b);
  return integrate_adaptive(f, a, mid, 0.5 * tol, depth + 1) +
         integrate_adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

void BetaParams::validate() const {
  if (a < 0 || b < 1) throw std::domain_error("BetaParams: need a >= 0 and b >= 1");
}

double beta_cdf(double x, const BetaParams& p) {
  p.validate();
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("beta_cdf: x outside [0, 1]");
  if (p.a == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double a = p.a;
  const double b = p.b;
  const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cont_fraction(a, b, x) / a;
  return 1.0 - bt * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double beta_cdf_left(double x, const BetaParams& p) {
  p.validate();
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("beta_cdf_left: x outside [0, 1]");
  if (p.a == 0) return x > 0.0 ? 1.0 : 0.0;
  return beta_cdf(x, p);
}

double beta_quantile(double u, const BetaParams& p) {
  p.validate();
  if (p.a == 0) throw std::domain_error("beta_quantile: degenerate a == 0");
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("beta_quantile: u outside (0, 1)");
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (beta_cdf(mid, p) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SpacingDraw sample_spacings(int m, RngStream& rng) {
  if (m < 1) throw std::domain_error("sample_spacings: need m >= 1");
  SpacingDraw draw;
  draw.gaps.resize(static_cast<std::size_t>(m) + 1);
  double total = 0.0;
  for (auto& g : draw.gaps) {
    g = rng.exponential();
    total += g;
  }
  for (auto& g : draw.gaps) g /= total;
  return draw;
}

double joint_rect_prob(int v_inner, int v_outer, int m, double q_l, double q_u) {
  if (m < 1 || v_inner < 0 || v_inner > v_outer || v_outer > m)
    throw std::invalid_argument("joint_rect_prob: need 0 <= v_inner <= v_outer <= m");
  if (!(q_l >= 0.0 && q_l <= q_u && q_u <= 1.0))
    throw std::invalid_argument("joint_rect_prob: need 0 <= q_l <= q_u <= 1");

  const BetaParams inner{v_inner, m + 1 - v_inner};
  const BetaParams outer{v_outer, m + 1 - v_outer};

  if (q_l <= 0.0 && q_u >= 1.0) return 1.0;
  if (q_l <= 0.0) return beta_cdf(q_u, outer);
  if (q_u >= 1.0) return 1.0 - beta_cdf_left(q_l, inner);
  if (v_inner == v_outer) return beta_cdf(q_u, outer) - beta_cdf_left(q_l, outer);
  if (v_inner == 0) return 0.0;  // W_inner == 0 < q_l

  // Two-sided general case: integrate the Beta density of W_inner against the
  // conditional tail of the middle aggregate, which given W_inner = w is
  // (1 - w) * Beta(v_outer - v_inner, m + 1 - v_outer).
  const double a1 = v_inner;
  const double b1 = m + 1 - v_inner;
  const double log_norm = log_beta(a1, b1);
  const BetaParams middle{v_outer - v_inner, m + 1 - v_outer};
  const auto integrand = [&](double w) {
    const double cut = (q_u - w) / (1.0 - w);
    return beta_pdf(w, a1, b1, log_norm) * beta_cdf(std::clamp(cut, 0.0, 1.0), middle);
  };
  return integrate_adaptive(integrand, q_l, q_u, 1e-10, 0);
}

}  // namespace dsurv
