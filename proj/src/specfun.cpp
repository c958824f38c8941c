#include "rieszdrop/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rieszdrop/errors.hpp"

namespace rieszdrop {

namespace detail {

void throw_domain(const char* function, const std::string& what) {
  throw DomainError(std::string(function) + ": " + what);
}

}  // namespace detail

namespace {

using std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Gamma for x >= 1/2.
double lanczos_gamma(double x) {
  x -= 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * sum;
}

// Gamma on the whole real line except the poles.
double signed_gamma(double x) {
  if (x >= 0.5) return lanczos_gamma(x);
  return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
}

// 1/Gamma(x), zero at the poles.
double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / lanczos_gamma(x);
  return std::sin(pi * x) * lanczos_gamma(1.0 - x) / pi;
}

double digamma(double x) {
  if (x <= 0.0) {
    // psi(1 - x) - psi(x) = pi cot(pi x)
    return digamma(1.0 - x) - pi / std::tan(pi * x);
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return shift + std::log(x) - 0.5 / x - tail;
}

// Plain Gauss series. No restriction on c beyond avoiding the poles of the
// Pochhammer denominator; callers handle convergence domains.
double gauss_series(double a, double b, double c, double z, const SeriesConfig& cfg) {
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t n = 0; n < cfg.max_terms; ++n) {
    const double k = static_cast<double>(n);
    const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    term *= ratio;
    if (term == 0.0) return sum;  // terminating series
    sum += term;
    if (std::abs(ratio) < 1.0 && std::abs(term) < cfg.rel_term_tol * std::abs(sum)) return sum;
  }
  throw SolverError("hyp2f1: series did not converge within " + std::to_string(cfg.max_terms) +
                    " terms");
}

// Connection to 1 - z, c - a - b = s not an integer.
double connection_nonint(double a, double b, double c, double z, const SeriesConfig& cfg) {
  const double s = c - a - b;
  const double w = 1.0 - z;
  const double gc = signed_gamma(c);
  const double first = gc * signed_gamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  const double second = gc * signed_gamma(-s) * reciprocal_gamma(a) * reciprocal_gamma(b);
  double value = 0.0;
  if (first != 0.0) value += first * gauss_series(a, b, 1.0 - s, w, cfg);
  if (second != 0.0) value += second * std::pow(w, s) * gauss_series(c - a, c - b, s + 1.0, w, cfg);
  return value;
}

// Connection to 1 - z for c = a + b + m, m a positive integer (logarithmic case).
double connection_log(double a, double b, int m, double z, const SeriesConfig& cfg) {
  const double w = 1.0 - z;
  const double c = a + b + m;

  double finite = 0.0;
  {
    double term = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += term;
      const double k = n;
      term *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * w;
    }
    finite *= signed_gamma(m) * signed_gamma(c) * reciprocal_gamma(a + m) * reciprocal_gamma(b + m);
  }

  const double log_w = std::log(w);
  double coeff = 1.0 / signed_gamma(m + 1.0);  // (a+m)_0 (b+m)_0 / (0! m!)
  double sum = 0.0;
  std::size_t n = 0;
  for (; n < cfg.max_terms; ++n) {
    const double k = static_cast<double>(n);
    const double bracket =
        log_w - digamma(k + 1.0) - digamma(k + m + 1.0) + digamma(a + k + m) + digamma(b + k + m);
    const double term = coeff * bracket;
    sum += term;
    const double ratio = (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * w;
    if (std::abs(ratio) < 1.0 && std::abs(term) < cfg.rel_term_tol * std::abs(sum)) break;
    coeff *= ratio;
    if (coeff == 0.0) break;
  }
  if (n == cfg.max_terms) {
    throw SolverError("hyp2f1: logarithmic series did not converge within " +
                      std::to_string(cfg.max_terms) + " terms");
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (z - 1)^m = (-w)^m
  const double logpart =
      sign * std::pow(w, m) * signed_gamma(c) * reciprocal_gamma(a) * reciprocal_gamma(b) * sum;
  return finite - logpart;
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) detail::throw_domain("gamma", "argument must be positive and finite");
  return signed_gamma(x);
}

double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(z)))
    detail::throw_domain("hyp2f1", "non-finite parameter");
  if (c <= 0.0) detail::throw_domain("hyp2f1", "c must be positive");
  if (z < 0.0 || z > 1.0) detail::throw_domain("hyp2f1", "z must lie in [0, 1]");
  if (!(cfg.rel_term_tol > 0.0) || cfg.max_terms < 1)
    detail::throw_domain("hyp2f1", "invalid SeriesConfig");

  if (z == 0.0) return 1.0;
  const double s = c - a - b;
  if (z == 1.0) {
    if (s <= 0.0) detail::throw_domain("hyp2f1", "c - a - b must be positive at z = 1");
    return signed_gamma(c) * signed_gamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  }
  if (z <= 0.75 || is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return gauss_series(a, b, c, z, cfg);
  }

  const double nearest = std::round(s);
  if (std::abs(s - nearest) > 1e-13 * std::max(1.0, std::abs(s))) {
    return connection_nonint(a, b, c, z, cfg);
  }
  if (nearest >= 1.0) return connection_log(a, b, static_cast<int>(nearest), z, cfg);

  // c - a - b a non-positive integer: no connection formula implemented;
  // fall back to the slowly converging direct series.
  return gauss_series(a, b, c, z, cfg);
}

double disk_potential(double r, double alpha, const SeriesConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 2.0)) detail::throw_domain("disk_potential", "alpha must lie in (0, 2)");
  if (!(r >= 0.0) || !std::isfinite(r)) detail::throw_domain("disk_potential", "r must be finite and >= 0");
  if (r >= 1.0) {
    return pi * std::pow(r, -alpha) * hyp2f1(0.5 * alpha, 0.5 * alpha, 2.0, 1.0 / (r * r), cfg);
  }
  return 2.0 * pi / (2.0 - alpha) * hyp2f1(0.5 * (alpha - 2.0), 0.5 * alpha, 1.0, r * r, cfg);
}

double disk_potential_slope_max(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    detail::throw_domain("disk_potential_slope_max", "alpha must lie in (0, 1)");
  const double g = gamma(2.0 - 0.5 * alpha);
  return pi * alpha * (2.0 - alpha) * gamma(1.0 - alpha) / (2.0 * g * g);
}

}  // namespace rieszdrop
