#include "harmolift/specfun.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "harmolift/errors.hpp"

namespace harmolift {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Lanczos coefficients, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                         771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                         -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Bernoulli numbers B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulliEven{1.0 / 6,           -1.0 / 30,  1.0 / 42,    -1.0 / 30,
                                                5.0 / 66,          -691.0 / 2730, 7.0 / 6,  -3617.0 / 510,
                                                43867.0 / 798,     -174611.0 / 330};

cplx lower_gamma_series(cplx p, cplx x, double& err) {
  // gamma(p, x) = x^p e^{-x} sum_k x^k / (p (p+1) ... (p+k))
  cplx term = 1.0 / p;
  cplx sum = term;
  double abs_sum = std::abs(term);
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= x / (p + static_cast<double>(k));
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) < kEps * std::abs(sum) * 0.1) {
      const cplx pre = std::exp(p * std::log(x) - x);
      err = 8 * kEps * abs_sum * std::abs(pre);
      return sum * pre;
    }
  }
  throw ConvergenceError("inc_gamma: lower series did not converge");
}

cplx upper_gamma_cf(cplx p, cplx x, double& err, bool scaled = false) {
  // Modified Lentz evaluation of the Legendre continued fraction.
  cplx b = x + 1.0 - p;
  cplx c = 1.0 / kTiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - p);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) {
      d = kTiny;
    }
    c = b + an / c;
    if (std::abs(c) < kTiny) {
      c = kTiny;
    }
    d = 1.0 / d;
    const cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      const cplx val = std::exp(p * std::log(x) - (scaled ? cplx{} : x)) * h;
      err = 16 * kEps * static_cast<double>(i) * std::abs(val) + kEps;
      return val;
    }
  }
  throw ConvergenceError("inc_gamma: continued fraction did not converge");
}

constexpr int kZetaTerms = 80;

const std::array<double, kZetaTerms>& zeta_table() {
  static const std::array<double, kZetaTerms> table = [] {
    std::array<double, kZetaTerms> t{};
    for (int k = 2; k < kZetaTerms; ++k) {
      t[static_cast<std::size_t>(k)] = zeta_int(k);
    }
    return t;
  }();
  return table;
}

// (Gamma(1+e) - 1) / e for |e| <= 1/2 from the Taylor series of log Gamma(1+e).
cplx gamma1p_minus_one_over(cplx e) {
  const auto& zeta = zeta_table();
  cplx lg_over = -std::numbers::egamma;
  cplx power = 1.0;
  for (int k = 2; k < kZetaTerms; ++k) {
    power *= -e;
    // (-1)^k zeta(k) e^{k-1} / k == -zeta(k) (-e)^{k-1} / k
    const cplx term = -zeta[static_cast<std::size_t>(k)] * power / static_cast<double>(k);
    lg_over += term;
    if (std::abs(term) < kEps * 1e-2) {
      break;
    }
  }
  return lg_over * expm1_over(e * lg_over);
}

// Gamma(e, x) for |e| <= 1/2, finite at e = 0.
cplx upper_gamma_near_zero(cplx e, cplx x, double& err) {
  const cplx lx = std::log(x);
  cplx sum = 0.0;
  cplx term = 1.0;
  double abs_sum = 0.0;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= -x / static_cast<double>(k);
    const cplx add = term / (static_cast<double>(k) + e);
    sum += add;
    abs_sum += std::abs(add);
    if (std::abs(add) < kEps * 0.1 * std::max(1.0, std::abs(sum)) && static_cast<double>(k) > std::abs(x)) {
      const cplx xe = std::exp(e * lx);
      const cplx val = gamma1p_minus_one_over(e) - lx * expm1_over(e * lx) - xe * sum;
      err = 8 * kEps * (abs_sum * std::abs(xe) + std::abs(val) + 1.0);
      return val;
    }
  }
  throw ConvergenceError("inc_gamma: near-pole series did not converge");
}

template <class T>
std::pair<std::complex<T>, T> kummer_series(std::complex<T> a, std::complex<T> b, std::complex<T> x) {
  using C = std::complex<T>;
  const T nb = std::round(-b.real());
  if (nb >= 0 && std::abs(b + nb) < T(kPoleThreshold)) {
    throw std::domain_error("kummer_1f1: b at a nonpositive integer");
  }
  if (x.real() < 0) {
    const auto [v, e] = kummer_series<T>(b - a, b, -x);
    const C ex = std::exp(x);
    return {ex * v, std::abs(ex) * e};
  }
  const T eps = std::numeric_limits<T>::epsilon();
  C term = 1;
  C sum = 1;
  T abs_sum = 1;
  for (int k = 0; k < kMaxIterations; ++k) {
    term *= (a + T(k)) / (b + T(k)) * x / T(k + 1);
    sum += term;
    abs_sum += std::abs(term);
    if (term == C{} || (T(k) > std::abs(x) && std::abs(term) < T(0.1) * eps * std::max(std::abs(sum), T(kTiny)))) {
      return {sum, 8 * eps * abs_sum};
    }
  }
  throw ConvergenceError("kummer_1f1: series did not converge");
}

}  // namespace

cplx gamma(cplx z) {
  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * gamma(1.0 - z));
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

cplx expm1_over(cplx u) {
  if (std::abs(u) < 0.5) {
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int k = 2; k < 40; ++k) {
      term *= u / static_cast<double>(k);
      sum += term;
      if (std::abs(term) < kEps * 1e-2) {
        break;
      }
    }
    return sum;
  }
  return (std::exp(u) - 1.0) / u;
}

double zeta_int(int k) {
  if (k < 2) {
    throw std::invalid_argument("zeta_int: k must be >= 2");
  }
  // Euler-Maclaurin with N = 10.
  constexpr int n_cut = 10;
  const double kd = k;
  double s = 0.0;
  for (int n = n_cut - 1; n >= 1; --n) {
    s += std::pow(static_cast<double>(n), -kd);
  }
  const double big_n = n_cut;
  s += std::pow(big_n, 1.0 - kd) / (kd - 1.0) + 0.5 * std::pow(big_n, -kd);
  double rising = kd;  // k (k+1) ... (k + 2j - 2)
  double fact = 2.0;   // (2j)!
  for (std::size_t j = 1; j <= kBernoulliEven.size(); ++j) {
    const double term = kBernoulliEven[j - 1] / fact * rising * std::pow(big_n, -kd - 2.0 * j + 1.0);
    s += term;
    if (std::abs(term) < 1e-18 * s) {
      break;
    }
    rising *= (kd + 2.0 * j - 1.0) * (kd + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return s;
}

SpecialValue inc_gamma(cplx p, cplx x) {
  if (x.imag() == 0.0 && x.real() <= 0.0) {
    throw std::domain_error("inc_gamma: x on the branch cut (-inf, 0]");
  }
  double err = 0.0;
  if (x.real() > 0.0 && std::abs(x) >= std::max(1.0, std::abs(p))) {
    const cplx v = upper_gamma_cf(p, x, err);
    return {v, err};
  }
  const double n_near = std::round(-p.real());
  if (n_near >= 0.0 && std::abs(p + n_near) <= 0.5) {
    const cplx e = p + n_near;
    cplx g = upper_gamma_near_zero(e, x, err);
    const cplx ex = std::exp(-x);
    const cplx lx = std::log(x);
    for (int j = 1; j <= static_cast<int>(n_near); ++j) {
      const cplx q = e - static_cast<double>(j);
      g = (g - std::exp(q * lx) * ex) / q;
      err = err / std::abs(q) + kEps * std::abs(g);
    }
    return {g, err};
  }
  double lerr = 0.0;
  const cplx lower = lower_gamma_series(p, x, lerr);
  const cplx full = gamma(p);
  return {full - lower, lerr + 16 * kEps * std::abs(full)};
}

SpecialValue inc_gamma(cplx p, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("inc_gamma: x must be positive, got " + std::to_string(x));
  }
  return inc_gamma(p, cplx{x, 0.0});
}

SpecialValue inc_gamma_scaled(cplx p, cplx x) {
  if (x.imag() == 0.0 && x.real() <= 0.0) {
    throw std::domain_error("inc_gamma: x on the branch cut (-inf, 0]");
  }
  if (x.real() > 0.0 && std::abs(x) >= std::max(1.0, std::abs(p))) {
    double err = 0.0;
    const cplx v = upper_gamma_cf(p, x, err, true);
    return {v, err};
  }
  const SpecialValue g = inc_gamma(p, x);
  const cplx ex = std::exp(x);
  return {g.val * ex, g.err_est * std::abs(ex)};
}

SpecialValue m_func_series(cplx p, cplx n, double y) {
  if (!(y > 0.0)) {
    throw std::domain_error("m_func: y must be positive");
  }
  if (y == 1.0) {
    return {0.0, 0.0};
  }
  const double ly = std::log(y);
  cplx sum = 0.0;
  cplx nk = 1.0;  // n^k / k!
  double abs_sum = 0.0;
  for (int k = 0; k < kMaxIterations; ++k) {
    if (k > 0) {
      nk *= n / static_cast<double>(k);
    }
    const cplx s = static_cast<double>(k) + 1.0 - p;
    // (1 - y^s)/s, with the limit -log y at s = 0.
    const cplx f = std::abs(s) < kPoleThreshold ? cplx{-ly} : -ly * expm1_over(s * ly);
    const cplx term = nk * f;
    sum += term;
    abs_sum += std::abs(term);
    if (static_cast<double>(k) > std::abs(n) * std::max(1.0, y) + p.real() &&
        std::abs(term) < 0.1 * kEps * std::max(std::abs(sum), kTiny)) {
      return {sum, 8 * kEps * abs_sum};
    }
  }
  throw ConvergenceError("m_func: series did not converge");
}

SpecialValue m_func(cplx p, cplx n, double y) {
  if (!(y > 0.0)) {
    throw std::domain_error("m_func: y must be positive");
  }
  if (y == 1.0) {
    return {0.0, 0.0};
  }
  if (n.real() < 0.0 && std::abs(n) * std::max(1.0, y) > 4.0) {
    const cplx mn = -n;
    const cplx a = 1.0 - p;
    const SpecialValue g_y = inc_gamma(a, mn * y);
    const SpecialValue g_1 = inc_gamma(a, mn);
    const cplx pre = std::exp((p - 1.0) * std::log(mn));
    return {pre * (g_y.val - g_1.val), std::abs(pre) * (g_y.err_est + g_1.err_est)};
  }
  return m_func_series(p, n, y);
}

SpecialValue m_func_hypergeometric(cplx p, cplx n, double y) {
  if (!(y > 0.0)) {
    throw std::domain_error("m_func: y must be positive");
  }
  if (std::abs(p - 1.0) < kPoleThreshold) {
    throw std::domain_error("m_func_hypergeometric: pole at p = 1");
  }
  // Near positive integers p the two 1F1 values cancel to about |p - k|; extended precision absorbs that.
  using CL = std::complex<long double>;
  const CL pl(p.real(), p.imag());
  const CL nl(n.real(), n.imag());
  const long double yl = y;
  const auto [at_y, err_y] = kummer_series<long double>(1.0L - pl, 2.0L - pl, nl * yl);
  const auto [at_1, err_1] = kummer_series<long double>(1.0L - pl, 2.0L - pl, nl);
  const CL ypow = std::exp((1.0L - pl) * std::log(yl));
  const CL val = (ypow * at_y - at_1) / (pl - 1.0L);
  const long double err = (std::abs(ypow) * err_y + err_1) / std::abs(pl - 1.0L);
  const cplx v(static_cast<double>(val.real()), static_cast<double>(val.imag()));
  return {v, static_cast<double>(err) + kEps * std::abs(v)};
}

SpecialValue inc_beta(double t, cplx a, cplx b) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw std::domain_error("inc_beta: t must lie in [0, 1)");
  }
  if (!(a.real() > 0.0)) {
    throw std::domain_error("inc_beta: Re a must be positive");
  }
  if (t == 0.0) {
    return {0.0, 0.0};
  }
  // B(t,a,b) = t^a sum_k (1-b)_k / k! t^k / (a+k)
  cplx poch = 1.0;
  cplx sum = 0.0;
  double abs_sum = 0.0;
  for (int k = 0; k < kMaxIterations; ++k) {
    if (k > 0) {
      poch *= (1.0 - b + static_cast<double>(k - 1)) * t / static_cast<double>(k);
    }
    const cplx term = poch / (a + static_cast<double>(k));
    sum += term;
    abs_sum += std::abs(term);
    if (static_cast<double>(k) > std::abs(b) && std::abs(term) < 0.1 * kEps * std::max(std::abs(sum), kTiny)) {
      const cplx ta = std::exp(a * std::log(t));
      return {ta * sum, 8 * kEps * abs_sum * std::abs(ta)};
    }
    if (poch == cplx{}) {
      const cplx ta = std::exp(a * std::log(t));
      return {ta * sum, 8 * kEps * abs_sum * std::abs(ta)};
    }
  }
  throw ConvergenceError("inc_beta: series did not converge");
}

SpecialValue kummer_1f1(cplx a, cplx b, cplx x) {
  const auto [v, e] = kummer_series<double>(a, b, x);
  return {v, e};
}

Rational sigma(int u, long n) {
  if (n < 1) {
    throw std::invalid_argument("sigma: n must be >= 1");
  }
  Rational s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    BigInt dp = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(u < 0 ? -u : u));
    s += u < 0 ? Rational(BigInt(1), dp) : Rational(dp);
  }
  return s;
}

double sigma_d(int u, long n) {
  if (n < 1) {
    throw std::invalid_argument("sigma: n must be >= 1");
  }
  double s = 0.0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    s += std::pow(static_cast<double>(d), u);
    if (d * d != n) {
      s += std::pow(static_cast<double>(n / d), u);
    }
  }
  return s;
}

Rational dedekind_sum(long d, long c) {
  if (c < 1) {
    throw std::invalid_argument("dedekind_sum: c must be >= 1");
  }
  if (std::gcd(d, c) != 1) {
    throw std::invalid_argument("dedekind_sum: d and c must be coprime");
  }
  // s(d,c) + s(c,d) = -1/4 + (d/c + c/d + 1/(dc)) / 12 for coprime d, c >= 1.
  Rational acc = 0;
  int sign = 1;
  long a = ((d % c) + c) % c;
  long m = c;
  while (m > 1) {
    const Rational ra(a);
    const Rational rm(m);
    acc += sign * (Rational(-1, 4) + (ra / rm + rm / ra + Rational(1) / (ra * rm)) / 12);
    sign = -sign;
    const long next_m = a;
    a = m % a;
    m = next_m;
  }
  return acc;
}

Constants constants() {
  constexpr double glaisher = 1.2824271291006226368753425688697917277676889273250;
  const double g = std::numbers::egamma;
  const double zp2 = pi * pi / 6.0 * (g + std::log(2.0 * pi) - 12.0 * std::log(glaisher));
  return {g, zp2};
}

Jet holomorphic_jet(const std::function<cplx(cplx)>& f, const Jet& r, double radius) {
  const cplx v = f(r.val);
  if (r.d1 == cplx{}) {
    return {v, 0.0};
  }
  constexpr int nodes = 8;
  cplx acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const cplx w = std::polar(1.0, 2.0 * pi * k / nodes);
    acc += f(r.val + radius * w) / w;
  }
  const cplx deriv = acc / (static_cast<double>(nodes) * radius);
  return {v, deriv * r.d1};
}

}  // namespace harmolift
