#pragma once

#include <array>
#include <functional>

#include "harmolift/int_series.hpp"
#include "harmolift/jet.hpp"

namespace harmolift {

/// A special-function value with a heuristic absolute error bound.
struct SpecialValue {
  cplx val;
  double err_est{};
};

/// Iteration cap shared by every series and continued fraction here.
inline constexpr int kMaxIterations = 500;

/// Distance to a pole (or removable singularity) below which the limit form
/// is substituted.
inline constexpr double kPoleThreshold = 1e-8;

/// Complex Gamma function (Lanczos, g = 7) with reflection for Re z < 1/2.
cplx gamma(cplx z);

/// (e^u - 1) / u, accurate near u = 0.
cplx expm1_over(cplx u);

/// Riemann zeta at integers k >= 2.
double zeta_int(int k);

/// Upper incomplete gamma Gamma(p, x) = int_x^inf u^{p-1} e^{-u} du on the
/// principal branch, x off the cut (-inf, 0]. Continued fraction for
/// |x| >= max(1, |p|) with Re x > 0; otherwise Gamma(p) minus the lower
/// series, or, near p in {0, -1, -2, ...}, a regularized evaluation at
/// p + n followed by the recurrence Gamma(q-1,x) = (Gamma(q,x) - x^{q-1}e^{-x})/(q-1).
SpecialValue inc_gamma(cplx p, cplx x);
SpecialValue inc_gamma(cplx p, double x);
/// e^x Gamma(p, x); stays finite where Gamma(p, x) underflows.
SpecialValue inc_gamma_scaled(cplx p, cplx x);

/// M_p(n; y) = int_y^1 t^{-p} e^{n t} dt, entire in p.
///
/// Uses the term-wise integrated exponential series when it is well
/// conditioned, and the incomplete-gamma representation
/// (-n)^{p-1} (Gamma(1-p, -n y) - Gamma(1-p, -n)) when Re n < 0 would make the
/// alternating series cancel.
SpecialValue m_func(cplx p, cplx n, double y);

/// The raw series sum_k n^k/k! (1 - y^{k+1-p})/(k+1-p), with the term replaced
/// by -(n^k/k!) log y where |k+1-p| < kPoleThreshold.
SpecialValue m_func_series(cplx p, cplx n, double y);

/// The confluent-hypergeometric form
/// (y^{1-p} 1F1(1-p;2-p;ny) - 1F1(1-p;2-p;n)) / (p-1); singular for p in Z>=1.
SpecialValue m_func_hypergeometric(cplx p, cplx n, double y);

/// Incomplete beta B(t, a, b) = int_0^t u^{a-1} (1-u)^{b-1} du, 0 <= t < 1, Re a > 0.
SpecialValue inc_beta(double t, cplx a, cplx b);

/// Kummer's 1F1(a; b; x); Re x < 0 is routed through Kummer's transformation.
SpecialValue kummer_1f1(cplx a, cplx b, cplx x);

/// sigma_u(n) = sum_{d | n} d^u, exact.
Rational sigma(int u, long n);
double sigma_d(int u, long n);

/// Classical Dedekind sum s(d, c) for gcd(d, c) = 1, c >= 1, via reciprocity.
Rational dedekind_sum(long d, long c);

struct Constants {
  double euler_gamma;
  double zeta_prime_2;
};

Constants constants();

/// Derivative of a holomorphic function along a jet: returns
/// {f(r.val), f'(r.val) * r.d1}, with f' from an 8-point trapezoidal Cauchy
/// integral on a circle of the given radius.
Jet holomorphic_jet(const std::function<cplx(cplx)>& f, const Jet& r, double radius = 1e-2);

}  // namespace harmolift
