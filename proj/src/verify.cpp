#include "harmolift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "harmolift/errors.hpp"
#include "harmolift/specfun.hpp"

namespace harmolift {

namespace {

using Rng = std::mt19937_64;
using json = nlohmann::json;

struct Outcome {
  json params = json::object();
  int points{};
  double max_residual{};
  double tolerance{};
};

struct Tracker {
  int points{};
  double worst{};

  void add(double residual) {
    ++points;
    // NaN must fail the check, so it is carried as infinity.
    worst = std::isnan(residual) ? INFINITY : std::max(worst, residual);
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h = (h ^ c) * 1099511628211ULL;
  }
  return h;
}

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
long uniform_int(Rng& rng, long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); }

std::vector<UhpPoint> lift_grid() {
  std::vector<UhpPoint> pts;
  for (double x : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
    for (double y : {0.5, 1.0, 1.5, 2.0}) {
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

const std::vector<UhpPoint>& modular_base_points() {
  static const std::vector<UhpPoint> pts{{0.1, 0.9}, {-0.3, 0.8}, {0.45, 0.6}, {0.2, 0.35}, {-0.15, 0.3}};
  return pts;
}

GroupElement random_group_element(Rng& rng, long cmax) {
  for (;;) {
    const long c = uniform_int(rng, -cmax, cmax);
    const long d = uniform_int(rng, -cmax, cmax);
    if (std::gcd(c, d) != 1) {
      continue;
    }
    // Extended Euclid: x d + y c = 1 gives a = x, b = -y.
    long r0 = d, r1 = c, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
      const long q = r0 / r1;
      std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
      std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
    }
    if (r0 < 0) {
      x0 = -x0;
      y0 = -y0;
    }
    return {x0, -y0, c, d};
  }
}

SampledFunction value_fn(const HarmonicExpansion& h) {
  return {[h](const UhpPoint& z) { return assemble(h, z).value.val; }, 1e-12, 0.2};
}

SampledFunction deriv_fn(const HarmonicExpansion& h) {
  return {[h](const UhpPoint& z) { return assemble(h, z).value.d1; }, 1e-12, 0.2};
}

SampledFunction term_fn(const LiftTerm& t, int ell, cplx r) {
  return {[t, ell, r](const UhpPoint& z) { return term_eval(t, ell, Jet{r}, z).val; }, 1e-12, 0.05};
}

cplx quad_m(cplx p, double n, double y) {
  using boost::math::quadrature::gauss_kronrod;
  const double lo = std::min(y, 1.0);
  const double hi = std::max(y, 1.0);
  auto part = [&](bool imag) {
    return gauss_kronrod<double, 61>::integrate(
        [&](double t) {
          const cplx v = std::exp(-p * std::log(t) + n * t);
          return imag ? v.imag() : v.real();
        },
        lo, hi, 10, 1e-14);
  };
  const cplx v(part(false), part(true));
  return y < 1.0 ? v : -v;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

// ---- specfun -------------------------------------------------------------

Outcome check_constants(const VerifyConfig&, Rng&) {
  constexpr int n_terms = 1000;
  const double N = n_terms;
  double harmonic = 0.0;
  double log_sum = 0.0;
  for (int n = n_terms; n >= 1; --n) {
    harmonic += 1.0 / n;
    log_sum += std::log(static_cast<double>(n)) / (static_cast<double>(n) * n);
  }
  const double gamma_em =
      harmonic - std::log(N) - 1.0 / (2 * N) + 1.0 / (12 * N * N) - 1.0 / (120 * std::pow(N, 4)) + 1.0 / (252 * std::pow(N, 6));
  const double f_n = std::log(N) / (N * N);
  const double df_n = (1.0 - 2.0 * std::log(N)) / (N * N * N);
  const double zp2_em = -(log_sum + (std::log(N) + 1.0) / N - f_n / 2.0 - df_n / 12.0);
  const auto c = constants();
  Tracker t;
  t.add(std::abs(c.euler_gamma - gamma_em));
  t.add(std::abs(c.zeta_prime_2 - zp2_em));
  return {{{"cutoff", n_terms}}, t.points, t.worst, 1e-12};
}

Outcome check_inc_gamma_recurrence(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 100; ++i) {
    const double rad = uniform(rng, 0.0, 5.0);
    const cplx p = std::polar(rad, uniform(rng, -pi, pi));
    const double x = uniform(rng, 0.1, 20.0);
    const cplx lhs = inc_gamma(p + 1.0, x).val;
    const cplx a = p * inc_gamma(p, x).val;
    const cplx b = std::exp(p * std::log(x) - x);
    t.add(std::abs(lhs - a - b) / (std::abs(lhs) + std::abs(a) + std::abs(b)));
  }
  return {{{"draws", 100}, {"p_radius", 5}, {"x", {0.1, 20}}}, t.points, t.worst, 1e-10};
}

Outcome check_m_forms(const VerifyConfig&, Rng& rng) {
  Tracker t;
  int near = 0;
  for (int i = 0; i < 50; ++i) {
    cplx p;
    if (i % 3 == 0) {
      p = static_cast<double>(uniform_int(rng, 1, 5)) + std::polar(uniform(rng, 1e-6, 1e-3), uniform(rng, -pi, pi));
      ++near;
    } else {
      p = std::polar(uniform(rng, 0.0, 5.0), uniform(rng, -pi, pi));
    }
    const double n = uniform(rng, -20.0, 20.0);
    const double y = uniform(rng, 0.1, 3.0);
    const cplx m = m_func(p, n, y).val;
    // |M| reaches e^60 in this range, so errors are taken relative to max(1, |M|).
    const double scale = std::max(1.0, std::abs(m));
    t.add(std::abs(m - quad_m(p, n, y)) / scale);
    t.add(std::abs(m - m_func_hypergeometric(p, n, y).val) / scale);
  }
  return {{{"draws", 50}, {"near_integer_draws", near}, {"p_radius", 5}, {"n", {-20, 20}}, {"y", {0.1, 3}},
           {"scaled_by", "max(1,|M|)"}},
          t.points, t.worst, 1e-10};
}

Outcome check_m_dy(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 20; ++i) {
    const cplx p = std::polar(uniform(rng, 0.0, 5.0), uniform(rng, -pi, pi));
    const double n = uniform(rng, -10.0, 10.0);
    const double y = uniform(rng, 0.2, 3.0);
    const double h = 1e-4 * y;
    const cplx fd = (-m_func(p, n, y + 2 * h).val + 8.0 * m_func(p, n, y + h).val - 8.0 * m_func(p, n, y - h).val +
                     m_func(p, n, y - 2 * h).val) /
                    (12.0 * h);
    const cplx exact = -std::exp(-p * std::log(y) + n * y);
    t.add(std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return {{{"draws", 20}}, t.points, t.worst, 1e-6};
}

Outcome check_inc_beta_b1(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 20; ++i) {
    const double tt = uniform(rng, 0.0, 0.95);
    const cplx a(uniform(rng, 0.1, 5.0), uniform(rng, -3.0, 3.0));
    t.add(std::abs(inc_beta(tt, a, 1.0).val - std::exp(a * std::log(tt)) / a));
  }
  return {{{"draws", 20}}, t.points, t.worst, 1e-12};
}

Outcome check_dedekind(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 50; ++i) {
    long c = uniform_int(rng, 1, 200);
    long d = uniform_int(rng, 1, 200);
    if (std::gcd(c, d) != 1) {
      --i;
      continue;
    }
    const Rational law = Rational(-1, 4) + (Rational(d, c) + Rational(c, d) + Rational(1, c * d)) / 12;
    const Rational residual = dedekind_sum(d, c) + dedekind_sum(c, d) - law;
    // Sawtooth definition for the same pair.
    Rational brute = 0;
    for (long k = 1; k < c; ++k) {
      const Rational x(k, c);
      const Rational y(k * d % c, c);
      brute += (x - Rational(1, 2)) * (y == 0 ? Rational(0) : y - Rational(1, 2));
    }
    t.add(abs(residual).convert_to<double>() + abs(brute - dedekind_sum(d, c)).convert_to<double>());
  }
  return {{{"pairs", 50}, {"exact", true}}, t.points, t.worst, 0.0};
}

// ---- forms ---------------------------------------------------------------

Outcome check_eta_product(const VerifyConfig& cfg, Rng&) {
  const UhpPoint z(0.0, 2.0);
  const cplx q = std::exp(2.0 * pi * I * z.z());
  cplx log_prod = 2.0 * pi * I * z.z() / 24.0;
  for (int n = 1; n <= 50; ++n) {
    log_prod += std::log(1.0 - std::pow(q, n));
  }
  Tracker t;
  t.add(std::abs(log_eta(cfg.trunc).eval(z).val - log_prod));
  t.add(std::abs(log_eta_at(z) - log_prod));
  return {{{"z", cplx_json(z.z())}, {"factors", 50}}, t.points, t.worst, 1e-12};
}

Outcome check_classical_identities(const VerifyConfig& cfg, Rng&) {
  Tracker t;
  const int n = cfg.trunc;
  const IntSeries lhs = pow(eisenstein(4, n), 3) - pow(eisenstein(6, n), 2);
  const IntSeries rhs = delta(n).scaled(1728);
  bool equal = true;
  for (int k = 0; k <= n; ++k) {
    equal = equal && lhs.coeff(k) == rhs.coeff(k);
  }
  t.add(equal ? 0.0 : 1.0);
  const IntSeries j = j_invariant(3);
  const std::vector<BigInt> expect{1, 744, 196884, 21493760};
  t.add(j.lo() == -1 && j.coeffs() == expect ? 0.0 : 1.0);
  const QExpansion eta24 = eta_power(Jet{12.0}, n).shifted(1);
  const IntSeries d = delta(n);
  double worst = 0.0;
  for (int k = 1; k <= std::min(eta24.hi(), d.hi()); ++k) {
    const double exact = d.coeff(k).convert_to<double>();
    worst = std::max(worst, std::abs(eta24.coeff(k).val - exact) / std::max(1.0, std::abs(exact)));
  }
  t.add(worst);
  return {{{"trunc", n}}, t.points, t.worst, 1e-12};
}

Outcome check_multiplier_generators(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (cplx r : {cplx(0.3, 0.1), cplx(-1.5, 0.0), cplx(4.0, 0.0)}) {
    const MultiplierSystem ms{Jet{r}};
    t.add(std::abs(multiplier(ms, GroupElement::T()).val - std::exp(I * pi * r / 6.0)));
    t.add(std::abs(multiplier(ms, GroupElement::S()).val - std::exp(-I * pi * r / 2.0)));
  }
  for (int i = 0; i < 20; ++i) {
    t.add(std::abs(multiplier({Jet{12.0}}, random_group_element(rng, 20)).val - 1.0));
  }
  return {{{"random_elements", 20}}, t.points, t.worst, 1e-12};
}

Outcome check_multiplier_eta(const VerifyConfig&, Rng& rng) {
  const UhpPoint z(0.3, 1.1);
  Tracker t;
  double worst_abs = 0.0;
  std::vector<GroupElement> gs;
  for (int i = 0; i < 50; ++i) {
    gs.push_back(random_group_element(rng, 20));
  }
  for (cplx r : {cplx(0.0), cplx(0.7, 0.2), cplx(-1.5), cplx(4.0)}) {
    const SampledFunction F{[r](const UhpPoint& w) { return eta_power_at(Jet{r}, w).val; }, 1e-13, 1e-4};
    for (const auto& g : gs) {
      // At r = 4 and |c| = 20 the value is ~1e5 and Im(gz) ~ 1e-3; rounding gz alone costs ~1e-12 relative.
      const double res = slash_transform_check(F, r, {Jet{r}}, g, z);
      worst_abs = std::max(worst_abs, res);
      t.add(res / std::max(1.0, std::abs(F(g.apply(z)))));
    }
  }
  return {{{"elements", 50}, {"c_max", 20}, {"z", cplx_json(z.z())}, {"r", "0, 0.7+0.2i, -1.5, 4"},
           {"scaled_by", "max(1,|F(gz)|)"}, {"max_absolute_residual", worst_abs}},
          t.points, t.worst, 1e-8};
}

Outcome check_multiplier_paths(const VerifyConfig&, Rng& rng) {
  const UhpPoint z(0.3, 1.1);
  Tracker t;
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = random_group_element(rng, 20);
    const cplx numeric = 2.0 * (log_eta_at(g.apply(z)) - log_eta_at(z)) - std::log(g.factor(z.z()));
    const cplx exact = I * pi * multiplier_log(g).convert_to<double>();
    t.add(std::abs(numeric - exact));
  }
  return {{{"elements", 50}, {"c_max", 20}}, t.points, t.worst, 1e-10};
}

Outcome check_slash_representation(const VerifyConfig&, Rng& rng) {
  const cplx r(0.7, 0.2);
  const MultiplierSystem ms{Jet{r}};
  const SampledFunction F{[](const UhpPoint& z) { return std::exp(I * z.z()) / (z.z() + I); }, 1e-15, 0.0};
  Tracker t;
  for (int i = 0; i < 10; ++i) {
    const GroupElement g1 = random_group_element(rng, 6);
    const GroupElement g2 = random_group_element(rng, 6);
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    const cplx lhs = slash_hol(r, ms, g2, slash_hol(r, ms, g1, F))(z);
    const cplx rhs = slash_hol(r, ms, g1 * g2, F)(z);
    t.add(std::abs(lhs - rhs));
  }
  return {{{"pairs", 10}, {"p", cplx_json(r)}}, t.points, t.worst, 1e-8};
}

Outcome check_j_family(const VerifyConfig&, Rng& rng) {
  Tracker t;
  const IntSeries j = j_invariant(20);
  const IntSeries expect = j - IntSeries::one(20).scaled(744);
  t.add(j_family_exact(0, 1, 19) == expect.truncated(19) ? 0.0 : 1.0);
  const std::vector<int> weights{-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10, 12, 14, 16};
  json draws = json::array();
  for (int i = 0; i < 10; ++i) {
    const int ell = weights[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(weights.size()) - 1))];
    const int m = WeightData::for_weight(ell).m_ell;
    const int a = m + static_cast<int>(uniform_int(rng, 0, 3));
    const cplx r(uniform(rng, -2.0, 2.0), uniform(rng, -0.5, 0.5));
    const QExpansion f = j_family(ell, a, Jet::variable(r), 12);
    double worst = std::abs(f.coeff(-a).val - 1.0) + std::abs(f.coeff(-a).d1);
    for (int nu = -a + 1; nu <= -m; ++nu) {
      worst = std::max(worst, magnitude(f.coeff(nu)));
    }
    t.add(worst);
    draws.push_back({{"ell", ell}, {"a", a}, {"r", cplx_json(r)}});
  }
  return {{{"draws", draws}}, t.points, t.worst, 1e-10};
}

// ---- operators -----------------------------------------------------------

SampledFunction smooth_test_function() {
  return {[](const UhpPoint& z) {
            return std::pow(cplx(z.y), cplx(0.7, 0.2)) * std::exp(cplx(-0.8 * z.y, 2.0 * pi * z.x)) +
                   z.z() * z.z() / (z.y + 1.0);
          },
          1e-15, 0.0};
}

Outcome check_e_relations(const VerifyConfig& cfg, Rng& rng) {
  const SampledFunction f = smooth_test_function();
  Tracker t;
  for (int i = 0; i < 10; ++i) {
    const cplx p(uniform(rng, -3.0, 3.0), uniform(rng, -1.0, 1.0));
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    const cplx om = casimir(p, f, z, cfg.diff);
    const cplx fz = f(z);
    // E^+_{p-2} E^-_p = -4 omega_p - p^2 + 2p ; E^-_{p+2} E^+_p = -4 omega_p - p^2 - 2p.
    const cplx a = e_plus(p - 2.0, apply(e_minus, p, f, cfg.diff), z, cfg.diff);
    const cplx b = e_minus(p + 2.0, apply(e_plus, p, f, cfg.diff), z, cfg.diff);
    t.add(std::abs(a - (-4.0 * om - (p * p - 2.0 * p) * fz)));
    t.add(std::abs(b - (-4.0 * om - (p * p + 2.0 * p) * fz)));
  }
  return {{{"points", 10}}, t.points, t.worst, 1e-4};
}

Outcome check_diagram(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  const std::vector<SampledFunction> fs{value_fn(eta_lift_at_zero(cfg.trunc, cfg.mutation)), smooth_test_function()};
  for (const auto& F : fs) {
    for (int i = 0; i < 10; ++i) {
      const UhpPoint z(uniform(rng, -0.4, 0.4), uniform(rng, 0.5, 2.0));
      const cplx p = 2.0;
      const cplx lhs = ra_weight(p - 2.0, apply(xi, p, F, cfg.diff))(z);
      const cplx rhs = -0.5 * e_minus(p, rh_weight(p, F), z, cfg.diff);
      t.add(std::abs(lhs - rhs));
    }
  }
  return {{{"functions", "e2 non-holomorphic, smooth test"}}, t.points, t.worst, 1e-5};
}

Outcome check_fd_order(const VerifyConfig&, Rng& rng) {
  // Non-holomorphic on purpose: for holomorphic f the leading errors of d_x and d_y cancel in d_z.
  const SampledFunction f{[](const UhpPoint& z) { return std::exp(I * z.x) * z.y * z.y * z.y; }, 1e-15, 0.0};
  Tracker t;
  for (int i = 0; i < 5; ++i) {
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.8, 1.5));
    const cplx e = std::exp(I * z.x);
    const cplx exact = 0.5 * (I * e * std::pow(z.y, 3) - I * 3.0 * e * z.y * z.y);
    const DiffConfig coarse{0.04, Scheme::central2, false};
    const DiffConfig fine{0.02, Scheme::central2, false};
    const double ratio = std::abs(d_z(f, z, coarse) - exact) / std::abs(d_z(f, z, fine) - exact);
    t.add(std::abs(ratio - 4.0));
  }
  return {{{"scheme", "central2"}, {"h", {0.04, 0.02}}, {"accepted_ratio", {3, 5}}}, t.points, t.worst, 1.0};
}

Outcome check_xi_kernel(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 10; ++i) {
    std::vector<Jet> cs;
    for (int k = 0; k <= 4; ++k) {
      cs.emplace_back(cplx(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)));
    }
    const QExpansion poly(Orientation::holomorphic, Jet{}, 0, cs);
    const SampledFunction f{[poly](const UhpPoint& z) { return poly.eval(z).value.val; }, 1e-15, 0.0};
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    t.add(std::abs(xi(2.0, f, z, cfg.diff)));
  }
  return {{{"polynomials", 10}, {"degree", 4}}, t.points, t.worst, 1e-8};
}

Outcome check_monomials(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  for (int i = 0; i < 10; ++i) {
    const cplx p(uniform(rng, -3.0, 3.0), uniform(rng, -1.0, 1.0));
    const cplx a(uniform(rng, -2.0, 2.0), uniform(rng, -1.0, 1.0));
    const cplx s(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    const SampledFunction ya{[a](const UhpPoint& w) { return std::pow(cplx(w.y), a); }, 1e-15, 0.0};
    const cplx va = ya(z);
    t.add(std::abs(laplace(p, ya, z, cfg.diff) + a * (a - 1.0 + p) * va) / std::max(1.0, std::abs(va)));
    const SampledFunction ys{[s](const UhpPoint& w) { return std::pow(cplx(w.y), 0.5 + s); }, 1e-15, 0.0};
    const cplx vs = ys(z);
    t.add(std::abs(casimir(p, ys, z, cfg.diff) - SpectralParam{s}.eigenvalue() * vs) / std::max(1.0, std::abs(vs)));
    // omega_p (y^{p/2} q^n) = (p/2)(1 - p/2) y^{p/2} q^n.
    const int n = static_cast<int>(uniform_int(rng, -2, 2));
    const SampledFunction yq{[p, n](const UhpPoint& w) {
                               return std::pow(cplx(w.y), p / 2.0) * std::exp(2.0 * pi * I * static_cast<double>(n) * w.z());
                             },
                             1e-15, 0.0};
    const cplx vq = yq(z);
    t.add(std::abs(casimir(p, yq, z, cfg.diff) - (p / 2.0) * (1.0 - p / 2.0) * vq) / std::max(1.0, std::abs(vq)));
    // E^-_p y^{p/2} = 0 and E^+_p y^{-p/2} = 0.
    const SampledFunction yp{[p](const UhpPoint& w) { return std::pow(cplx(w.y), p / 2.0); }, 1e-15, 0.0};
    const SampledFunction ym{[p](const UhpPoint& w) { return std::pow(cplx(w.y), -p / 2.0); }, 1e-15, 0.0};
    t.add(std::abs(e_minus(p, yp, z, cfg.diff)) / std::max(1.0, std::abs(yp(z))));
    t.add(std::abs(e_plus(p, ym, z, cfg.diff)) / std::max(1.0, std::abs(ym(z))));
  }
  return {{{"draws", 10}, {"relative", true}}, t.points, t.worst, 1e-6};
}

Outcome check_harmonic_blocks(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  const std::vector<std::pair<int, cplx>> cases{{2, 0.0}, {2, 0.6}, {0, cplx(-1.5, 0.3)}};
  for (const auto& [ell, r] : cases) {
    const SampledFunction g = term_fn({TermKind::inc_gamma, -1, Jet{1.0}}, ell, r);
    const SampledFunction m = term_fn({TermKind::m_type, 0, Jet{1.0}}, ell, r);
    for (int i = 0; i < 5; ++i) {
      const UhpPoint z(uniform(rng, -0.4, 0.4), uniform(rng, 0.5, 2.0));
      const cplx p = static_cast<double>(ell) + r;
      t.add(std::abs(laplace(p, g, z, cfg.diff)));
      t.add(std::abs(laplace(p, m, z, cfg.diff)));
    }
  }
  return {{{"cases", "(2,0), (2,0.6), (0,-1.5+0.3i)"}, {"terms", "inc_gamma nu=-1, m_type nu=0"}}, t.points, t.worst,
          1e-5};
}

Outcome check_xi_intertwining(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  struct Case {
    SampledFunction F;
    cplx p;
    cplx r;
  };
  const cplx rc(-1.5, 0.3);
  const std::vector<Case> cases{{value_fn(eta_lift_at_zero(cfg.trunc, cfg.mutation)), 2.0, 0.0},
                                {term_fn({TermKind::inc_gamma, -1, Jet{1.0}}, 0, rc), rc, rc}};
  const std::vector<GroupElement> gs{GroupElement::S(), GroupElement::T() * GroupElement::S()};
  for (const auto& c : cases) {
    const MultiplierSystem ms{Jet{c.r}};
    for (const auto& g : gs) {
      for (int i = 0; i < 5; ++i) {
        const UhpPoint z(uniform(rng, -0.4, 0.4), uniform(rng, 0.7, 1.6));
        const cplx lhs = xi(c.p, slash_hol(c.p, ms, g, c.F), z, cfg.diff);
        const cplx rhs = slash_antihol(2.0 - c.p, ms, g, apply(xi, c.p, c.F, cfg.diff))(z);
        t.add(std::abs(lhs - rhs));
      }
    }
  }
  return {{{"functions", "e2 non-holomorphic (p=2), inc_gamma term (p=r=-1.5+0.3i)"}, {"elements", "S, TS"}},
          t.points, t.worst, 1e-5};
}

Outcome check_rh_intertwining(const VerifyConfig&, Rng& rng) {
  Tracker t;
  for (cplx r : {cplx(0.7, 0.2), cplx(-1.5)}) {
    const MultiplierSystem ms{Jet{r}};
    const SampledFunction F{[r](const UhpPoint& w) { return eta_power_at(Jet{r}, w).val; }, 1e-13, 1e-4};
    for (const auto& g : {GroupElement::S(), GroupElement::T() * GroupElement::S()}) {
      for (int i = 0; i < 5; ++i) {
        const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
        const cplx lhs = slash_ra(r, ms, g, rh_weight(r, F))(z);
        const cplx rhs = rh_weight(r, slash_hol(r, ms, g, F))(z);
        t.add(std::abs(lhs - rhs));
        // R^h applied to an eta power with its own weight is invariant.
        t.add(std::abs(rh_weight(r, F)(z) - lhs));
      }
    }
  }
  return {{{"r", "0.7+0.2i, -1.5"}, {"elements", "S, TS"}}, t.points, t.worst, 1e-8};
}

// ---- lift ----------------------------------------------------------------

Outcome check_lift_eq(const VerifyConfig& cfg, Rng&) {
  const SampledFunction F = value_fn(eta_lift_at_zero(cfg.trunc, cfg.mutation));
  Tracker t;
  for (const auto& z : lift_grid()) {
    t.add(std::abs(xi(2.0, F, z, cfg.diff) - 1.0));
  }
  return {{{"trunc", cfg.trunc}, {"grid", "x in {-0.4..0.4} x y in {0.5..2}"}}, t.points, t.worst, 1e-6};
}

Outcome check_lift_harmonic(const VerifyConfig& cfg, Rng&) {
  const SampledFunction F = value_fn(eta_lift_at_zero(cfg.trunc, cfg.mutation));
  Tracker t;
  for (const auto& z : lift_grid()) {
    t.add(std::abs(laplace(2.0, F, z, cfg.diff)));
  }
  return {{{"trunc", cfg.trunc}, {"scheme", "central4"}, {"h", "1e-3 y"}}, t.points, t.worst, 1e-5};
}

Outcome check_lift_modularity(const VerifyConfig& cfg, Rng&) {
  const SampledFunction F = value_fn(eta_lift_at_zero(cfg.trunc, cfg.mutation));
  const GroupElement S = GroupElement::S();
  const GroupElement T = GroupElement::T();
  Tracker t;
  for (const auto& g : {S, T, T * S, S * GroupElement::T(-1) * S}) {
    for (const auto& z : modular_base_points()) {
      t.add(slash_transform_check(F, 2.0, {Jet{0.0}}, g, z));
    }
  }
  return {{{"elements", "S, T, TS, ST^-1S"}, {"base_points", 5}}, t.points, t.worst, 1e-6};
}

double deriv_lift_residual(const HarmonicExpansion& h, const VerifyConfig& cfg, Rng& rng, Tracker& t) {
  const SampledFunction Hp = deriv_fn(h);
  for (int i = 0; i < 10; ++i) {
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    t.add(std::abs(xi(2.0, Hp, z, cfg.diff) + std::log(z.y) + 2.0 * std::conj(log_eta_at(z))));
  }
  return t.worst;
}

double deriv_modularity_residual(const HarmonicExpansion& h, Tracker& t) {
  const GroupElement S = GroupElement::S();
  for (const auto& g : {S, GroupElement::T() * S}) {
    const cplx lambda = multiplier({Jet::variable(0.0)}, g).d1;
    for (const auto& z : modular_base_points()) {
      const Jet at_z = assemble(h, z).value;
      const Jet at_gz = assemble(h, g.apply(z)).value;
      const cplx w = g.factor(z.z());
      const cplx rhs = lambda * w * w * at_z.val + w * w * std::log(w) * at_z.val + w * w * at_z.d1;
      t.add(std::abs(at_gz.d1 - rhs));
    }
  }
  return t.worst;
}

Outcome check_deriv_lift_eq(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  deriv_lift_residual(eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation), cfg, rng, t);
  return {{{"trunc", cfg.trunc}, {"points", "10 random, y in [0.5, 2]"}}, t.points, t.worst, 1e-5};
}

Outcome check_deriv_modularity(const VerifyConfig& cfg, Rng&) {
  Tracker t;
  deriv_modularity_residual(eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation), t);
  return {{{"trunc", cfg.trunc}, {"elements", "S, TS"}, {"base_points", 5}}, t.points, t.worst, 1e-5};
}

HarmonicExpansion stepped_derivative(const VerifyConfig& cfg) {
  const HarmonicExpansion h = eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation);
  return step_family(h, j_family(h.ell, h.M, h.r, cfg.trunc));
}

Outcome check_lift_step(const VerifyConfig& cfg, Rng&) {
  Tracker t;
  const HarmonicExpansion h = eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation);
  const HarmonicExpansion s = stepped_derivative(cfg);
  const QExpansion a = xi_image(h);
  const QExpansion b = xi_image(s);
  const bool same = a.lo() == b.lo() && a.hi() == b.hi() && std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin()) &&
                    a.offset() == b.offset();
  t.add(same ? 0.0 : 1.0);
  try {
    s.validate();
    t.add(s.M == h.M + 1 ? 0.0 : 1.0);
  } catch (const std::invalid_argument&) {
    t.add(1.0);
  }
  // At r = 0 the value part is untouched because a_{-1}(0) = 0.
  const HarmonicExpansion h0 = eta_lift_at_zero(cfg.trunc, cfg.mutation);
  const HarmonicExpansion s0 = step_family(h0, j_family(2, 1, Jet{}, cfg.trunc));
  double diff = 0.0;
  for (const auto& z : modular_base_points()) {
    diff = std::max(diff, std::abs(assemble(h0, z).value.val - assemble(s0, z).value.val));
  }
  t.add(diff);
  return {{{"exact", "xi-image and ranges"}, {"M", {h.M, s.M}}}, t.points, t.worst, 1e-12};
}

Outcome check_lift_step_deriv(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  const HarmonicExpansion s = stepped_derivative(cfg);
  deriv_lift_residual(s, cfg, rng, t);
  deriv_modularity_residual(s, t);
  return {{{"trunc", cfg.trunc}, {"M", s.M}}, t.points, t.worst, 1e-5};
}

Outcome check_lift_xi_image(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  HarmonicExpansion h = eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation);
  const QExpansion img = xi_image(h);
  const SampledFunction Hp = deriv_fn(h);
  const SampledFunction H0 = value_fn(h);
  for (int i = 0; i < 10; ++i) {
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    const Jet expect = img.eval(z).value;
    // xi_{2+r} acting on a jet: value xi_2 H0, derivative xi_2 H' + log y xi_2 H0.
    const cplx v = xi(2.0, H0, z, cfg.diff);
    const cplx d = xi(2.0, Hp, z, cfg.diff) + std::log(z.y) * v;
    t.add(std::abs(v - expect.val) + std::abs(d - expect.d1));
  }
  // Structural bijection between non-holomorphic terms and image coefficients.
  for (const auto& term : h.terms) {
    if (term.kind != TermKind::hol) {
      t.add(magnitude(img.coeff(-term.nu) - term.coeff));
    }
  }
  return {{{"points", 10}}, t.points, t.worst, 1e-6};
}

Outcome check_mock_split(const VerifyConfig& cfg, Rng& rng) {
  Tracker t;
  const HarmonicExpansion h = eta_lift_derivative_at_zero(cfg.trunc, cfg.mutation);
  const MockSplit split = mock_split(h);
  for (int i = 0; i < 10; ++i) {
    const UhpPoint z(uniform(rng, -0.5, 0.5), uniform(rng, 0.5, 2.0));
    Jet sum = split.mock.eval(z).value;
    for (const auto& term : split.completion) {
      sum += term_eval(term, h.ell, h.r, z);
    }
    const Jet whole = assemble(h, z).value;
    t.add(magnitude(sum - whole) / std::max(1.0, magnitude(whole)));
  }
  return {{{"points", 10}}, t.points, t.worst, 1e-12};
}

std::vector<UhpPoint> interior_points(Rng& rng) {
  std::vector<UhpPoint> pts;
  for (double rho : {0.1, 0.3, 0.5}) {
    for (int k = 0; k < 3; ++k) {
      const cplx w = std::polar(rho, uniform(rng, -pi, pi));
      pts.emplace_back(I * (1.0 + w) / (1.0 - w));
    }
  }
  return pts;
}

Outcome check_interior(const VerifyConfig& cfg, Rng& rng, bool harmonic) {
  Tracker t;
  const std::vector<UhpPoint> pts = interior_points(rng);
  for (const auto& [ell, r] : std::vector<std::pair<int, double>>{{2, 0.0}, {0, -1.5}}) {
    for (int nu : {-1, -2}) {
      const InteriorTerm term{UhpPoint(0.0, 1.0), nu, Jet{1.0}, InteriorKind::inc_beta};
      const SampledFunction F{[term, ell, r](const UhpPoint& z) { return interior_term_eval(term, ell, Jet{r}, z).val; },
                              1e-13, 0.0};
      const cplx p = ell + r;
      for (const auto& z : pts) {
        if (harmonic) {
          t.add(std::abs(laplace(p, F, z, cfg.diff)));
        } else {
          t.add(std::abs(xi(p, F, z, cfg.diff) - interior_xi_image(term, ell, Jet{r}, z).val));
        }
      }
    }
  }
  return {{{"cases", "(2,0), (0,-1.5)"}, {"zeta", "i"}, {"nu", {-1, -2}}, {"|w|", {0.1, 0.3, 0.5}}}, t.points, t.worst,
          1e-5};
}

using CheckFn = std::function<Outcome(const VerifyConfig&, Rng&)>;

const std::map<std::string, std::pair<std::string, CheckFn>>& registry() {
  static const std::map<std::string, std::pair<std::string, CheckFn>> checks{
      {"specfun-constants", {"specfun", check_constants}},
      {"specfun-inc-gamma-recurrence", {"specfun", check_inc_gamma_recurrence}},
      {"specfun-m-forms", {"specfun", check_m_forms}},
      {"specfun-m-dy", {"specfun", check_m_dy}},
      {"specfun-inc-beta-b1", {"specfun", check_inc_beta_b1}},
      {"specfun-dedekind", {"specfun", check_dedekind}},
      {"forms-eta-product", {"forms", check_eta_product}},
      {"forms-classical", {"forms", check_classical_identities}},
      {"forms-multiplier-generators", {"forms", check_multiplier_generators}},
      {"forms-multiplier-eta", {"forms", check_multiplier_eta}},
      {"forms-multiplier-paths", {"forms", check_multiplier_paths}},
      {"forms-slash-representation", {"forms", check_slash_representation}},
      {"forms-j-family", {"forms", check_j_family}},
      {"ops-e-relations", {"operators", check_e_relations}},
      {"ops-diagram", {"operators", check_diagram}},
      {"ops-fd-order", {"operators", check_fd_order}},
      {"ops-xi-kernel", {"operators", check_xi_kernel}},
      {"ops-monomials", {"operators", check_monomials}},
      {"ops-harmonic-blocks", {"operators", check_harmonic_blocks}},
      {"ops-xi-intertwining", {"operators", check_xi_intertwining}},
      {"ops-rh-intertwining", {"operators", check_rh_intertwining}},
      {"lift-eq-r0", {"lift", check_lift_eq}},
      {"lift-harmonic", {"lift", check_lift_harmonic}},
      {"lift-modularity-r0", {"lift", check_lift_modularity}},
      {"deriv-lift-eq", {"lift", check_deriv_lift_eq}},
      {"deriv-modularity", {"lift", check_deriv_modularity}},
      {"lift-step", {"lift", check_lift_step}},
      {"lift-step-deriv", {"lift", check_lift_step_deriv}},
      {"lift-xi-image", {"lift", check_lift_xi_image}},
      {"lift-mock-split", {"lift", check_mock_split}},
      {"lift-interior-harmonic", {"lift", [](const VerifyConfig& c, Rng& g) { return check_interior(c, g, true); }}},
      {"lift-interior-xi", {"lift", [](const VerifyConfig& c, Rng& g) { return check_interior(c, g, false); }}},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "forms", "lift", "operators", "specfun"};
  return names;
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<std::string> ids;
  for (const auto& [id, entry] : registry()) {
    if (suite == "all" || entry.first == suite) {
      ids.push_back(id);
    }
  }
  return ids;
}

VerificationReport run_check(const std::string& check_id, const VerifyConfig& cfg) {
  const auto it = registry().find(check_id);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown check '" + check_id + "'");
  }
  Rng rng(cfg.seed ^ fnv1a(check_id));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check_id = check_id;
  try {
    Outcome o = it->second.second(cfg, rng);
    rep.params = std::move(o.params);
    rep.points = o.points;
    rep.max_residual = o.max_residual;
    rep.tolerance = cfg.tol.value_or(o.tolerance);
  } catch (const std::exception& e) {
    rep.params["error"] = e.what();
    rep.max_residual = INFINITY;
    rep.tolerance = cfg.tol.value_or(0.0);
  }
  rep.params["seed"] = cfg.seed;
  if (!cfg.mutation.is_identity()) {
    rep.params["mutated"] = true;
  }
  rep.pass = rep.max_residual <= rep.tolerance;
  rep.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  const std::vector<std::string> ids = suite_checks(suite);
  std::vector<VerificationReport> out;
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& id : ids) {
      jobs.push_back(std::async(std::launch::async, [&cfg, id] { return run_check(id, cfg); }));
    }
    for (auto& j : jobs) {
      out.push_back(j.get());
    }
  } else {
    for (const auto& id : ids) {
      out.push_back(run_check(id, cfg));
    }
  }
  return out;
}

LiftMutation parse_mutation(const std::string& name) {
  static const std::map<std::string, int> sign_index{{"conv", 0},     {"divisor-log", 1}, {"sigma1", 2},
                                                     {"sigma-1", 3},  {"b0-const", 4},    {"b0-gamma", 5},
                                                     {"b0-zeta", 6}};
  LiftMutation m;
  if (name == "b5") {
    m.b5_shift = 0.01 * 48.0 * pi;
    return m;
  }
  const auto it = sign_index.find(name);
  if (it == sign_index.end()) {
    throw std::invalid_argument("unknown mutation '" + name + "'");
  }
  m.signs[static_cast<std::size_t>(it->second)] = -1.0;
  return m;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"check_id", r.check_id},       {"params", r.params},       {"points", r.points},
          {"max_residual", r.max_residual}, {"tolerance", r.tolerance}, {"pass", r.pass},
          {"runtime_ms", r.runtime_ms}};
}

}  // namespace harmolift
