#include "harmolift/forms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "harmolift/errors.hpp"
#include "harmolift/specfun.hpp"

namespace harmolift {

GroupElement::GroupElement(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1) {
    throw std::invalid_argument("GroupElement: determinant must be 1");
  }
}

UhpPoint GroupElement::apply(const UhpPoint& z) const {
  const cplx w = z.z();
  return UhpPoint((static_cast<double>(a) * w + static_cast<double>(b)) / factor(w));
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

Jet EtaLog::eval(const UhpPoint& z) const { return Jet{linear_coeff * z.z()} + series.eval(z).value; }

WeightData WeightData::for_weight(int ell) {
  if (ell % 2 != 0) {
    throw std::invalid_argument("WeightData: weight must be even");
  }
  for (int k : {0, 4, 6, 8, 10, 14}) {
    if ((k - ell) % 12 == 0) {
      return {ell, (k - ell) / 12, k};
    }
  }
  throw std::logic_error("WeightData: unreachable");
}

EtaLog log_eta(int trunc) {
  if (trunc < 1) {
    throw std::invalid_argument("log_eta: trunc must be >= 1");
  }
  std::vector<Rational> exact;
  std::vector<Jet> cs;
  for (int n = 1; n <= trunc; ++n) {
    exact.push_back(-sigma(-1, n));
    cs.emplace_back(exact.back().convert_to<double>());
  }
  return {I * pi / 12.0, std::move(exact), QExpansion(Orientation::holomorphic, Jet{}, 1, std::move(cs))};
}

namespace {

// log(1 - w) without cancellation for small w.
std::complex<long double> log1m(cplx w) {
  const std::complex<long double> wl(w.real(), w.imag());
  if (std::abs(w) < 1e-3) {
    std::complex<long double> s = 0.0L;
    std::complex<long double> p = wl;
    for (int k = 1; k <= 8; ++k) {
      s -= p / static_cast<long double>(k);
      p *= wl;
    }
    return s;
  }
  return std::log(1.0L - wl);
}

}  // namespace

cplx log_eta_at(const UhpPoint& z) {
  if (z.y < 1e-4) {
    throw AccuracyRegionError("log_eta_at: Im z below 1e-4");
  }
  const cplx w = z.z();
  std::complex<long double> s = 0.0L;
  for (long m = 1;; ++m) {
    const cplx qm = std::exp(2.0 * pi * I * static_cast<double>(m) * w);
    if (std::abs(qm) < 1e-19) {
      break;
    }
    s += log1m(qm);
  }
  return I * pi * w / 12.0 + cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

QExpansion eta_power(const Jet& r, int trunc) {
  const QExpansion body = exp_series(log_eta(trunc).series.scaled(Jet{2.0} * r));
  return {Orientation::holomorphic, r / Jet{12.0}, body.lo(), {body.coeffs().begin(), body.coeffs().end()}};
}

Jet eta_power_at(const Jet& r, const UhpPoint& z) { return exp(Jet{2.0} * r * Jet{log_eta_at(z)}); }

Rational multiplier_log(const GroupElement& g) {
  if (g.c < 0) {
    return multiplier_log({-g.a, -g.b, -g.c, -g.d}) + 1;
  }
  if (g.c == 0) {
    // +-T^b; the -I factor contributes log(-1) - log(1) on the principal branch.
    return g.d == 1 ? Rational(g.b, 6) : Rational(-g.b, 6) - 1;
  }
  return Rational(g.a + g.d, 6 * g.c) - 2 * dedekind_sum(g.d, g.c) - Rational(1, 2);
}

Jet multiplier(const MultiplierSystem& ms, const GroupElement& g) {
  const cplx lambda = I * pi * multiplier_log(g).convert_to<double>();
  return exp(ms.r * Jet{lambda});
}

Rational bernoulli(int k) {
  if (k < 0) {
    throw std::invalid_argument("bernoulli: negative index");
  }
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational s = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

IntSeries eisenstein(int k, int trunc) {
  if (k != 4 && k != 6 && k != 8 && k != 10 && k != 14) {
    throw std::invalid_argument("eisenstein: k must be one of 4, 6, 8, 10, 14");
  }
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  std::vector<BigInt> cs(static_cast<std::size_t>(trunc) + 1);
  cs[0] = 1;
  for (int n = 1; n <= trunc; ++n) {
    const Rational c = factor * sigma(k - 1, n);
    cs[static_cast<std::size_t>(n)] = numerator(c);
  }
  return {0, std::move(cs)};
}

IntSeries delta_over_q(int trunc) {
  if (trunc < 0) {
    throw std::invalid_argument("delta_over_q: negative truncation");
  }
  // prod_{n <= trunc} (1 - q^n) is exact through q^trunc.
  std::vector<BigInt> p(static_cast<std::size_t>(trunc) + 1);
  p[0] = 1;
  for (int n = 1; n <= trunc; ++n) {
    for (int i = trunc; i >= n; --i) {
      p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - n)];
    }
  }
  return pow(IntSeries(0, std::move(p)), 24);
}

IntSeries delta(int trunc) { return delta_over_q(trunc - 1).shifted(1); }

IntSeries j_invariant(int trunc) {
  if (trunc < 1) {
    throw std::invalid_argument("j_invariant: trunc must be >= 1");
  }
  return divide(pow(eisenstein(4, trunc), 3), delta_over_q(trunc)).shifted(-1);
}

namespace {

void require_family_args(const WeightData& wd, int a, int trunc) {
  if (a < wd.m_ell) {
    throw std::invalid_argument("j_family: a = " + std::to_string(a) + " below m_ell = " + std::to_string(wd.m_ell));
  }
  if (trunc < 1) {
    throw std::invalid_argument("j_family: trunc must be >= 1");
  }
}

}  // namespace

QExpansion j_family(int ell, int a, const Jet& r, int trunc) {
  const WeightData wd = WeightData::for_weight(ell);
  require_family_args(wd, a, trunc);
  const int m = wd.m_ell;
  const int work = trunc + a + 1 + std::max(0, m);

  QExpansion base = eta_power(r - Jet{12.0 * m}, work).shifted(-m);
  if (wd.k != 0) {
    base = base * eisenstein(wd.k, work).to_qexp();
  }
  const QExpansion jq = j_invariant(work).to_qexp();

  std::vector<QExpansion> cands{base};
  for (int i = 1; i <= a - m; ++i) {
    cands.push_back(cands.back() * jq);
  }

  QExpansion f = cands.back();
  for (int nu = -a + 1; nu <= -m; ++nu) {
    const Jet c = f.coeff(nu);
    f = f - cands[static_cast<std::size_t>(-nu - m)].scaled(c);
  }
  f = f.scaled(Jet{1.0} / f.coeff(-a));
  return f.truncated(trunc);
}

IntSeries j_family_exact(int ell, int a, int trunc) {
  const WeightData wd = WeightData::for_weight(ell);
  require_family_args(wd, a, trunc);
  const int m = wd.m_ell;
  const int work = trunc + a + 1 + std::max(0, m);

  IntSeries base = IntSeries::one(work);
  if (m > 0) {
    base = pow(divide(IntSeries::one(work), delta_over_q(work)), m);
  } else if (m < 0) {
    base = pow(delta_over_q(work), -m);
  }
  base = base.shifted(-m);
  if (wd.k != 0) {
    base = base * eisenstein(wd.k, work);
  }
  const IntSeries jq = j_invariant(work);

  std::vector<IntSeries> cands{base};
  for (int i = 1; i <= a - m; ++i) {
    cands.push_back(cands.back() * jq);
  }

  IntSeries f = cands.back();
  for (int nu = -a + 1; nu <= -m; ++nu) {
    const BigInt c = f.coeff(nu);
    f = f - cands[static_cast<std::size_t>(-nu - m)].scaled(c);
  }
  return f.truncated(trunc);
}

HarmonicExpansion e2_nonholomorphic(int trunc) {
  if (trunc < 1) {
    throw std::invalid_argument("e2_nonholomorphic: trunc must be >= 1");
  }
  HarmonicExpansion h;
  h.ell = 2;
  h.r = Jet{};
  h.M = 1;
  h.mu_inf = 0;
  h.m_ell = 1;
  h.trunc = trunc;
  h.terms.push_back({TermKind::m_type, 0, Jet{1.0}});
  h.terms.push_back({TermKind::hol, 0, Jet{1.0 - pi / 3.0}});
  for (int nu = 1; nu <= trunc; ++nu) {
    h.terms.push_back({TermKind::hol, nu, Jet{8.0 * pi * sigma_d(1, nu)}});
  }
  return h;
}

double slash_transform_check(const SampledFunction& F, cplx p, const MultiplierSystem& ms, const GroupElement& g,
                             const UhpPoint& z) {
  const UhpPoint gz = g.apply(z);
  if (z.y < F.min_y || gz.y < F.min_y) {
    throw AccuracyRegionError("slash_transform_check: point outside the accuracy region of F");
  }
  const cplx w = g.factor(z.z());
  const cplx expected = multiplier(ms, g).val * std::exp(p * std::log(w)) * F(z);
  return std::abs(F(gz) - expected);
}

}  // namespace harmolift
