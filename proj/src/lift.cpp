#include "harmolift/lift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "harmolift/errors.hpp"
#include "harmolift/specfun.hpp"

namespace harmolift {

const char* to_string(TermKind k) {
  switch (k) {
    case TermKind::hol:
      return "hol";
    case TermKind::inc_gamma:
      return "inc_gamma";
    case TermKind::m_type:
      return "m_type";
  }
  return "?";
}

TermKind term_kind_from_string(const char* s) {
  const std::string v(s);
  if (v == "hol") {
    return TermKind::hol;
  }
  if (v == "inc_gamma") {
    return TermKind::inc_gamma;
  }
  if (v == "m_type") {
    return TermKind::m_type;
  }
  throw std::invalid_argument("unknown term kind '" + v + "'");
}

void HarmonicExpansion::validate() const {
  if (ell % 2 != 0) {
    throw std::invalid_argument("HarmonicExpansion: ell must be even");
  }
  if (WeightData::for_weight(ell).m_ell != m_ell) {
    throw std::invalid_argument("HarmonicExpansion: m_ell inconsistent with ell");
  }
  if (M <= -mu_inf) {
    throw std::invalid_argument("HarmonicExpansion: requires M > -mu_inf");
  }
  std::map<std::pair<int, int>, int> seen;
  for (const auto& t : terms) {
    const std::string where = std::string(to_string(t.kind)) + " term at nu = " + std::to_string(t.nu);
    bool ok = true;
    switch (t.kind) {
      case TermKind::inc_gamma:
        ok = t.nu <= -std::max(M, mu_inf);
        break;
      case TermKind::m_type:
        ok = t.nu >= 1 - M && t.nu <= -mu_inf;
        break;
      case TermKind::hol:
        ok = t.nu >= 1 - m_ell;
        break;
    }
    if (!ok) {
      throw std::invalid_argument("HarmonicExpansion: " + where + " outside its index range");
    }
    if (++seen[{static_cast<int>(t.kind), t.nu}] > 1) {
      throw std::invalid_argument("HarmonicExpansion: duplicate " + where);
    }
  }
}

std::optional<LiftTerm> HarmonicExpansion::find(TermKind kind, int nu) const {
  for (const auto& t : terms) {
    if (t.kind == kind && t.nu == nu) {
      return t;
    }
  }
  return std::nullopt;
}

namespace {

// c * basis(r), differentiating the basis only when it contributes to d1.
Jet scaled_basis(const Jet& c, const Jet& r, const std::function<cplx(cplx)>& basis) {
  if (c.val == cplx{} || r.d1 == cplx{}) {
    const cplx b = basis(r.val);
    return {c.val * b, c.d1 * b};
  }
  return c * holomorphic_jet(basis, r);
}

cplx principal_pow(cplx w, cplx s) { return w == cplx{} ? cplx{} : std::exp(s * std::log(w)); }

}  // namespace

Jet term_eval(const LiftTerm& t, int ell, const Jet& r, const UhpPoint& z) {
  const double nu = t.nu;
  switch (t.kind) {
    case TermKind::hol:
      return t.coeff * q_power(Jet{nu} + r / Jet{12.0}, z);
    case TermKind::m_type:
      return scaled_basis(t.coeff, r, [&](cplx rv) {
        const cplx n = nu + rv / 12.0;
        const cplx qn = std::exp(2.0 * pi * I * n * z.z());
        return qn * m_func(static_cast<double>(ell) + rv, 4.0 * pi * n, z.y).val;
      });
    case TermKind::inc_gamma: {
      const cplx n0 = nu + r.val / 12.0;
      if (n0.imag() == 0.0 && n0.real() >= 0.0) {
        throw AccuracyRegionError("term_eval: incomplete-gamma term on the branch cut");
      }
      return scaled_basis(t.coeff, r, [&](cplx rv) {
        const cplx n = nu + rv / 12.0;
        const cplx p = static_cast<double>(ell) + rv;
        // q^n e^{-x} folded into exp(2 pi i n zbar) so neither factor overflows
        const cplx qbar = std::exp(2.0 * pi * I * n * std::conj(z.z()));
        return principal_pow(-4.0 * pi * n, p - 1.0) * qbar * inc_gamma_scaled(1.0 - p, -4.0 * pi * n * z.y).val;
      });
    }
  }
  throw std::logic_error("term_eval: unknown kind");
}

EvalResult assemble(const HarmonicExpansion& h, const UhpPoint& z) {
  Jet sum{};
  std::map<TermKind, std::pair<int, double>> edge;
  for (const auto& t : h.terms) {
    const Jet v = term_eval(t, h.ell, h.r, z);
    sum += v;
    auto [it, fresh] = edge.try_emplace(t.kind, t.nu, magnitude(v));
    if (!fresh && std::abs(t.nu) > std::abs(it->second.first)) {
      it->second = {t.nu, magnitude(v)};
    }
  }
  double tail = 0.0;
  for (TermKind k : {TermKind::hol, TermKind::inc_gamma}) {
    if (auto it = edge.find(k); it != edge.end()) {
      tail += it->second.second * std::exp(-2.0 * pi * z.y) / (1.0 - std::exp(-2.0 * pi * z.y));
    }
  }
  return {sum, tail};
}

QExpansion xi_image(const HarmonicExpansion& h) {
  int lo = 0;
  int hi = h.trunc;
  for (const auto& t : h.terms) {
    if (t.kind != TermKind::hol) {
      lo = std::min(lo, -t.nu);
      hi = std::max(hi, -t.nu);
    }
  }
  std::vector<Jet> cs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : h.terms) {
    if (t.kind != TermKind::hol) {
      cs[static_cast<std::size_t>(-t.nu - lo)] += t.coeff;
    }
  }
  return {Orientation::antiholomorphic, -h.r / Jet{12.0}, lo, std::move(cs)};
}

QExpansion antiholo_family(const QExpansion& F, const Jet& r, int trunc) {
  if (F.orientation() != Orientation::antiholomorphic) {
    throw std::invalid_argument("antiholo_family: F must be antiholomorphic");
  }
  if (magnitude(F.offset()) > kOffsetTolerance) {
    throw std::invalid_argument("antiholo_family: F must have offset 0");
  }
  return conjugate_family(eta_power(-conj(r), trunc)) * F;
}

bool LiftMutation::is_identity() const {
  return b5_shift == 0.0 && std::all_of(signs.begin(), signs.end(), [](double s) { return s == 1.0; });
}

double eta_lift_b_prime(int nu, const LiftMutation& mu) {
  const auto [g, zp2] = constants();
  const auto& s = mu.signs;
  if (nu < 0) {
    throw std::invalid_argument("eta_lift_b_prime: nu must be >= 0");
  }
  if (nu == 0) {
    return s[4] * -1.0 + s[5] * (pi / 3.0) * (2.0 * g - std::log(4.0)) + s[6] * -(4.0 / pi) * zp2;
  }
  double conv = 0.0;
  for (int m = 1; m < nu; ++m) {
    conv += sigma_d(-1, m) * sigma_d(1, nu - m);
  }
  double divisor_log = 0.0;
  for (int d = 1; d <= nu; ++d) {
    if (nu % d == 0) {
      divisor_log += static_cast<double>(nu / d) * std::log(static_cast<double>(d) * d / nu);
    }
  }
  return s[0] * -16.0 * pi * conv + s[1] * -8.0 * pi * divisor_log +
         s[2] * -8.0 * pi * (1.0 + g - std::log(4.0 * pi)) * sigma_d(1, nu) +
         s[3] * (2.0 * pi / 3.0) * sigma_d(-1, nu);
}

HarmonicExpansion eta_lift_at_zero(int trunc, const LiftMutation& mutation) {
  HarmonicExpansion h = e2_nonholomorphic(trunc);
  if (mutation.b5_shift != 0.0) {
    for (auto& t : h.terms) {
      if (t.kind == TermKind::hol && t.nu == 5) {
        t.coeff += Jet{mutation.b5_shift};
      }
    }
  }
  return h;
}

HarmonicExpansion eta_lift_derivative_at_zero(int trunc, const LiftMutation& mutation) {
  HarmonicExpansion h = eta_lift_at_zero(trunc, mutation);
  h.r = Jet::variable(0.0);
  for (auto& t : h.terms) {
    if (t.kind == TermKind::hol) {
      t.coeff.d1 = eta_lift_b_prime(t.nu, mutation);
    }
  }
  // a_{-nu}(r) = p_{-nu}(-r): zero at r = 0 with derivative 2 sigma_{-1}(-nu).
  for (int nu = -1; nu >= -trunc; --nu) {
    h.terms.push_back({TermKind::inc_gamma, nu, Jet{0.0, 2.0 * sigma_d(-1, -nu)}});
  }
  return h;
}

Jet step_constant(int ell, int M, const Jet& r) {
  return holomorphic_jet(
      [ell, M](cplx rv) {
        const cplx x = 4.0 * pi * (static_cast<double>(M) - rv / 12.0);
        const cplx p = static_cast<double>(ell) + rv;
        return principal_pow(x, p - 1.0) * inc_gamma(1.0 - p, x).val;
      },
      r);
}

HarmonicExpansion step_family(const HarmonicExpansion& h, const QExpansion& jf) {
  const int M = h.M;
  if (M < std::max(1, 1 - h.mu_inf)) {
    throw std::invalid_argument("step_family: requires M >= max(1, 1 - mu_inf)");
  }
  HarmonicExpansion out = h;
  out.M = M + 1;
  if (M < h.mu_inf) {
    out.validate();
    return out;
  }

  Jet a{};
  for (auto& t : out.terms) {
    if (t.kind == TermKind::inc_gamma && t.nu == -M) {
      a = t.coeff;
      t.kind = TermKind::m_type;
    }
  }
  const Jet correction = a * step_constant(h.ell, M, h.r);

  auto add_hol = [&out](int nu, const Jet& v) {
    for (auto& t : out.terms) {
      if (t.kind == TermKind::hol && t.nu == nu) {
        t.coeff += v;
        return;
      }
    }
    out.terms.push_back({TermKind::hol, nu, v});
  };

  if (M < h.m_ell) {
    // The q^{-M + r/12} term is itself in the holomorphic range.
    add_hol(-M, correction);
  } else {
    if (jf.orientation() != Orientation::holomorphic || jf.lo() != -M ||
        magnitude(jf.offset() - h.r / Jet{12.0}) > kOffsetTolerance) {
      throw std::invalid_argument("step_family: jf is not j_{ell,M,r}");
    }
    for (int nu = 1 - h.m_ell; nu <= std::min(jf.hi(), h.trunc); ++nu) {
      const Jet c = jf.coeff(nu);
      if (c != Jet{}) {
        add_hol(nu, -(correction * c));
      }
    }
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const LiftTerm& x, const LiftTerm& y) {
    return std::pair(static_cast<int>(x.kind), x.nu) < std::pair(static_cast<int>(y.kind), y.nu);
  });
  out.validate();
  return out;
}

MockSplit mock_split(const HarmonicExpansion& h) {
  std::vector<LiftTerm> completion;
  int lo = 0;
  int hi = 0;
  bool any = false;
  for (const auto& t : h.terms) {
    if (t.kind != TermKind::hol) {
      completion.push_back(t);
      continue;
    }
    lo = any ? std::min(lo, t.nu) : t.nu;
    hi = any ? std::max(hi, t.nu) : t.nu;
    any = true;
  }
  std::vector<Jet> cs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : h.terms) {
    if (t.kind == TermKind::hol) {
      cs[static_cast<std::size_t>(t.nu - lo)] += t.coeff;
    }
  }
  return {QExpansion(Orientation::holomorphic, h.r / Jet{12.0}, lo, std::move(cs)), std::move(completion)};
}

void InteriorTerm::validate() const {
  if ((kind == InteriorKind::hol) != (nu >= 0)) {
    throw std::invalid_argument("InteriorTerm: hol requires nu >= 0 and inc_beta nu <= -1");
  }
}

Jet interior_term_eval(const InteriorTerm& t, int ell, const Jet& r, const UhpPoint& z) {
  t.validate();
  const cplx zeta = t.zeta.z();
  const cplx w = (z.z() - zeta) / (z.z() - std::conj(zeta));
  const double aw = std::abs(w);
  if (!(aw < 1.0) || aw == 0.0) {
    throw AccuracyRegionError("interior_term_eval: requires 0 < |w| < 1");
  }
  const cplx wnu = std::pow(w, t.nu);
  const cplx base = z.z() - std::conj(zeta);
  if (t.kind == InteriorKind::hol) {
    return scaled_basis(t.coeff, r, [&](cplx rv) { return principal_pow(base, -(static_cast<double>(ell) + rv)) * wnu; });
  }
  return scaled_basis(t.coeff, r, [&](cplx rv) {
    const cplx p = static_cast<double>(ell) + rv;
    return principal_pow(4.0 * t.zeta.y, p - 1.0) * principal_pow(base, -p) * wnu *
           inc_beta(aw * aw, static_cast<double>(-t.nu), 1.0 - p).val;
  });
}

Jet interior_xi_image(const InteriorTerm& t, int ell, const Jet& r, const UhpPoint& z) {
  t.validate();
  if (t.kind == InteriorKind::hol) {
    return Jet{};
  }
  const cplx zeta = t.zeta.z();
  const cplx w = (z.z() - zeta) / (z.z() - std::conj(zeta));
  return scaled_basis(t.coeff, r, [&](cplx rv) {
    const cplx p = static_cast<double>(ell) + rv;
    return principal_pow(std::conj(z.z()) - zeta, p - 2.0) * std::pow(std::conj(w), -t.nu - 1);
  });
}

}  // namespace harmolift
