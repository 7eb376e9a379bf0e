#include "harmolift/operators.hpp"

#include <stdexcept>

#include "harmolift/errors.hpp"

namespace harmolift {

void validate(const DiffConfig& cfg) {
  if (!(cfg.h > 0.0 && cfg.h < 0.1)) {
    throw std::invalid_argument("DiffConfig: step must satisfy 0 < h < 0.1");
  }
}

namespace {

// Central stencils on f(t + k h), k = -2..2.
cplx first(const cplx* v, double h, Scheme s) {
  if (s == Scheme::central2) {
    return (v[3] - v[1]) / (2.0 * h);
  }
  return (v[0] - 8.0 * v[1] + 8.0 * v[3] - v[4]) / (12.0 * h);
}

cplx second(const cplx* v, double h, Scheme s) {
  if (s == Scheme::central2) {
    return (v[3] - 2.0 * v[2] + v[1]) / (h * h);
  }
  return (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * h * h);
}

}  // namespace

Partials partials(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  validate(cfg);
  const double h = cfg.step_at(z);
  const int reach = cfg.scheme == Scheme::central2 ? 1 : 2;
  if (z.y - reach * h < f.min_y || z.y - reach * h <= 0.0) {
    throw AccuracyRegionError("finite-difference stencil leaves the accuracy region");
  }
  cplx vx[5];
  cplx vy[5];
  const cplx center = f(z);
  for (int k = -2; k <= 2; ++k) {
    if (k == 0 || (reach == 1 && (k == -2 || k == 2))) {
      vx[k + 2] = vy[k + 2] = center;
      continue;
    }
    vx[k + 2] = f(UhpPoint(z.x + k * h, z.y));
    vy[k + 2] = f(UhpPoint(z.x, z.y + k * h));
  }
  return {first(vx, h, cfg.scheme), first(vy, h, cfg.scheme), second(vx, h, cfg.scheme), second(vy, h, cfg.scheme)};
}

cplx d_z(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  return 0.5 * (d.fx - I * d.fy);
}

cplx d_zbar(const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  return 0.5 * (d.fx + I * d.fy);
}

cplx xi(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  return 2.0 * I * std::pow(cplx(z.y), p) * d_zbar(f, z, cfg);
}

cplx laplace(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  const double y = z.y;
  // 4 d_z d_zbar = f_xx + f_yy.
  return -y * y * (d.fxx + d.fyy) + I * p * y * (d.fx + I * d.fy);
}

cplx e_plus(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  return 2.0 * I * z.y * d.fx + 2.0 * z.y * d.fy + p * f(z);
}

cplx e_minus(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  return -2.0 * I * z.y * d.fx + 2.0 * z.y * d.fy - p * f(z);
}

cplx casimir(cplx p, const SampledFunction& f, const UhpPoint& z, const DiffConfig& cfg) {
  const Partials d = partials(f, z, cfg);
  const double y = z.y;
  return -y * y * (d.fyy + d.fxx) + I * p * y * d.fx;
}

SampledFunction apply(PointOperator op, cplx p, const SampledFunction& f, const DiffConfig& cfg) {
  const int reach = cfg.scheme == Scheme::central2 ? 1 : 2;
  SampledFunction out;
  out.eval = [op, p, f, cfg](const UhpPoint& z) { return op(p, f, z, cfg); };
  out.accuracy = f.accuracy / cfg.h;
  out.min_y = f.min_y / (1.0 - reach * cfg.h);
  return out;
}

SampledFunction rh_weight(cplx p, const SampledFunction& f) {
  SampledFunction out = f;
  out.eval = [p, f](const UhpPoint& z) { return std::pow(cplx(z.y), p / 2.0) * f(z); };
  return out;
}

SampledFunction ra_weight(cplx p, const SampledFunction& f) {
  SampledFunction out = f;
  out.eval = [p, f](const UhpPoint& z) { return std::pow(cplx(z.y), -p / 2.0) * f(z); };
  return out;
}

namespace {

SampledFunction slashed(const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f,
                        std::function<cplx(const UhpPoint&)> factor) {
  const cplx vinv = 1.0 / multiplier(ms, g).val;
  SampledFunction out;
  out.accuracy = f.accuracy;
  out.min_y = 0.0;
  out.eval = [vinv, g, f, factor = std::move(factor)](const UhpPoint& z) { return vinv * factor(z) * f(g.apply(z)); };
  return out;
}

}  // namespace

SampledFunction slash_ra(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f) {
  return slashed(ms, g, f, [p, g](const UhpPoint& z) { return std::exp(-I * p * std::arg(g.factor(z.z()))); });
}

SampledFunction slash_hol(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f) {
  return slashed(ms, g, f, [p, g](const UhpPoint& z) { return std::exp(-p * std::log(g.factor(z.z()))); });
}

SampledFunction slash_antihol(cplx p, const MultiplierSystem& ms, const GroupElement& g, const SampledFunction& f) {
  return slashed(ms, g, f, [p, g](const UhpPoint& z) {
    const cplx w = g.factor(std::conj(z.z()));
    double arg = std::arg(w);
    if (arg >= pi) {
      arg -= 2.0 * pi;
    }
    return std::exp(-p * cplx(std::log(std::abs(w)), arg));
  });
}

}  // namespace harmolift
