#include "harmolift/qexp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace harmolift {

UhpPoint::UhpPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(y_ > 0.0)) {
    throw std::invalid_argument("UhpPoint: imaginary part must be positive, got " + std::to_string(y_));
  }
}

UhpPoint::UhpPoint(cplx z) : UhpPoint(z.real(), z.imag()) {}

QExpansion::QExpansion(Orientation orientation, Jet offset, int lo, std::vector<Jet> coeffs)
    : orientation_(orientation), offset_(offset), lo_(lo), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("QExpansion: empty coefficient range (lo > hi)");
  }
}

QExpansion QExpansion::constant(Jet c, int hi, Orientation o) {
  if (hi < 0) {
    throw std::invalid_argument("QExpansion::constant: hi must be >= 0");
  }
  std::vector<Jet> cs(static_cast<std::size_t>(hi) + 1);
  cs[0] = c;
  return {o, Jet{}, 0, std::move(cs)};
}

QExpansion QExpansion::zero(int lo, int hi, Jet offset, Orientation o) {
  if (lo > hi) {
    throw std::invalid_argument("QExpansion::zero: lo > hi");
  }
  return {o, offset, lo, std::vector<Jet>(static_cast<std::size_t>(hi - lo + 1))};
}

Jet QExpansion::coeff(int nu) const {
  if (nu < lo_) {
    return {};
  }
  if (nu > hi()) {
    throw std::out_of_range("QExpansion::coeff: index " + std::to_string(nu) + " beyond truncation " +
                            std::to_string(hi()));
  }
  return coeffs_[static_cast<std::size_t>(nu - lo_)];
}

QExpansion QExpansion::scaled(const Jet& c) const {
  std::vector<Jet> cs(coeffs_);
  for (auto& x : cs) {
    x *= c;
  }
  return {orientation_, offset_, lo_, std::move(cs)};
}

QExpansion QExpansion::shifted(int k) const {
  return {orientation_, offset_ - Jet{static_cast<double>(k)}, lo_ + k, coeffs_};
}

QExpansion QExpansion::truncated(int new_hi) const {
  if (new_hi > hi() || new_hi < lo_) {
    throw std::invalid_argument("QExpansion::truncated: new hi outside [lo, hi]");
  }
  return {orientation_, offset_, lo_,
          std::vector<Jet>(coeffs_.begin(), coeffs_.begin() + (new_hi - lo_ + 1))};
}

Jet q_power(const Jet& alpha, const UhpPoint& z, Orientation o) {
  const cplx w = o == Orientation::holomorphic ? 2.0 * pi * I * z.z() : -2.0 * pi * I * std::conj(z.z());
  const cplx e = std::exp(alpha.val * w);
  return {e, w * alpha.d1 * e};
}

EvalResult QExpansion::eval(const UhpPoint& z) const {
  const cplx w = orientation_ == Orientation::holomorphic ? 2.0 * pi * I * z.z()
                                                         : -2.0 * pi * I * std::conj(z.z());
  const cplx q = std::exp(w);
  Jet sum{};
  cplx qn = std::exp(w * static_cast<double>(lo_));
  for (const auto& c : coeffs_) {
    sum += c * Jet{qn};
    qn *= q;
  }
  const Jet prefactor = q_power(offset_, z, orientation_);
  const double aq = std::abs(q);
  const double tail = magnitude(coeffs_.back()) * std::abs(qn / q) * std::abs(prefactor.val) * aq / (1.0 - aq);
  return {sum * prefactor, tail};
}

namespace {

void require_compatible(const QExpansion& a, const QExpansion& b, const char* op, bool check_offset) {
  if (a.orientation() != b.orientation()) {
    throw std::invalid_argument(std::string(op) + ": orientation mismatch");
  }
  if (check_offset) {
    const Jet d = a.offset() - b.offset();
    if (std::abs(d.val) > kOffsetTolerance || std::abs(d.d1) > kOffsetTolerance) {
      throw std::invalid_argument(std::string(op) + ": offset mismatch");
    }
  }
}

QExpansion combine(const QExpansion& a, const QExpansion& b, double sign) {
  require_compatible(a, b, "add", true);
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::min(a.hi(), b.hi());
  std::vector<Jet> cs(static_cast<std::size_t>(hi - lo + 1));
  for (int nu = lo; nu <= hi; ++nu) {
    cs[static_cast<std::size_t>(nu - lo)] = a.coeff(nu) + Jet{sign} * b.coeff(nu);
  }
  return {a.orientation(), a.offset(), lo, std::move(cs)};
}

}  // namespace

QExpansion add(const QExpansion& a, const QExpansion& b) { return combine(a, b, 1.0); }
QExpansion sub(const QExpansion& a, const QExpansion& b) { return combine(a, b, -1.0); }

QExpansion mul(const QExpansion& a, const QExpansion& b) {
  require_compatible(a, b, "mul", false);
  const int lo = a.lo() + b.lo();
  const int hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Jet> cs(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t n = 0; n < cs.size(); ++n) {
    Jet s{};
    for (std::size_t i = 0; i <= n; ++i) {
      s += ac[i] * bc[n - i];
    }
    cs[n] = s;
  }
  return {a.orientation(), a.offset() + b.offset(), lo, std::move(cs)};
}

QExpansion pow(const QExpansion& a, int n) {
  if (n < 0) {
    throw std::invalid_argument("pow: negative exponent");
  }
  QExpansion result = QExpansion::constant(Jet{1.0}, a.hi() - a.lo(), a.orientation());
  for (int k = 0; k < n; ++k) {
    result = mul(result, a);
  }
  return result;
}

QExpansion exp_series(const QExpansion& a) {
  if (a.orientation() != Orientation::holomorphic) {
    throw std::invalid_argument("exp_series: holomorphic series required");
  }
  if (a.offset() != Jet{}) {
    throw std::invalid_argument("exp_series: nonzero exponent offset");
  }
  for (int nu = a.lo(); nu <= std::min(0, a.hi()); ++nu) {
    if (a.coeff(nu) != Jet{}) {
      throw std::invalid_argument("exp_series: nonzero constant or negative-index term");
    }
  }
  const int hi = a.hi();
  if (hi < 0) {
    return QExpansion::constant(Jet{1.0}, 0);
  }
  // b = exp(a) satisfies q b' = (q a') b, i.e. n b_n = sum_k k a_k b_{n-k}.
  std::vector<Jet> b(static_cast<std::size_t>(hi) + 1);
  b[0] = Jet{1.0};
  for (int n = 1; n <= hi; ++n) {
    Jet s{};
    for (int k = std::max(1, a.lo()); k <= n; ++k) {
      s += Jet{static_cast<double>(k)} * a.coeff(k) * b[static_cast<std::size_t>(n - k)];
    }
    b[static_cast<std::size_t>(n)] = s / Jet{static_cast<double>(n)};
  }
  return {Orientation::holomorphic, Jet{}, 0, std::move(b)};
}

QExpansion conjugate_family(const QExpansion& a) {
  std::vector<Jet> cs(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : cs) {
    c = conj(c);
  }
  const Orientation flipped =
      a.orientation() == Orientation::holomorphic ? Orientation::antiholomorphic : Orientation::holomorphic;
  return {flipped, conj(a.offset()), a.lo(), std::move(cs)};
}

}  // namespace harmolift
