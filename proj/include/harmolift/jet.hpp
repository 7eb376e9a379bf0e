#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace harmolift {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// First-order jet in the family parameter r: a value together with d/dr.
///
/// Arithmetic follows the product and chain rules, so any expression built
/// from jets carries its exact first derivative. Scalars embed with d1 = 0.
struct Jet {
  cplx val{};
  cplx d1{};

  constexpr Jet() = default;
  constexpr Jet(cplx v) : val(v) {}  // NOLINT: implicit scalar embedding
  constexpr Jet(double v) : val(v) {}  // NOLINT
  constexpr Jet(cplx v, cplx d) : val(v), d1(d) {}

  /// The identity jet r -> r at r = r0.
  static constexpr Jet variable(cplx r0) { return {r0, 1.0}; }

  Jet& operator+=(const Jet& o) {
    val += o.val;
    d1 += o.d1;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    val -= o.val;
    d1 -= o.d1;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    d1 = val * o.d1 + d1 * o.val;
    val *= o.val;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    d1 = (d1 * o.val - val * o.d1) / (o.val * o.val);
    val /= o.val;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(const Jet& a) { return {-a.val, -a.d1}; }

  friend bool operator==(const Jet& a, const Jet& b) = default;
};

inline Jet conj(const Jet& a) { return {std::conj(a.val), std::conj(a.d1)}; }

inline Jet exp(const Jet& a) {
  const cplx e = std::exp(a.val);
  return {e, e * a.d1};
}

/// Principal logarithm, arg in (-pi, pi].
inline Jet log(const Jet& a) { return {std::log(a.val), a.d1 / a.val}; }

/// Principal power w^s = exp(s log w).
inline Jet pow(const Jet& w, const Jet& s) {
  if (w.val == cplx{} && w.d1 == cplx{}) {
    return s.val == cplx{} ? Jet{1.0} : Jet{};
  }
  return exp(s * log(w));
}

inline Jet pow(const Jet& w, int n) {
  Jet result{1.0};
  Jet base = n < 0 ? Jet{1.0} / w : w;
  for (unsigned k = static_cast<unsigned>(n < 0 ? -n : n); k != 0; k >>= 1) {
    if (k & 1U) {
      result *= base;
    }
    base *= base;
  }
  return result;
}

/// Magnitude bound used for tail estimates: |val| + |d1|.
inline double magnitude(const Jet& a) { return std::abs(a.val) + std::abs(a.d1); }

/// Point z = x + iy of the upper half-plane.
struct UhpPoint {
  double x{};
  double y{1.0};

  UhpPoint() = default;
  UhpPoint(double x_, double y_);
  explicit UhpPoint(cplx z);

  cplx z() const { return {x, y}; }
};

}  // namespace harmolift
