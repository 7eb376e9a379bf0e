#pragma once

#include <span>
#include <vector>

#include "harmolift/jet.hpp"

namespace harmolift {

enum class Orientation { holomorphic, antiholomorphic };

/// Value of a truncated expansion at a point together with an a-posteriori
/// estimate of the discarded tail.
struct EvalResult {
  Jet value;
  double tail{};
};

/// Truncated Fourier expansion sum_{lo <= nu <= hi} c_nu q^{nu + offset}.
///
/// Holomorphic orientation uses q = e^{2 pi i z}; antiholomorphic uses
/// qbar = e^{-2 pi i zbar}. The offset is a jet so that families such as
/// q^{r/12} carry their r-derivative. Coefficients on [lo, hi] are stored
/// densely, zeros included; nothing beyond hi is claimed to be known.
class QExpansion {
 public:
  QExpansion(Orientation orientation, Jet offset, int lo, std::vector<Jet> coeffs);

  /// Holomorphic constant series c (offset 0) valid up to index hi.
  static QExpansion constant(Jet c, int hi, Orientation o = Orientation::holomorphic);

  /// Zero series on [lo, hi].
  static QExpansion zero(int lo, int hi, Jet offset = {}, Orientation o = Orientation::holomorphic);

  Orientation orientation() const { return orientation_; }
  const Jet& offset() const { return offset_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Jet> coeffs() const { return coeffs_; }

  /// Coefficient of index nu; zero below lo. Throws std::out_of_range above hi.
  Jet coeff(int nu) const;

  /// Same series with every coefficient multiplied by c.
  QExpansion scaled(const Jet& c) const;

  /// Re-expresses the series with offset - k, i.e. moves an integer k from the
  /// offset into the indices. The represented function is unchanged.
  QExpansion shifted(int k) const;

  /// Restricts the series to indices <= hi (hi must not exceed the current hi).
  QExpansion truncated(int new_hi) const;

  /// sum c_nu e^{2 pi i (nu+offset) z}, or the conjugate variant, with tail
  /// estimate |c_hi| e^{-2 pi (hi + Re offset) y} / (1 - e^{-2 pi y}).
  EvalResult eval(const UhpPoint& z) const;

 private:
  Orientation orientation_;
  Jet offset_;
  int lo_;
  std::vector<Jet> coeffs_;
};

/// Tolerance for deciding two offsets are equal.
inline constexpr double kOffsetTolerance = 1e-12;

QExpansion add(const QExpansion& a, const QExpansion& b);
QExpansion sub(const QExpansion& a, const QExpansion& b);

/// Cauchy product; hi is chosen so that every reported coefficient is complete.
QExpansion mul(const QExpansion& a, const QExpansion& b);

/// Integer power a^n for n >= 0.
QExpansion pow(const QExpansion& a, int n);

/// Truncated exponential of a holomorphic series with no terms of index <= 0.
QExpansion exp_series(const QExpansion& a);

/// Flips orientation and conjugates the family: c_nu(r) -> conj(c_nu(conj r)).
QExpansion conjugate_family(const QExpansion& a);

inline QExpansion operator+(const QExpansion& a, const QExpansion& b) { return add(a, b); }
inline QExpansion operator-(const QExpansion& a, const QExpansion& b) { return sub(a, b); }
inline QExpansion operator*(const QExpansion& a, const QExpansion& b) { return mul(a, b); }

/// e^{2 pi i alpha z} (holomorphic) or e^{-2 pi i alpha zbar} (antiholomorphic)
/// as a jet in the family parameter carried by alpha.
Jet q_power(const Jet& alpha, const UhpPoint& z, Orientation o = Orientation::holomorphic);

}  // namespace harmolift
