#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "harmolift/qexp.hpp"

namespace harmolift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integer Laurent series sum_{lo <= nu <= hi} c_nu q^nu, used for the
/// classical forms E_k, Delta and J where coefficient checks must be exact.
class IntSeries {
 public:
  IntSeries(int lo, std::vector<BigInt> coeffs);

  static IntSeries one(int hi);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of q^nu; zero below lo, throws above hi.
  BigInt coeff(int nu) const;

  IntSeries shifted(int k) const;
  IntSeries truncated(int new_hi) const;
  IntSeries scaled(const BigInt& c) const;

  /// Holomorphic QExpansion with offset 0 and scalar jets.
  QExpansion to_qexp() const;

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

 private:
  int lo_;
  std::vector<BigInt> coeffs_;
};

IntSeries pow(const IntSeries& a, int n);

/// Exact quotient a / b. The leading coefficient of b must divide every
/// intermediate remainder coefficient; throws std::domain_error otherwise.
IntSeries divide(const IntSeries& a, const IntSeries& b);

}  // namespace harmolift
