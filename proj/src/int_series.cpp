#include "harmolift/int_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace harmolift {

IntSeries::IntSeries(int lo, std::vector<BigInt> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("IntSeries: empty coefficient range");
  }
}

IntSeries IntSeries::one(int hi) {
  std::vector<BigInt> cs(static_cast<std::size_t>(hi) + 1);
  cs[0] = 1;
  return {0, std::move(cs)};
}

BigInt IntSeries::coeff(int nu) const {
  if (nu < lo_) {
    return 0;
  }
  if (nu > hi()) {
    throw std::out_of_range("IntSeries::coeff: index " + std::to_string(nu) + " beyond truncation");
  }
  return coeffs_[static_cast<std::size_t>(nu - lo_)];
}

IntSeries IntSeries::shifted(int k) const { return {lo_ + k, coeffs_}; }

IntSeries IntSeries::truncated(int new_hi) const {
  if (new_hi > hi() || new_hi < lo_) {
    throw std::invalid_argument("IntSeries::truncated: new hi outside [lo, hi]");
  }
  return {lo_, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + (new_hi - lo_ + 1))};
}

IntSeries IntSeries::scaled(const BigInt& c) const {
  auto cs = coeffs_;
  for (auto& x : cs) {
    x *= c;
  }
  return {lo_, std::move(cs)};
}

QExpansion IntSeries::to_qexp() const {
  std::vector<Jet> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    cs.emplace_back(c.convert_to<double>());
  }
  return {Orientation::holomorphic, Jet{}, lo_, std::move(cs)};
}

namespace {

IntSeries combine(const IntSeries& a, const IntSeries& b, int sign) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::min(a.hi(), b.hi());
  std::vector<BigInt> cs(static_cast<std::size_t>(hi - lo + 1));
  for (int nu = lo; nu <= hi; ++nu) {
    cs[static_cast<std::size_t>(nu - lo)] = sign > 0 ? a.coeff(nu) + b.coeff(nu) : a.coeff(nu) - b.coeff(nu);
  }
  return {lo, std::move(cs)};
}

}  // namespace

IntSeries operator+(const IntSeries& a, const IntSeries& b) { return combine(a, b, 1); }
IntSeries operator-(const IntSeries& a, const IntSeries& b) { return combine(a, b, -1); }

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const int lo = a.lo() + b.lo();
  const int hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
  std::vector<BigInt> cs(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t n = 0; n < cs.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      cs[n] += a.coeffs()[i] * b.coeffs()[n - i];
    }
  }
  return {lo, std::move(cs)};
}

IntSeries pow(const IntSeries& a, int n) {
  if (n < 0) {
    throw std::invalid_argument("pow: negative exponent");
  }
  IntSeries result = IntSeries::one(a.hi() - a.lo());
  for (int k = 0; k < n; ++k) {
    result = result * a;
  }
  return result;
}

IntSeries divide(const IntSeries& a, const IntSeries& b) {
  const BigInt& lead = b.coeffs().front();
  if (lead == 0) {
    throw std::domain_error("divide: leading coefficient of divisor is zero");
  }
  const int lo = a.lo() - b.lo();
  const int len = std::min(a.hi() - a.lo(), b.hi() - b.lo()) + 1;
  std::vector<BigInt> quot(static_cast<std::size_t>(len));
  for (int n = 0; n < len; ++n) {
    BigInt rem = a.coeffs()[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
      rem -= b.coeffs()[static_cast<std::size_t>(i)] * quot[static_cast<std::size_t>(n - i)];
    }
    if (rem % lead != 0) {
      throw std::domain_error("divide: quotient is not integral");
    }
    quot[static_cast<std::size_t>(n)] = rem / lead;
  }
  return {lo, std::move(quot)};
}

}  // namespace harmolift
