#pragma once

#include <optional>
#include <vector>

#include "harmolift/jet.hpp"

namespace harmolift {

/// Basis function attached to a Fourier term at the cusp.
///
///  - hol:       q^{nu + r/12}
///  - inc_gamma: (-4 pi (nu + r/12))^{l+r-1} q^{nu+r/12} Gamma(1-l-r, -4 pi (nu + r/12) y)
///  - m_type:    q^{nu + r/12} M_{l+r}(4 pi (nu + r/12); y)
enum class TermKind { hol, inc_gamma, m_type };

const char* to_string(TermKind k);
TermKind term_kind_from_string(const char* s);

struct LiftTerm {
  TermKind kind{TermKind::hol};
  int nu{};
  Jet coeff;
};

/// Fourier expansion at the cusp of a normalized harmonic lift of weight
/// ell + r. Holomorphic coefficients are supplied by the caller; the
/// expansion only records and checks them.
///
/// Range table (per term kind):
///   inc_gamma: nu <= -max(M, mu_inf)
///   m_type:    1 - M <= nu <= -mu_inf
///   hol:       nu >= 1 - m_ell
struct HarmonicExpansion {
  int ell{};
  Jet r;
  int M{1};
  int mu_inf{};
  int m_ell{};
  std::vector<LiftTerm> terms;
  int trunc{};

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;

  std::optional<LiftTerm> find(TermKind kind, int nu) const;
};

}  // namespace harmolift
