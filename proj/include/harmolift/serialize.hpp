#pragma once

#include <json.hpp>

#include "harmolift/forms.hpp"
#include "harmolift/harmonic.hpp"
#include "harmolift/int_series.hpp"
#include "harmolift/qexp.hpp"

namespace harmolift {

/// {orientation, offset: [re, im], offset_d1: [re, im], lo, hi,
///  coeffs: [[re, im, dre, dim], ...]}
nlohmann::json to_json(const QExpansion& s);
QExpansion qexp_from_json(const nlohmann::json& j);

/// The QExpansion schema plus "exact": decimal strings of the integer coefficients.
nlohmann::json to_json(const IntSeries& s);

/// The QExpansion schema of the series part plus "linear_coeff" and "exact"
/// rational strings.
nlohmann::json to_json(const EtaLog& e);

/// {ell, r: [re, im], r_d1: [re, im], M, mu_inf, m_ell, trunc,
///  terms: [{kind, nu, coeff: [re, im, dre, dim]}, ...]}
nlohmann::json to_json(const HarmonicExpansion& h);
HarmonicExpansion harmonic_from_json(const nlohmann::json& j);

}  // namespace harmolift
