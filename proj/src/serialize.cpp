#include "harmolift/serialize.hpp"

#include <stdexcept>
#include <string>

namespace harmolift {

using nlohmann::json;

namespace {

json pair_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx pair_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected [re, im]");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json jet_json(const Jet& c) { return json::array({c.val.real(), c.val.imag(), c.d1.real(), c.d1.imag()}); }

Jet jet_from(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("expected [re, im, dre, dim]");
  }
  return {cplx(j.at(0).get<double>(), j.at(1).get<double>()), cplx(j.at(2).get<double>(), j.at(3).get<double>())};
}

}  // namespace

json to_json(const QExpansion& s) {
  json cs = json::array();
  for (const auto& c : s.coeffs()) {
    cs.push_back(jet_json(c));
  }
  return {{"orientation", s.orientation() == Orientation::holomorphic ? "holomorphic" : "antiholomorphic"},
          {"offset", pair_json(s.offset().val)},
          {"offset_d1", pair_json(s.offset().d1)},
          {"lo", s.lo()},
          {"hi", s.hi()},
          {"coeffs", cs}};
}

QExpansion qexp_from_json(const json& j) {
  const std::string o = j.at("orientation").get<std::string>();
  if (o != "holomorphic" && o != "antiholomorphic") {
    throw std::invalid_argument("unknown orientation '" + o + "'");
  }
  std::vector<Jet> cs;
  for (const auto& c : j.at("coeffs")) {
    cs.push_back(jet_from(c));
  }
  const int lo = j.at("lo").get<int>();
  if (j.contains("hi") && j.at("hi").get<int>() != lo + static_cast<int>(cs.size()) - 1) {
    throw std::invalid_argument("hi inconsistent with the number of coefficients");
  }
  const Jet offset(pair_from(j.at("offset")), j.contains("offset_d1") ? pair_from(j.at("offset_d1")) : cplx{});
  return {o == "holomorphic" ? Orientation::holomorphic : Orientation::antiholomorphic, offset, lo, std::move(cs)};
}

json to_json(const IntSeries& s) {
  json j = to_json(s.to_qexp());
  json exact = json::array();
  for (const auto& c : s.coeffs()) {
    exact.push_back(c.str());
  }
  j["exact"] = exact;
  return j;
}

json to_json(const EtaLog& e) {
  json j = to_json(e.series);
  j["linear_coeff"] = pair_json(e.linear_coeff);
  json exact = json::array();
  for (const auto& c : e.exact) {
    exact.push_back(c.str());
  }
  j["exact"] = exact;
  return j;
}

json to_json(const HarmonicExpansion& h) {
  json terms = json::array();
  for (const auto& t : h.terms) {
    terms.push_back({{"kind", to_string(t.kind)}, {"nu", t.nu}, {"coeff", jet_json(t.coeff)}});
  }
  return {{"ell", h.ell},       {"r", pair_json(h.r.val)}, {"r_d1", pair_json(h.r.d1)}, {"M", h.M},
          {"mu_inf", h.mu_inf}, {"m_ell", h.m_ell},        {"trunc", h.trunc},          {"terms", terms}};
}

HarmonicExpansion harmonic_from_json(const json& j) {
  HarmonicExpansion h;
  h.ell = j.at("ell").get<int>();
  h.r = Jet(pair_from(j.at("r")), j.contains("r_d1") ? pair_from(j.at("r_d1")) : cplx{});
  h.M = j.at("M").get<int>();
  h.mu_inf = j.at("mu_inf").get<int>();
  h.m_ell = j.at("m_ell").get<int>();
  h.trunc = j.at("trunc").get<int>();
  for (const auto& t : j.at("terms")) {
    h.terms.push_back({term_kind_from_string(t.at("kind").get<std::string>().c_str()), t.at("nu").get<int>(),
                       jet_from(t.at("coeff"))});
  }
  h.validate();
  return h;
}

}  // namespace harmolift
