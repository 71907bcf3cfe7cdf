#include "derham/json_io.hpp"

#include "derham/form_io.hpp"
#include "derham/parse.hpp"

namespace derham {

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["g"] = Json::array();
  for (const Poly& gi : cert.g) j["g"].push_back(to_string(gi));
  j["h"] = to_string(cert.h);
  j["degree"] = cert.degree_bound_used;
  return j;
}

Certificate certificate_from_json(const Json& j, int nvars) {
  Certificate cert;
  for (const auto& s : j.at("g"))
    cert.g.push_back(parse_poly(s.get<std::string>(), nvars));
  cert.h = parse_poly(j.at("h").get<std::string>(), nvars);
  cert.degree_bound_used = j.at("degree").get<int>();
  return cert;
}

Json series_a_to_json(const SeriesA& s) {
  Json j;
  j["modulus_power"] = s.order() + 1;
  j["coeffs"] = Json::array();
  for (const Poly& c : s.coeffs) j["coeffs"].push_back(to_string(c));
  return j;
}

Json series_b_to_json(const SeriesB& s) {
  Json j;
  j["pole_order"] = s.pole_order;
  j["coeffs"] = Json::array();
  for (const QElem& c : s.coeffs) j["coeffs"].push_back(to_string(c.rep));
  return j;
}

Json aform_to_json(const AForm& w, int pole_order) {
  Json j;
  j["p"] = w.p;
  j["pole_order"] = pole_order;
  j["terms"] = Json::array();
  for (const auto& [J, c] : w.terms) {
    Json t;
    t["indices"] = Json::array();
    for (int i : J) t["indices"].push_back(i + 1); // 1-based on the wire
    t["coeff"] = to_string(c);
    j["terms"].push_back(t);
  }
  return j;
}

Json bform_to_json(const BForm& w) {
  Json j;
  j["p"] = w.p;
  j["pole_order"] = 0;
  j["terms"] = Json::array();
  for (const auto& [J, c] : w.terms) {
    Json t;
    t["indices"] = Json::array();
    for (int i : J) t["indices"].push_back(i + 1);
    t["coeff"] = to_string(c.rep);
    j["terms"].push_back(t);
  }
  return j;
}

LocForm loc_form_from_json(const Json& j, int nvars) {
  int p = j.at("p").get<int>();
  AForm num = aform_zero(nvars, p);
  for (const auto& t : j.at("terms")) {
    IndexSet J;
    for (const auto& i : t.at("indices")) J.push_back(i.get<int>() - 1);
    aform_add_term(num, J, parse_poly(t.at("coeff").get<std::string>(), nvars));
  }
  return LocForm{num, j.at("pole_order").get<int>()};
}

} // namespace derham
