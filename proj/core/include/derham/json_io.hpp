#ifndef DERHAM_JSON_IO_HPP
#define DERHAM_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "derham/certificate.hpp"
#include "derham/completion.hpp"
#include "derham/forms.hpp"

namespace derham {

using Json = nlohmann::ordered_json;

// serialization schemas:
//   Certificate: {"g": [polystring...], "h": polystring, "degree": D}
//   SeriesA:     {"modulus_power": N+1, "coeffs": [polystring...]}
//   SeriesB:     {"pole_order": s, "coeffs": [polystring...]}
//   forms:       {"p": p, "pole_order": s,
//                 "terms": [{"indices": [...], "coeff": polystring}...]}
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j, int nvars);

Json series_a_to_json(const SeriesA& s);
Json series_b_to_json(const SeriesB& s);

Json aform_to_json(const AForm& w, int pole_order = 0);
Json bform_to_json(const BForm& w);
LocForm loc_form_from_json(const Json& j, int nvars);

} // namespace derham

#endif
