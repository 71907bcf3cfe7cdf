#ifndef DERHAM_FORM_IO_HPP
#define DERHAM_FORM_IO_HPP

#include <string>

#include "derham/forms.hpp"

namespace derham {

/// Form grammar on top of the polynomial grammar: differentials `d(x)`,
/// wedge `/\`, optional trailing localization `/ f^s` (or `/ f`). The
/// default_pole_order applies when no trailing divisor is present.
LocForm parse_loc_form(const std::string& text, int nvars,
                       int default_pole_order = 0);

std::string to_string(const AForm& w);
std::string to_string(const BForm& w);
std::string to_string(const LocForm& w);

} // namespace derham

#endif
