#pragma once

#include <string>

namespace mub {

// Floats in CSV output carry 17 significant digits.
std::string format_g17(double x);

}  // namespace mub
