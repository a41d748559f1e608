#pragma once

#include <fmt/format.h>

#include <string>

namespace knotfold {

/// Every real number written to reports goes through here (12 significant digits).
inline std::string format_real(double x) { return fmt::format("{:.12g}", x); }

}  // namespace knotfold
