#pragma once

#include <cmath>
#include <numbers>

namespace indcyc {

/// f(x) = x e^{-x}: increasing on [0,1], decreasing after, concave on [0,2].
inline double f_xexp(double x) { return x * std::exp(-x); }

inline double new_constant_value() { return 128.0 * std::numbers::e / 81.0; }
inline double pg_constant_value() { return 2.0 * std::numbers::e; }

}  // namespace indcyc
