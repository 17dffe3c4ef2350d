#pragma once

namespace qsg::tol {

inline constexpr double hermitian = 1e-12;
inline constexpr double normalization = 1e-12;
inline constexpr double probability_sum = 1e-12;
inline constexpr double positivity = 1e-12;
inline constexpr double expectation_imag = 1e-10;
inline constexpr double quadrature_rel = 1e-10;

}  // namespace qsg::tol
