#pragma once

namespace gck::tol {

// Numerical contract thresholds. Everything downstream pins to these; tests
// assert at exactly these values unless an operation takes an override.

inline constexpr double kEig = 1e-9;          // PSD / conditional-negativity eigenvalue slack
inline constexpr double kSumRule = 1e-10;     // |sum_i p_i chi_i(e) - 1|
inline constexpr double kImagResidue = 1e-9;  // allowed imaginary part before error
inline constexpr double kBoundaryBand = 1e-7; // constraint-boundary band where routes may differ
inline constexpr double kInversion = 1e-12;   // l(C) vs l(C^{-1}) agreement
inline constexpr double kFusionInteger = 1e-6;
inline constexpr double kTableValidation = 1e-9;
inline constexpr double kProjection = 1e-9;     // projector orthogonality / completeness
inline constexpr double kSpectralMatch = 1e-8;  // formula vs dense eigenvalue multiset
inline constexpr double kClusterGap = 1e-7;     // eigenvalue clustering for multiplicities
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kIdempotent = 1e-10;
inline constexpr double kConvolution = 1e-9;

} // namespace gck::tol
