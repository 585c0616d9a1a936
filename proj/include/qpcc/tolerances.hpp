#pragma once

#include <cstddef>

// Every numeric threshold used by the library lives here.
namespace qpcc::tol {

inline constexpr double kDefault = 1e-10;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = -1e-10;
inline constexpr double kNormalization = 1e-10;
inline constexpr double kOrthonormal = 1e-12;
inline constexpr double kMub = 1e-10;
inline constexpr double kPreNormalized = 1e-9;

inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

inline constexpr double kNegativeEigenvalue = -1e-11;
inline constexpr double kVariance = 1e-12;
inline constexpr double kImaginaryResidue = 1e-12;
inline constexpr double kProbabilityClamp = -1e-12;
inline constexpr double kProbabilityInvalid = -1e-10;

inline constexpr double kScanReportingFloor = 1e-6;

inline constexpr std::size_t kMaxDim = 64;

}  // namespace qpcc::tol
