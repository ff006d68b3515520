// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_COMMON_HPP
#define ELASTG_COMMON_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace elastg {

using Complex = std::complex<double>;
using Vec2 = std::array<double, 2>;
using Mat2c = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kImag{0.0, 1.0};

enum class ErrorCode {
  NonPositiveDiagonal,
  IndefiniteTensor,
  DecoupledMedium,
  BranchMismatch,
  SpectralSingularity,
  CaseMismatch,
  BranchCutHit,
  OriginSingularity,
  ProbeToleranceExceeded,
  OutOfDomain,
  PointTooClose,
  SingularSystem,
  DenominatorDegenerate,
  TooFewNodes,
  IncompatibleGrids,
  NoRealMode,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

// Library error with a machine-readable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

inline double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline double norm2(const Vec2& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }

}  // namespace elastg

#endif
