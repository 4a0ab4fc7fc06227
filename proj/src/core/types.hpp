// Shared scalar/vector/matrix types and the library error model.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nafdm {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

// Error categories; mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  InvalidParameter = 1,
  InvalidDimension = 2,
  FastPathUnavailable = 3,
  InsufficientCp = 4,
  NumericalError = 5,
  ParseError = 6,
  IoError = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Exact ratio of small integers; used for the bandwidth compression factor
// so that N' = N/alpha is an integer test, not a floating-point one.
struct Rational {
  long long num = 1;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    require(d > 0 && n > 0, ErrorCode::InvalidParameter,
            "rational must be positive with positive denominator");
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// e^{i*2*pi*turns}. Arguments are reduced before the sin/cos so that large
// phase accumulations (chirp indices, twiddle products) keep ~1e-15 accuracy.
inline Complex cis_turns(double turns) {
  const double r = turns - std::floor(turns);  // [0,1)
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::polar(1.0, two_pi * r);
}

}  // namespace nafdm
