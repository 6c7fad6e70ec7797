#pragma once

#include <stdexcept>
#include <string>

namespace helixlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractViolation : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  double determinant;
  explicit SingularMatrix(double d)
      : Error("singular matrix, det = " + std::to_string(d)), determinant(d) {}
};

struct DegenerateImmersion : Error {
  using Error::Error;
};

struct VerticalDirection : Error {
  using Error::Error;
};

struct NonComplexSubmanifold : Error {
  using Error::Error;
};

struct ImmersionDegeneratesAtT : Error {
  double t;
  explicit ImmersionDegeneratesAtT(double t_)
      : Error("offset immersion degenerates at t = " + std::to_string(t_)), t(t_) {}
};

struct SingularOffsetMetric : Error {
  using Error::Error;
};

struct PoleAt : Error {
  double s;
  explicit PoleAt(double s_)
      : Error("trace function has a pole near s = " + std::to_string(s_)), s(s_) {}
};

struct InsufficientGrid : Error {
  using Error::Error;
};

struct NotEikonal : Error {
  using Error::Error;
};

struct NonPositiveDefinite : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace helixlab
